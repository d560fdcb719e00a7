"""Entwined modules: validation, induced modules, morphisms, and the passage
to and from modules of the smash product algebra.

Tensors:

* module action     ``action[s][i][t]``:   m_s . a_i = sum_t action[s][i][t] m_t
* module coaction   ``coaction[s][t][p]``: rho(m_s) = sum m_t (x) c_p

The smash product X lives on B (x) A with B the coordinate dual of C carrying
the opposite convolution product; its basis pairs are ordered (dual-basis
element, algebra element) and flattened as u*dimA + i.  An entwined module M
becomes an X-module via m.(xi (x) a) = m_(0).a <m_(1), xi> and converts back
with the coaction read off against the dual basis.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import List, Optional, Sequence, Tuple

from .fields import Field, Scalar
from .linalg import Mat
from .structures import (Entwining, FiniteAlgebra, FiniteCoalgebra,
                         ValidationReport, zeros2, zeros3)
from .frobint import SmashAlgebra, build_smash


# ---------------------------------------------------------------------------
# plain modules and comodules
# ---------------------------------------------------------------------------

@dataclass
class AlgebraModule:
    """Right module over a FiniteAlgebra."""

    algebra: FiniteAlgebra
    dim: int
    action: list  # action[s][i][t]

    def act(self, x: Sequence[Scalar], a: Sequence[Scalar]) -> List[Scalar]:
        F = self.algebra.field
        out = [F.zero] * self.dim
        for s, xs in enumerate(x):
            if xs == 0:
                continue
            for i, ai in enumerate(a):
                if ai == 0:
                    continue
                coef = F.mul(xs, ai)
                for t in range(self.dim):
                    v = self.action[s][i][t]
                    if v != 0:
                        out[t] = F.add(out[t], F.mul(coef, v))
        return out


@dataclass
class CoalgebraComodule:
    """Right comodule over a FiniteCoalgebra."""

    coalgebra: FiniteCoalgebra
    dim: int
    coaction: list  # coaction[s][t][p]


def validate_module(mod: AlgebraModule) -> ValidationReport:
    A = mod.algebra
    F, n, d = A.field, A.dim, mod.dim
    act = mod.action
    report = ValidationReport()
    for s in range(d):
        for t in range(d):
            acc = F.zero
            for i in range(n):
                acc = F.add(acc, F.mul(A.unit[i], act[s][i][t]))
            if acc != (F.one if s == t else F.zero):
                report.add("action unit law", (s,), f"component {t}")
    for s in range(d):
        for i in range(n):
            for j in range(n):
                for t in range(d):
                    lhs = F.zero
                    for r in range(d):
                        lhs = F.add(lhs, F.mul(act[s][i][r], act[r][j][t]))
                    rhs = F.zero
                    for k in range(n):
                        rhs = F.add(rhs, F.mul(A.mult[i][j][k], act[s][k][t]))
                    if lhs != rhs:
                        report.add("action associativity", (s, i, j), f"component {t}")
                        break
    return report


def validate_comodule(com: CoalgebraComodule) -> ValidationReport:
    C = com.coalgebra
    F, m, d = C.field, C.dim, com.dim
    co = com.coaction
    report = ValidationReport()
    for s in range(d):
        for t in range(d):
            acc = F.zero
            for p in range(m):
                acc = F.add(acc, F.mul(co[s][t][p], C.counit[p]))
            if acc != (F.one if s == t else F.zero):
                report.add("coaction counit law", (s,), f"component {t}")
    for s in range(d):
        bad = None
        for t in range(d):
            for p in range(m):
                for q in range(m):
                    # (rho (x) C) rho : coefficient of m_t (x) c_p (x) c_q
                    lhs = F.zero
                    for r in range(d):
                        lhs = F.add(lhs, F.mul(co[s][r][q], co[r][t][p]))
                    rhs = F.zero
                    for w in range(m):
                        rhs = F.add(rhs, F.mul(co[s][t][w], C.comult[w][p][q]))
                    if lhs != rhs:
                        bad = (t, p, q)
                        break
                if bad:
                    break
            if bad:
                break
        if bad:
            report.add("coaction coassociativity", (s,), f"at output {bad}")
    return report


def regular_module(a: FiniteAlgebra) -> AlgebraModule:
    return AlgebraModule(a, a.dim, [[list(a.mult[s][i]) for i in range(a.dim)]
                                    for s in range(a.dim)])


def regular_comodule(c: FiniteCoalgebra) -> CoalgebraComodule:
    return CoalgebraComodule(c, c.dim, [[list(c.comult[s][t]) for t in range(c.dim)]
                                        for s in range(c.dim)])


def dual_comodule(c: FiniteCoalgebra) -> CoalgebraComodule:
    """C* as a right C-comodule: xi_(0) <xi_(1), xi'> = xi' xi (convolution)."""
    F, m = c.field, c.dim
    co = zeros3(F, m, m, m)
    for u in range(m):
        for t in range(m):
            for v in range(m):
                co[u][t][v] = c.comult[t][v][u]
    return CoalgebraComodule(c, m, co)


# ---------------------------------------------------------------------------
# entwined modules
# ---------------------------------------------------------------------------

@dataclass
class EntwinedModule:
    """Right A-module, right C-comodule with psi-compatible (co)action."""

    entwining: Entwining
    dim: int
    action: list    # action[s][i][t]
    coaction: list  # coaction[s][t][p]

    def __post_init__(self):
        n, m, d = self.entwining.algebra.dim, self.entwining.coalgebra.dim, self.dim
        if len(self.action) != d or any(
                len(r) != n or any(len(x) != d for x in r) for r in self.action):
            raise ValueError("entwined-module action tensor has inconsistent shape")
        if len(self.coaction) != d or any(
                len(r) != d or any(len(x) != m for x in r) for r in self.coaction):
            raise ValueError("entwined-module coaction tensor has inconsistent shape")

    @property
    def field(self) -> Field:
        return self.entwining.field

    def as_module(self) -> AlgebraModule:
        return AlgebraModule(self.entwining.algebra, self.dim, self.action)

    def as_comodule(self) -> CoalgebraComodule:
        return CoalgebraComodule(self.entwining.coalgebra, self.dim, self.coaction)

    def act(self, x: Sequence[Scalar], a: Sequence[Scalar]) -> List[Scalar]:
        return self.as_module().act(x, a)


def validate_entwined_module(mod: EntwinedModule) -> ValidationReport:
    report = validate_module(mod.as_module())
    report.extend(validate_comodule(mod.as_comodule()))
    e = mod.entwining
    F = mod.field
    n, m, d = e.algebra.dim, e.coalgebra.dim, mod.dim
    act, co, psi = mod.action, mod.coaction, e.psi
    # compatibility: rho(m.a) = m_(0).a_alpha (x) m_(1)^alpha
    for s in range(d):
        for i in range(n):
            bad = None
            for t in range(d):
                for q in range(m):
                    lhs = F.zero
                    for r in range(d):
                        lhs = F.add(lhs, F.mul(act[s][i][r], co[r][t][q]))
                    rhs = F.zero
                    for r in range(d):
                        for p in range(m):
                            if co[s][r][p] == 0:
                                continue
                            for j in range(n):
                                rhs = F.add(rhs, F.mul(co[s][r][p],
                                                       F.mul(psi[p][i][j][q], act[r][j][t])))
                    if lhs != rhs:
                        bad = (t, q)
                        break
                if bad:
                    break
            if bad:
                report.add("action/coaction compatibility", (s, i), f"at output {bad}")
    return report


def induce_from_module(mod: AlgebraModule, e: Entwining) -> EntwinedModule:
    """M (x) C with coaction M (x) Delta and action (m (x) c).a = m.psi(c (x) a)."""
    if mod.algebra is not e.algebra and mod.algebra != e.algebra:
        raise ValueError("module is not over the entwining's algebra")
    F = e.field
    n, m, dm = e.algebra.dim, e.coalgebra.dim, mod.dim
    d = dm * m
    act = zeros3(F, d, n, d)
    co = zeros3(F, d, d, m)
    for s in range(dm):
        for p in range(m):
            row = s * m + p
            for i in range(n):
                for j in range(n):
                    for q in range(m):
                        v = e.psi[p][i][j][q]
                        if v == 0:
                            continue
                        for t in range(dm):
                            w = mod.action[s][j][t]
                            if w != 0:
                                col = t * m + q
                                act[row][i][col] = F.add(act[row][i][col], F.mul(v, w))
            for q in range(m):
                for r in range(m):
                    v = e.coalgebra.comult[p][q][r]
                    if v != 0:
                        co[row][s * m + q][r] = F.add(co[row][s * m + q][r], v)
    return EntwinedModule(e, d, act, co)


def induce_from_comodule(com: CoalgebraComodule, e: Entwining) -> EntwinedModule:
    """V (x) A with action V (x) mu and coaction v (x) a -> v_(0) (x) psi(v_(1) (x) a)."""
    if com.coalgebra is not e.coalgebra and com.coalgebra != e.coalgebra:
        raise ValueError("comodule is not over the entwining's coalgebra")
    F = e.field
    n, m, dv = e.algebra.dim, e.coalgebra.dim, com.dim
    d = dv * n
    act = zeros3(F, d, n, d)
    co = zeros3(F, d, d, m)
    for s in range(dv):
        for i in range(n):
            row = s * n + i
            for j in range(n):
                for k in range(n):
                    v = e.algebra.mult[i][j][k]
                    if v != 0:
                        act[row][j][s * n + k] = F.add(act[row][j][s * n + k], v)
            for t in range(dv):
                for p in range(m):
                    w = com.coaction[s][t][p]
                    if w == 0:
                        continue
                    for j in range(n):
                        for q in range(m):
                            v = e.psi[p][i][j][q]
                            if v != 0:
                                col = t * n + j
                                co[row][col][q] = F.add(co[row][col][q], F.mul(w, v))
    return EntwinedModule(e, d, act, co)


# ---------------------------------------------------------------------------
# morphisms
# ---------------------------------------------------------------------------

def module_map_failures(f: Mat, src: AlgebraModule, dst: AlgebraModule) -> ValidationReport:
    """Right A-linearity of the matrix f (f(m_s) = sum_t f[t][s] n_t)."""
    if f.rows != dst.dim or f.cols != src.dim:
        raise ValueError(f"map matrix is {f.rows}x{f.cols}, expected {dst.dim}x{src.dim}")
    F = src.algebra.field
    n = src.algebra.dim
    report = ValidationReport()
    for s in range(src.dim):
        base = [F.one if t == s else F.zero for t in range(src.dim)]
        for i in range(n):
            a = [F.one if t == i else F.zero for t in range(n)]
            lhs = f.mul_vec(src.act(base, a))
            rhs = dst.act(f.mul_vec(base), a)
            if lhs != rhs:
                report.add("right A-linearity", (s, i))
    return report


def comodule_map_failures(f: Mat, src: CoalgebraComodule, dst: CoalgebraComodule) -> ValidationReport:
    """Right C-colinearity of the matrix f."""
    if f.rows != dst.dim or f.cols != src.dim:
        raise ValueError(f"map matrix is {f.rows}x{f.cols}, expected {dst.dim}x{src.dim}")
    F = src.coalgebra.field
    m = src.coalgebra.dim
    report = ValidationReport()
    for s in range(src.dim):
        for t in range(dst.dim):
            for p in range(m):
                # coefficient of n_t (x) c_p in rho_N(f(m_s)) vs (f (x) C) rho_M(m_s)
                lhs = F.zero
                for r in range(dst.dim):
                    lhs = F.add(lhs, F.mul(f.at(r, s), dst.coaction[r][t][p]))
                rhs = F.zero
                for r in range(src.dim):
                    rhs = F.add(rhs, F.mul(src.coaction[s][r][p], f.at(t, r)))
                if lhs != rhs:
                    report.add("right C-colinearity", (s,), f"at output ({t}, {p})")
                    break
    return report


def is_morphism(f: Mat, src: EntwinedModule, dst: EntwinedModule) -> ValidationReport:
    """Morphism check: right A-linear and right C-colinear."""
    report = module_map_failures(f, src.as_module(), dst.as_module())
    report.extend(comodule_map_failures(f, src.as_comodule(), dst.as_comodule()))
    return report


def direct_sum(a: EntwinedModule, b: EntwinedModule) -> Tuple[EntwinedModule, Mat, Mat, Mat, Mat]:
    """a (+) b with (inj_a, inj_b, proj_a, proj_b) as matrices."""
    if a.entwining is not b.entwining and a.entwining != b.entwining:
        raise ValueError("summands live over different entwinings")
    F = a.field
    e = a.entwining
    n, m = e.algebra.dim, e.coalgebra.dim
    d = a.dim + b.dim
    act = zeros3(F, d, n, d)
    co = zeros3(F, d, d, m)
    for s in range(a.dim):
        for i in range(n):
            for t in range(a.dim):
                act[s][i][t] = a.action[s][i][t]
        for t in range(a.dim):
            for p in range(m):
                co[s][t][p] = a.coaction[s][t][p]
    for s in range(b.dim):
        for i in range(n):
            for t in range(b.dim):
                act[a.dim + s][i][a.dim + t] = b.action[s][i][t]
        for t in range(b.dim):
            for p in range(m):
                co[a.dim + s][a.dim + t][p] = b.coaction[s][t][p]
    total = EntwinedModule(e, d, act, co)
    inj_a = Mat.from_entries(F, d, a.dim, [(s, s, F.one) for s in range(a.dim)])
    inj_b = Mat.from_entries(F, d, b.dim, [(a.dim + s, s, F.one) for s in range(b.dim)])
    proj_a = Mat.from_entries(F, a.dim, d, [(s, s, F.one) for s in range(a.dim)])
    proj_b = Mat.from_entries(F, b.dim, d, [(s, a.dim + s, F.one) for s in range(b.dim)])
    return total, inj_a, inj_b, proj_a, proj_b


# ---------------------------------------------------------------------------
# smash-product modules
# ---------------------------------------------------------------------------

@dataclass
class SmashModule:
    """Right module over the smash product X on B (x) A."""

    smash: SmashAlgebra
    dim: int
    action: list  # action[s][x][t] with x = u*dimA + i

    def as_module(self) -> AlgebraModule:
        return AlgebraModule(self.smash.algebra, self.dim, self.action)


def validate_smash_module(sm: SmashModule) -> ValidationReport:
    return validate_module(sm.as_module())


def to_smash_module(mod: EntwinedModule, smash: Optional[SmashAlgebra] = None) -> SmashModule:
    """View an entwined module as an X-module: m.(xi (x) a) = m_(0).a <m_(1), xi>."""
    e = mod.entwining
    if smash is None:
        smash = build_smash(e)
    F = mod.field
    n, m, d = e.algebra.dim, e.coalgebra.dim, mod.dim
    nx = n * m
    act = zeros3(F, d, nx, d)
    for s in range(d):
        for u in range(m):
            for i in range(n):
                x = u * n + i
                for t in range(d):
                    acc = F.zero
                    for r in range(d):
                        w = mod.coaction[s][r][u]
                        if w != 0:
                            acc = F.add(acc, F.mul(w, mod.action[r][i][t]))
                    act[s][x][t] = acc
    return SmashModule(smash, d, act)


def from_smash_module(sm: SmashModule) -> EntwinedModule:
    """Recover the entwined structure: A acts through 1_B (x) a, the coaction
    is read off from the action of the dual basis elements xi_u (x) 1_A."""
    e = sm.smash.entwining
    F = e.field
    n, m, d = e.algebra.dim, e.coalgebra.dim, sm.dim
    eps = e.coalgebra.counit
    ua = e.algebra.unit
    act = zeros3(F, d, n, d)
    co = zeros3(F, d, d, m)
    for s in range(d):
        for i in range(n):
            for t in range(d):
                acc = F.zero
                for u in range(m):
                    if eps[u] != 0:
                        acc = F.add(acc, F.mul(eps[u], sm.action[s][u * n + i][t]))
                act[s][i][t] = acc
        for u in range(m):
            for t in range(d):
                acc = F.zero
                for i in range(n):
                    if ua[i] != 0:
                        acc = F.add(acc, F.mul(ua[i], sm.action[s][u * n + i][t]))
                co[s][t][u] = acc
    return EntwinedModule(e, d, act, co)
