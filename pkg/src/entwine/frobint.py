"""Factorisation of psi through the dual, the smash product algebra, both
notions of integral, and the Frobenius criteria as certificate-producing
decision procedures.

Coordinates:

* psibar tensor ``pb[i][u][t][j]``: psibar(a_i (x) xi_u) = sum pb[i][u][t][j] xi_t (x) a_j,
  where {xi_u} is the coordinate dual basis of C.
* smash product X on B (x) A, basis pairs (b_u, a_i) flattened u*dimA + i,
  product (b (x) a)(b' (x) a') = b psibar(a (x) b') a' with B the opposite
  convolution algebra of C.
* a map lambda : B -> A is stored flat with index i*dimC + u (coefficient of
  a_i in lambda(b_u)); an element x of A (x) C is stored flat with index
  i*dimC + p.  Under these conventions the canonical identification of
  Hom(B, A) with A (x) C is the identity on coordinates.

Search procedures are certificates-or-silence: a failed seeded search
returns "no certificate found", never a proof of non-existence.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field as dc_field
from typing import List, Optional, Sequence, Tuple, Union

from .fields import Field, Scalar
from .linalg import Mat, basis_vector, is_bijective, kernel_basis, rank_of, vec_is_zero
from .structures import (Entwining, FiniteAlgebra, ValidationReport,
                         dual_opposite_algebra, left_hit, right_hit,
                         validate_algebra, zeros2, zeros3, zeros4)


# ---------------------------------------------------------------------------
# psibar
# ---------------------------------------------------------------------------

@dataclass
class PsiBar:
    """The unique map A (x) C* -> C* (x) A compatible with psi under evaluation."""

    entwining: Entwining
    tensor: list  # pb[i][u][t][j]


def build_psi_bar(e: Entwining) -> PsiBar:
    """Construct psibar from the dual basis and certify the defining diagram.

    The defining identity, for all c, a, xi:
        (ev_C (x) A)(c (x) psibar(a (x) xi)) = (A (x) ev_C)(psi(c (x) a) (x) xi),
    is checked on all basis triples, and uniqueness is certified by solving
    the identity as a linear system in an unknown tensor: its homogeneous
    solution space must be zero.
    """
    F = e.field
    n, m = e.algebra.dim, e.coalgebra.dim
    pb = zeros4(F, n, m, m, n)
    for i in range(n):
        for u in range(m):
            for t in range(m):
                for j in range(n):
                    pb[i][u][t][j] = e.psi[t][i][j][u]
    # exhaustive diagram check on basis triples (p, i, u)
    for p in range(m):
        for i in range(n):
            for u in range(m):
                for j in range(n):
                    lhs = pb[i][u][p][j]
                    rhs = e.psi[p][i][j][u]
                    if lhs != rhs:
                        raise AssertionError(
                            f"psibar diagram fails at (c_{p}, a_{i}, xi_{u})")  # pragma: no cover
    # uniqueness: the homogeneous defining system has only the zero solution
    cols = n * m * m * n
    rows = []
    for p in range(m):
        for i in range(n):
            for u in range(m):
                for j in range(n):
                    row = [F.zero] * cols
                    row[((i * m + u) * m + p) * n + j] = F.one
                    rows.append(row)
    ker = kernel_basis(Mat.from_rows(F, rows))
    if ker:
        raise AssertionError("psibar is not unique")  # pragma: no cover
    return PsiBar(e, pb)


# ---------------------------------------------------------------------------
# smash product
# ---------------------------------------------------------------------------

@dataclass
class SmashAlgebra:
    """The smash product X = B # A together with its building blocks."""

    entwining: Entwining
    psibar: PsiBar
    dual_op: FiniteAlgebra  # B = C^{*op}
    algebra: FiniteAlgebra  # X on B (x) A

    @property
    def field(self) -> Field:
        return self.entwining.field

    def embed_a(self, a: Sequence[Scalar]) -> List[Scalar]:
        """a -> 1_B (x) a."""
        F = self.field
        n, m = self.entwining.algebra.dim, self.entwining.coalgebra.dim
        eps = self.entwining.coalgebra.counit
        out = [F.zero] * (n * m)
        for u in range(m):
            if eps[u] == 0:
                continue
            for i, ai in enumerate(a):
                if ai != 0:
                    out[u * n + i] = F.add(out[u * n + i], F.mul(eps[u], ai))
        return out

    def embed_b(self, b: Sequence[Scalar]) -> List[Scalar]:
        """b -> b (x) 1_A."""
        F = self.field
        n, m = self.entwining.algebra.dim, self.entwining.coalgebra.dim
        ua = self.entwining.algebra.unit
        out = [F.zero] * (n * m)
        for u, bu in enumerate(b):
            if bu == 0:
                continue
            for i in range(n):
                if ua[i] != 0:
                    out[u * n + i] = F.add(out[u * n + i], F.mul(bu, ua[i]))
        return out


def build_smash(e: Entwining, psibar: Optional[PsiBar] = None) -> SmashAlgebra:
    """X = B # A with product (b (x) a)(b' (x) a') = b psibar(a (x) b') a'."""
    F = e.field
    n, m = e.algebra.dim, e.coalgebra.dim
    if psibar is None:
        psibar = build_psi_bar(e)
    pb = psibar.tensor
    b_alg = dual_opposite_algebra(e.coalgebra)
    rep = validate_algebra(b_alg)
    if not rep.ok:
        raise AssertionError("dual opposite algebra failed validation")  # pragma: no cover
    nx = n * m
    mult = zeros3(F, nx, nx, nx)
    ma, mb = e.algebra.mult, b_alg.mult
    for u in range(m):
        for i in range(n):
            row = u * n + i
            for v in range(m):
                for j in range(n):
                    col = v * n + j
                    # b_u psibar(a_i (x) b_v) a_j
                    for t in range(m):
                        for s in range(n):
                            c1 = pb[i][v][t][s]
                            if c1 == 0:
                                continue
                            for w in range(m):
                                c2 = mb[u][t][w]
                                if c2 == 0:
                                    continue
                                for l in range(n):
                                    c3 = ma[s][j][l]
                                    if c3 != 0:
                                        k = w * n + l
                                        mult[row][col][k] = F.add(
                                            mult[row][col][k], F.mul(F.mul(c1, c2), c3))
    unit = [F.zero] * nx
    eps, ua = e.coalgebra.counit, e.algebra.unit
    for u in range(m):
        for i in range(n):
            unit[u * n + i] = F.mul(eps[u], ua[i])
    x = SmashAlgebra(e, psibar, b_alg, FiniteAlgebra(F, nx, mult, unit))
    rep = validate_algebra(x.algebra)
    if not rep.ok:
        raise AssertionError("smash product fails algebra axioms:\n" + rep.describe())
    _check_embeddings(x)
    return x


def _check_embeddings(x: SmashAlgebra):
    F = x.field
    A, B, X = x.entwining.algebra, x.dual_op, x.algebra
    for i in range(A.dim):
        for j in range(A.dim):
            ei, ej = basis_vector(F, A.dim, i), basis_vector(F, A.dim, j)
            lhs = x.embed_a(A.multiply(ei, ej))
            rhs = X.multiply(x.embed_a(ei), x.embed_a(ej))
            if lhs != rhs:
                raise AssertionError(f"A-embedding not multiplicative at ({i},{j})")
    for u in range(B.dim):
        for v in range(B.dim):
            eu, ev = basis_vector(F, B.dim, u), basis_vector(F, B.dim, v)
            lhs = x.embed_b(B.multiply(eu, ev))
            rhs = X.multiply(x.embed_b(eu), x.embed_b(ev))
            if lhs != rhs:
                raise AssertionError(f"B-embedding not multiplicative at ({u},{v})")
    if x.embed_a(A.unit_vector()) != X.unit_vector():
        raise AssertionError("A-embedding does not preserve the unit")
    if x.embed_b(B.unit_vector()) != X.unit_vector():
        raise AssertionError("B-embedding does not preserve the unit")


# ---------------------------------------------------------------------------
# the (A, X)-bimodule Hom(B, A) and integrals
# ---------------------------------------------------------------------------

def hom_apply(x: SmashAlgebra, lam: Sequence[Scalar], u: int) -> List[Scalar]:
    """lambda(b_u) as a vector in A (lambda stored flat, index i*dimC + u)."""
    n, m = x.entwining.algebra.dim, x.entwining.coalgebra.dim
    return [lam[i * m + u] for i in range(n)]


def hom_left_act(x: SmashAlgebra, a: Sequence[Scalar], lam: Sequence[Scalar]) -> List[Scalar]:
    """(a . f)(b) = a f(b)."""
    F = x.field
    A = x.entwining.algebra
    n, m = A.dim, x.entwining.coalgebra.dim
    out = [F.zero] * (n * m)
    for u in range(m):
        img = A.multiply(a, hom_apply(x, lam, u))
        for i in range(n):
            out[i * m + u] = img[i]
    return out


def hom_right_act(x: SmashAlgebra, lam: Sequence[Scalar], xv: Sequence[Scalar]) -> List[Scalar]:
    """(f . (b (x) a'))(b') = f(b b'_i) a'^i, extended linearly over X."""
    F = x.field
    A, B = x.entwining.algebra, x.dual_op
    n, m = A.dim, x.entwining.coalgebra.dim
    pb = x.psibar.tensor
    out = [F.zero] * (n * m)
    for v in range(m):
        for j in range(n):
            coef = xv[v * n + j]
            if coef == 0:
                continue
            for u in range(m):
                acc = [F.zero] * n
                for t in range(m):
                    for jj in range(n):
                        c1 = pb[j][u][t][jj]
                        if c1 == 0:
                            continue
                        # f(b_v b_t) * a_jj
                        fv = [F.zero] * n
                        for w in range(m):
                            c2 = B.mult[v][t][w]
                            if c2 == 0:
                                continue
                            for i in range(n):
                                val = lam[i * m + w]
                                if val != 0:
                                    fv[i] = F.add(fv[i], F.mul(c2, val))
                        prod = A.multiply(fv, basis_vector(F, n, jj))
                        for i in range(n):
                            if prod[i] != 0:
                                acc[i] = F.add(acc[i], F.mul(c1, prod[i]))
                for i in range(n):
                    if acc[i] != 0:
                        out[i * m + u] = F.add(out[i * m + u], F.mul(coef, acc[i]))
    return out


def is_smash_integral(x: SmashAlgebra, lam: Sequence[Scalar]) -> bool:
    """a . lambda = lambda . a for all basis a, via the bimodule structure."""
    F = x.field
    n = x.entwining.algebra.dim
    for k in range(n):
        a = basis_vector(F, n, k)
        if hom_left_act(x, a, lam) != hom_right_act(x, lam, x.embed_a(a)):
            return False
    return True


@dataclass
class IntegralSpace:
    """Basis of a space of integrals (exact vectors, flat index i*dimC + u)."""

    kind: str  # "smash" | "entwining"
    entwining: Entwining
    basis: List[List[Scalar]]

    @property
    def dim(self) -> int:
        return len(self.basis)


def smash_integrals(x: SmashAlgebra) -> IntegralSpace:
    """Basis of Int(B # A) = {lambda : B -> A with a.lambda = lambda.a}."""
    e = x.entwining
    F = x.field
    n, m = e.algebra.dim, e.coalgebra.dim
    ma = e.algebra.mult
    pb = x.psibar.tensor
    rows = []
    for k in range(n):
        for v in range(m):
            for l in range(n):
                row = [F.zero] * (n * m)
                for i in range(n):
                    row[i * m + v] = F.add(row[i * m + v], ma[k][i][l])
                for t in range(m):
                    for j in range(n):
                        c1 = pb[k][v][t][j]
                        if c1 == 0:
                            continue
                        for i in range(n):
                            c = F.mul(c1, ma[i][j][l])
                            if c != 0:
                                row[i * m + t] = F.sub(row[i * m + t], c)
                rows.append(row)
    basis = kernel_basis(Mat.from_rows(F, rows))
    for lam in basis:
        if not is_smash_integral(x, lam):
            raise AssertionError("smash integral failed re-verification")  # pragma: no cover
    return IntegralSpace("smash", e, basis)


def is_entwining_integral(e: Entwining, x: Sequence[Scalar]) -> bool:
    """sum a a_i (x) c_i = sum a_i psi(c_i (x) a) for all basis a."""
    F = e.field
    A = e.algebra
    n, m = A.dim, e.coalgebra.dim
    for k in range(n):
        a = basis_vector(F, n, k)
        lhs = zeros2(F, n, m)
        for i in range(n):
            for p in range(m):
                v = x[i * m + p]
                if v == 0:
                    continue
                img = A.multiply(a, basis_vector(F, n, i))
                for l in range(n):
                    if img[l] != 0:
                        lhs[l][p] = F.add(lhs[l][p], F.mul(v, img[l]))
        rhs = zeros2(F, n, m)
        for i in range(n):
            for p in range(m):
                v = x[i * m + p]
                if v == 0:
                    continue
                img = e.apply_psi(basis_vector(F, m, p), a)
                for j in range(n):
                    for q in range(m):
                        if img[j][q] == 0:
                            continue
                        prod = A.multiply(basis_vector(F, n, i), basis_vector(F, n, j))
                        for l in range(n):
                            if prod[l] != 0:
                                rhs[l][q] = F.add(rhs[l][q],
                                                  F.mul(F.mul(v, img[j][q]), prod[l]))
        if lhs != rhs:
            return False
    return True


def entwining_integrals(e: Entwining) -> IntegralSpace:
    """Basis of {x in A (x) C : a.x = x.a}, the right action being
    (a' (x) c).a = a' psi(c (x) a)."""
    F = e.field
    n, m = e.algebra.dim, e.coalgebra.dim
    ma, psi = e.algebra.mult, e.psi
    rows = []
    for k in range(n):
        for l in range(n):
            for q in range(m):
                row = [F.zero] * (n * m)
                for i in range(n):
                    row[i * m + q] = F.add(row[i * m + q], ma[k][i][l])
                for i in range(n):
                    for p in range(m):
                        acc = F.zero
                        for j in range(n):
                            acc = F.add(acc, F.mul(psi[p][k][j][q], ma[i][j][l]))
                        if acc != 0:
                            row[i * m + p] = F.sub(row[i * m + p], acc)
                rows.append(row)
    basis = kernel_basis(Mat.from_rows(F, rows))
    for x in basis:
        if not is_entwining_integral(e, x):
            raise AssertionError("entwining integral failed re-verification")  # pragma: no cover
    return IntegralSpace("entwining", e, basis)


def check_theta(x: SmashAlgebra, lam: Sequence[Scalar]) -> ValidationReport:
    """theta(lambda) : X -> Hom(B, A), y -> lambda . y must be a left-A
    right-X bimodule map, and evaluating it at 1_X must return lambda."""
    F = x.field
    X = x.algebra
    n = x.entwining.algebra.dim
    nx = X.dim
    report = ValidationReport()
    theta = [hom_right_act(x, lam, basis_vector(F, nx, col)) for col in range(nx)]

    def theta_of(yv):
        out = [F.zero] * len(lam)
        for col, c in enumerate(yv):
            if c != 0:
                for idx, val in enumerate(theta[col]):
                    if val != 0:
                        out[idx] = F.add(out[idx], F.mul(c, val))
        return out

    for col in range(nx):
        y = basis_vector(F, nx, col)
        for col2 in range(nx):
            y2 = basis_vector(F, nx, col2)
            lhs = theta_of(X.multiply(y, y2))
            rhs = hom_right_act(x, theta_of(y), y2)
            if lhs != rhs:
                report.add("theta right X-linearity", (col, col2))
        for k in range(n):
            a = basis_vector(F, n, k)
            lhs = theta_of(X.multiply(x.embed_a(a), y))
            rhs = hom_left_act(x, a, theta_of(y))
            if lhs != rhs:
                report.add("theta left A-linearity", (k, col))
    if theta_of(X.unit_vector()) != list(lam):
        report.add("theta followed by evaluation at 1_X is the identity", ())
    return report


# ---------------------------------------------------------------------------
# Frobenius criteria
# ---------------------------------------------------------------------------

@dataclass
class FrobeniusCertificate:
    criterion: str               # "integral" | "element" | "form"
    entwining: Entwining
    witness: dict                # {"x": vec} | {"e": vec} | {"gram": rows}
    phi: Mat
    inverse: Mat
    checks: List[str] = dc_field(default_factory=list)


@dataclass
class FrobeniusFailure:
    criterion: str
    reason: str
    rank: int = 0
    expected_rank: int = 0


def assemble_phi_from_integral(e: Entwining, x: Sequence[Scalar]) -> Mat:
    """phi : C* (x) A -> A (x) C, xi (x) a -> sum a_i psi((xi -> c_i) (x) a)."""
    F = e.field
    n, m = e.algebra.dim, e.coalgebra.dim
    d, psi, ma = e.coalgebra.comult, e.psi, e.algebra.mult
    entries = {}
    for i in range(n):
        for p in range(m):
            xv = x[i * m + p]
            if xv == 0:
                continue
            for r in range(m):
                for u in range(m):
                    hit = d[p][r][u]
                    if hit == 0:
                        continue
                    c1 = F.mul(xv, hit)
                    for k in range(n):
                        for j in range(n):
                            for q in range(m):
                                v = psi[r][k][j][q]
                                if v == 0:
                                    continue
                                c2 = F.mul(c1, v)
                                for l in range(n):
                                    w = ma[i][j][l]
                                    if w != 0:
                                        key = (l * m + q, u * n + k)
                                        entries[key] = F.add(entries.get(key, F.zero),
                                                             F.mul(c2, w))
    return Mat.from_entries(F, n * m, m * n, [(r, c, v) for (r, c), v in sorted(entries.items())])


def _bimodule_comodule_checks(e: Entwining, phi: Mat) -> ValidationReport:
    """phi : C* (x) A -> A (x) C must intertwine the left/right A-actions, the
    right C-coactions, and the right X-actions carried by both sides."""
    F = e.field
    n, m = e.algebra.dim, e.coalgebra.dim
    d, psi, ma = e.coalgebra.comult, e.psi, e.algebra.mult
    report = ValidationReport()
    src = m * n  # basis xi_u (x) a_i at u*n + i
    tgt = n * m  # basis a_i (x) c_p at i*m + p

    def src_left(k):
        ent = []
        for u in range(m):
            for i in range(n):
                for t in range(m):
                    for j in range(n):
                        c1 = psi[t][k][j][u]
                        if c1 == 0:
                            continue
                        for l in range(n):
                            w = ma[j][i][l]
                            if w != 0:
                                ent.append((t * n + l, u * n + i, F.mul(c1, w)))
        return Mat.from_entries(F, src, src, ent)

    def tgt_left(k):
        ent = []
        for i in range(n):
            for p in range(m):
                for l in range(n):
                    w = ma[k][i][l]
                    if w != 0:
                        ent.append((l * m + p, i * m + p, w))
        return Mat.from_entries(F, tgt, tgt, ent)

    def src_right(k):
        ent = []
        for u in range(m):
            for i in range(n):
                for l in range(n):
                    w = ma[i][k][l]
                    if w != 0:
                        ent.append((u * n + l, u * n + i, w))
        return Mat.from_entries(F, src, src, ent)

    def tgt_right(k):
        ent = []
        for i in range(n):
            for p in range(m):
                for j in range(n):
                    for q in range(m):
                        c1 = psi[p][k][j][q]
                        if c1 == 0:
                            continue
                        for l in range(n):
                            w = ma[i][j][l]
                            if w != 0:
                                ent.append((l * m + q, i * m + p, F.mul(c1, w)))
        return Mat.from_entries(F, tgt, tgt, ent)

    for k in range(n):
        sl, tl = src_left(k), tgt_left(k)
        if phi.mul(sl) != tl.mul(phi):
            report.add("left A-linearity of phi", (k,))
        sr, tr = src_right(k), tgt_right(k)
        if phi.mul(sr) != tr.mul(phi):
            report.add("right A-linearity of phi", (k,))

    # right C-coactions: on C* (x) A from the dual comodule twisted by psi,
    # on A (x) C from A (x) Delta
    ent = []
    for u in range(m):
        for i in range(n):
            for t in range(m):
                for v in range(m):
                    c1 = d[t][v][u]
                    if c1 == 0:
                        continue
                    for j in range(n):
                        for q in range(m):
                            c2 = psi[v][i][j][q]
                            if c2 != 0:
                                ent.append(((t * n + j) * m + q, u * n + i, F.mul(c1, c2)))
    src_coact = Mat.from_entries(F, src * m, src, ent)
    ent = []
    for i in range(n):
        for p in range(m):
            for q in range(m):
                for r in range(m):
                    c1 = d[p][q][r]
                    if c1 != 0:
                        ent.append(((i * m + q) * m + r, i * m + p, c1))
    tgt_coact = Mat.from_entries(F, tgt * m, tgt, ent)
    i_m = Mat.identity(F, m)
    if tgt_coact.mul(phi) != phi.kron(i_m).mul(src_coact):
        report.add("right C-colinearity of phi", ())

    # right X-actions induced by the entwined structures on both sides
    def src_xact(v, j):
        ent = []
        for u in range(m):
            for i in range(n):
                for t in range(m):
                    for w in range(m):
                        c1 = d[t][w][u]
                        if c1 == 0:
                            continue
                        for jj in range(n):
                            c2 = psi[w][i][jj][v]
                            if c2 == 0:
                                continue
                            for l in range(n):
                                c3 = ma[jj][j][l]
                                if c3 != 0:
                                    ent.append((t * n + l, u * n + i,
                                                F.mul(F.mul(c1, c2), c3)))
        return Mat.from_entries(F, src, src, ent)

    def tgt_xact(v, j):
        ent = []
        for i in range(n):
            for p in range(m):
                for q in range(m):
                    c1 = d[p][q][v]
                    if c1 == 0:
                        continue
                    for t in range(n):
                        for w in range(m):
                            c2 = psi[q][j][t][w]
                            if c2 == 0:
                                continue
                            for l in range(n):
                                c3 = ma[i][t][l]
                                if c3 != 0:
                                    ent.append((l * m + w, i * m + p,
                                                F.mul(F.mul(c1, c2), c3)))
        return Mat.from_entries(F, tgt, tgt, ent)

    for v in range(m):
        for j in range(n):
            if phi.mul(src_xact(v, j)) != tgt_xact(v, j).mul(phi):
                report.add("right X-linearity of phi", (v, j))
    return report


def frobenius_via_integral(e: Entwining, x: Sequence[Scalar]
                           ) -> Union[FrobeniusCertificate, FrobeniusFailure]:
    """Certificate from an integral x, when xi (x) a -> sum a_i psi((xi->c_i) (x) a)
    is bijective; on success the bimodule/comodule intertwining is verified."""
    if not is_entwining_integral(e, x):
        raise ValueError("x is not an integral of the entwining structure")
    phi = assemble_phi_from_integral(e, x)
    ok, inv = is_bijective(phi)
    if not ok:
        return FrobeniusFailure("integral", "phi is not bijective",
                                rank_of(phi), phi.rows)
    rep = _bimodule_comodule_checks(e, phi)
    if not rep.ok:
        raise AssertionError("intertwining checks failed on a bijective phi:\n"
                             + rep.describe())  # pragma: no cover
    checks = ["x is an integral", "phi bijective (two-sided inverse verified)",
              "phi is left and right A-linear", "phi is right C-colinear",
              "phi is right X-linear"]
    return FrobeniusCertificate("integral", e, {"x": list(x)}, phi, inv, checks)


def _integral_candidates(e: Entwining, space: IntegralSpace,
                         seed: int, trials: int):
    """Deterministic candidate stream: the unit-sweep element, basis vectors,
    their sum, then seeded exact random combinations."""
    F = e.field
    n, m = e.algebra.dim, e.coalgebra.dim
    x0 = [F.zero] * (n * m)
    for i in range(n):
        for p in range(m):
            x0[i * m + p] = e.algebra.unit[i]
    if is_entwining_integral(e, x0):
        yield x0
    for b in space.basis:
        yield list(b)
    if len(space.basis) > 1:
        s = [F.zero] * (n * m)
        for b in space.basis:
            for idx, v in enumerate(b):
                s[idx] = F.add(s[idx], v)
        yield s
    rng = random.Random(seed)
    for _ in range(trials):
        if not space.basis:
            return
        comb = [F.zero] * (n * m)
        for b in space.basis:
            c = F.random(rng)
            for idx, v in enumerate(b):
                if v != 0:
                    comb[idx] = F.add(comb[idx], F.mul(c, v))
        yield comb


def frobenius_search(e: Entwining, seed: int = 0, trials: int = 32
                     ) -> Union[FrobeniusCertificate, FrobeniusFailure]:
    """Scan the integral space for a witness making phi bijective."""
    space = entwining_integrals(e)
    last = FrobeniusFailure("integral",
                            f"no certificate found after {trials} seeded trials")
    for cand in _integral_candidates(e, space, seed, trials):
        res = frobenius_via_integral(e, cand)
        if isinstance(res, FrobeniusCertificate):
            return res
        last = FrobeniusFailure("integral",
                                f"no certificate found after {trials} seeded trials",
                                res.rank, res.expected_rank)
    return last


# -- the element criterion ---------------------------------------------------

def commuting_element_space(e: Entwining) -> List[List[Scalar]]:
    """Basis of {e in C : psi(e (x) a) = a (x) e for all a}."""
    F = e.field
    n, m = e.algebra.dim, e.coalgebra.dim
    rows = []
    for i in range(n):
        for j in range(n):
            for q in range(m):
                row = [F.zero] * m
                for p in range(m):
                    row[p] = e.psi[p][i][j][q]
                if i == j:
                    row[q] = F.sub(row[q], F.one)
                rows.append(row)
    return kernel_basis(Mat.from_rows(F, rows))


def left_hit_matrix(e: Entwining, ev: Sequence[Scalar]) -> Mat:
    """Matrix of xi -> (xi -> e) : C* -> C in coordinates."""
    F = e.field
    m = e.coalgebra.dim
    d = e.coalgebra.comult
    ent = []
    for r in range(m):
        for u in range(m):
            acc = F.zero
            for p in range(m):
                if ev[p] != 0 and d[p][r][u] != 0:
                    acc = F.add(acc, F.mul(ev[p], d[p][r][u]))
            if acc != 0:
                ent.append((r, u, acc))
    return Mat.from_entries(F, m, m, ent)


def right_hit_matrix(e: Entwining, ev: Sequence[Scalar]) -> Mat:
    """Matrix of xi -> (e <- xi) : C* -> C in coordinates."""
    F = e.field
    m = e.coalgebra.dim
    d = e.coalgebra.comult
    ent = []
    for s in range(m):
        for u in range(m):
            acc = F.zero
            for p in range(m):
                if ev[p] != 0 and d[p][u][s] != 0:
                    acc = F.add(acc, F.mul(ev[p], d[p][u][s]))
            if acc != 0:
                ent.append((s, u, acc))
    return Mat.from_entries(F, m, m, ent)


def element_certificate_checks(e: Entwining, ev: Sequence[Scalar],
                               phi: Mat, psibar: PsiBar) -> ValidationReport:
    """Companion identities of an element witness: the comodule isomorphism
    square, the right-hit surjectivity, and the derived form's properties."""
    F = e.field
    n, m = e.algebra.dim, e.coalgebra.dim
    d, psi = e.coalgebra.comult, e.psi
    pb = psibar.tensor
    report = ValidationReport()
    # phi is a right C-comodule map: (phi (x) C) rho_{C*} = Delta phi
    for u in range(m):
        for r in range(m):
            for v in range(m):
                lhs = F.zero
                for t in range(m):
                    lhs = F.add(lhs, F.mul(d[t][v][u], phi.at(r, t)))
                rhs = F.zero
                for p in range(m):
                    rhs = F.add(rhs, F.mul(phi.at(p, u), d[p][r][v]))
                if lhs != rhs:
                    report.add("phi is a comodule map", (u,), f"at output ({r}, {v})")
    # commuting square psi (phi (x) A) psibar = A (x) phi
    for i in range(n):
        for u in range(m):
            for l in range(n):
                for q in range(m):
                    lhs = F.zero
                    for t in range(m):
                        for j in range(n):
                            c1 = pb[i][u][t][j]
                            if c1 == 0:
                                continue
                            for r in range(m):
                                c2 = phi.at(r, t)
                                if c2 == 0:
                                    continue
                                lhs = F.add(lhs, F.mul(F.mul(c1, c2), psi[r][j][l][q]))
                    rhs = phi.at(q, u) if i == l else F.zero
                    if lhs != rhs:
                        report.add("square psi(phi (x) A)psibar = A (x) phi", (i, u),
                                   f"at output ({l}, {q})")
    # right-hit surjectivity
    if rank_of(right_hit_matrix(e, ev)) != m:
        report.add("right hit by e is surjective", ())
    form = frobenius_form_check(e, element=ev)
    if not form.report.ok:
        report.extend(form.report)
    return report


def frobenius_element_search(e: Entwining, seed: int = 0, trials: int = 32
                             ) -> Union[FrobeniusCertificate, FrobeniusFailure]:
    """Search for e in C with psi(e (x) a) = a (x) e and xi -> (xi -> e) onto."""
    F = e.field
    m = e.coalgebra.dim
    space = commuting_element_space(e)
    psibar = build_psi_bar(e)

    def candidates():
        for b in space:
            yield list(b)
        if len(space) > 1:
            s = [F.zero] * m
            for b in space:
                for idx, v in enumerate(b):
                    s[idx] = F.add(s[idx], v)
            yield s
        rng = random.Random(seed)
        for _ in range(trials):
            if not space:
                return
            comb = [F.zero] * m
            for b in space:
                c = F.random(rng)
                for idx, v in enumerate(b):
                    if v != 0:
                        comb[idx] = F.add(comb[idx], F.mul(c, v))
            yield comb

    last = FrobeniusFailure("element",
                            f"no certificate found after {trials} seeded trials")
    for ev in candidates():
        phi = left_hit_matrix(e, ev)
        ok, inv = is_bijective(phi)
        if not ok:
            last = FrobeniusFailure("element",
                                    f"no certificate found after {trials} seeded trials",
                                    rank_of(phi), m)
            continue
        rep = element_certificate_checks(e, ev, phi, psibar)
        if not rep.ok:
            raise AssertionError("companion identities failed for a bijective "
                                 "element witness:\n" + rep.describe())  # pragma: no cover
        checks = ["e commutes with every a under psi",
                  "xi -> (xi -> e) bijective (inverse verified)",
                  "phi is a comodule map", "square psi(phi (x) A)psibar = A (x) phi",
                  "right hit by e surjective",
                  "derived form bilinear, associative, non-degenerate"]
        return FrobeniusCertificate("element", e, {"e": list(ev)}, phi, inv, checks)
    return last


# -- the form criterion -------------------------------------------------------

@dataclass
class FormCheck:
    report: ValidationReport
    gram: Mat
    inverse: Optional[Mat]
    radical: List[List[Scalar]]
    derived_e: Optional[List[Scalar]]

    @property
    def ok(self) -> bool:
        return self.report.ok


def frobenius_form_check(e: Entwining, element: Optional[Sequence[Scalar]] = None,
                         gram: Optional[Mat] = None) -> FormCheck:
    """Check the associative non-degenerate form criterion.

    Given an element e, the form is [xi, xi'] = <phi(xi'), xi> with
    phi(xi) = xi -> e, whose Gram matrix in coordinates is the left-hit
    matrix.  Given a Gram matrix instead, the element is reconstructed as
    e = sum_n [counit, xi_n] c_n and the element-side identities re-checked.
    """
    if (element is None) == (gram is None):
        raise ValueError("provide exactly one of element or gram")
    F = e.field
    n, m = e.algebra.dim, e.coalgebra.dim
    d, eps = e.coalgebra.comult, e.coalgebra.counit
    report = ValidationReport()
    derived_e: Optional[List[Scalar]] = None
    if element is not None:
        g = left_hit_matrix(e, element)
    else:
        g = gram
        if g.rows != m or g.cols != m:
            raise ValueError(f"gram matrix must be {m}x{m}")
        derived_e = [F.zero] * m
        for v in range(m):
            acc = F.zero
            for u in range(m):
                if eps[u] != 0:
                    acc = F.add(acc, F.mul(eps[u], g.at(u, v)))
            derived_e[v] = acc
        # the reconstructed element must commute with every a under psi ...
        for i in range(n):
            for j in range(n):
                for q in range(m):
                    lhs = F.zero
                    for p in range(m):
                        lhs = F.add(lhs, F.mul(derived_e[p], e.psi[p][i][j][q]))
                    want = derived_e[q] if i == j else F.zero
                    if lhs != want:
                        report.add("reconstructed e commutes under psi", (i,),
                                   f"at output ({j}, {q})")
        # ... and the left hit by it must be onto
        if rank_of(left_hit_matrix(e, derived_e)) != m:
            report.add("left hit by reconstructed e is surjective", ())
    # associativity [xi xi', xi''] = [xi, xi' xi''] (convolution products)
    for u in range(m):
        for v in range(m):
            for w in range(m):
                lhs = F.zero
                rhs = F.zero
                for t in range(m):
                    lhs = F.add(lhs, F.mul(d[t][u][v], g.at(t, w)))
                    rhs = F.add(rhs, F.mul(d[t][v][w], g.at(u, t)))
                if lhs != rhs:
                    report.add("form associativity", (u, v, w))
    # non-degeneracy
    ok, inv = is_bijective(g)
    radical: List[List[Scalar]] = []
    if not ok:
        radical = kernel_basis(g)
        report.add("form non-degeneracy", (), f"radical dimension {len(radical)}")
    # compatibility diagram with psibar.  The diagram couples the two dual
    # factors through the flipped pairing (xi, xi') -> <phi(xi), xi'> (the
    # transpose of the associative form); with the associative orientation it
    # fails already on non-cocommutative coalgebras, while this orientation
    # follows from the comodule-isomorphism square.  The two coincide when C
    # is cocommutative.
    pb = build_psi_bar(e).tensor
    for k in range(n):
        for u in range(m):
            for v in range(m):
                for l in range(n):
                    lhs = F.zero
                    for t in range(m):
                        for j in range(n):
                            c1 = pb[k][u][t][j]
                            if c1 == 0:
                                continue
                            for w in range(m):
                                c2 = pb[j][v][w][l]
                                if c2 == 0:
                                    continue
                                lhs = F.add(lhs, F.mul(F.mul(c1, c2), g.at(w, t)))
                    rhs = g.at(v, u) if k == l else F.zero
                    if lhs != rhs:
                        report.add("form/psibar compatibility diagram", (k, u, v),
                                   f"at output {l}")
    return FormCheck(report, g, inv, radical, derived_e)
