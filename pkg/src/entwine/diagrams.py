"""Matrices of the structural maps, for compositional identity checking.

Every map is a `Mat` acting on flattened tensor coordinates (leftmost factor
slowest; see linalg).  Composing these with `mul` and `kron` evaluates a
string diagram without ever touching the hand-written index loops used by
the validators and solvers, which is what makes this module usable as an
independent cross-check of those transcriptions.
"""

from __future__ import annotations

from .fields import Field
from .linalg import Mat
from .structures import Entwining, FiniteAlgebra, FiniteCoalgebra


def identity_map(field: Field, n: int) -> Mat:
    return Mat.identity(field, n)


def mu_map(a: FiniteAlgebra) -> Mat:
    """Multiplication A (x) A -> A."""
    n = a.dim
    entries = []
    for i in range(n):
        for j in range(n):
            for k in range(n):
                v = a.mult[i][j][k]
                if v != 0:
                    entries.append((k, i * n + j, v))
    return Mat.from_entries(a.field, n, n * n, entries)


def unit_map(a: FiniteAlgebra) -> Mat:
    """Unit k -> A."""
    return Mat.from_rows(a.field, [[u] for u in a.unit])


def delta_map(c: FiniteCoalgebra) -> Mat:
    """Comultiplication C -> C (x) C."""
    m = c.dim
    entries = []
    for p in range(m):
        for q in range(m):
            for r in range(m):
                v = c.comult[p][q][r]
                if v != 0:
                    entries.append((q * m + r, p, v))
    return Mat.from_entries(c.field, m * m, m, entries)


def counit_map(c: FiniteCoalgebra) -> Mat:
    """Counit C -> k."""
    return Mat.from_rows(c.field, [list(c.counit)])


def psi_map(e: Entwining) -> Mat:
    """psi : C (x) A -> A (x) C."""
    n, m = e.algebra.dim, e.coalgebra.dim
    entries = []
    for p in range(m):
        for i in range(n):
            for j in range(n):
                for q in range(m):
                    v = e.psi[p][i][j][q]
                    if v != 0:
                        entries.append((j * m + q, p * n + i, v))
    return Mat.from_entries(e.field, n * m, m * n, entries)


def ev_map(field: Field, d: int) -> Mat:
    """Evaluation V (x) V* -> k against the coordinate dual basis."""
    entries = [(0, p * d + p, field.one) for p in range(d)]
    return Mat.from_entries(field, 1, d * d, entries)


def coev_map(field: Field, d: int) -> Mat:
    """Coevaluation k -> V (x) V* against the coordinate dual basis."""
    entries = [(i * d + i, 0, field.one) for i in range(d)]
    return Mat.from_entries(field, d * d, 1, entries)


def flip_map(field: Field, d1: int, d2: int) -> Mat:
    """The swap V1 (x) V2 -> V2 (x) V1 on flattened coordinates."""
    entries = []
    for i in range(d1):
        for j in range(d2):
            entries.append((j * d1 + i, i * d2 + j, field.one))
    return Mat.from_entries(field, d1 * d2, d1 * d2, entries)


def compose(*maps: Mat) -> Mat:
    """compose(f, g, h) is the matrix of f o g o h."""
    out = maps[0]
    for nxt in maps[1:]:
        out = out.mul(nxt)
    return out


# -- compositional axiom checks (used as an oracle against the validators) ---

def algebra_axioms_hold(a: FiniteAlgebra) -> bool:
    F, n = a.field, a.dim
    mu, u = mu_map(a), unit_map(a)
    i_n = identity_map(F, n)
    if compose(mu, mu.kron(i_n)) != compose(mu, i_n.kron(mu)):
        return False
    if compose(mu, u.kron(i_n)) != i_n or compose(mu, i_n.kron(u)) != i_n:
        return False
    return True


def coalgebra_axioms_hold(c: FiniteCoalgebra) -> bool:
    F, m = c.field, c.dim
    d, eps = delta_map(c), counit_map(c)
    i_m = identity_map(F, m)
    if compose(d.kron(i_m), d) != compose(i_m.kron(d), d):
        return False
    if compose(eps.kron(i_m), d) != i_m or compose(i_m.kron(eps), d) != i_m:
        return False
    return True


def bialgebra_axioms_hold(h) -> bool:
    a, c = h.algebra, h.coalgebra
    if not algebra_axioms_hold(a) or not coalgebra_axioms_hold(c):
        return False
    F, n = a.field, a.dim
    mu, u = mu_map(a), unit_map(a)
    d, eps = delta_map(c), counit_map(c)
    i_n = identity_map(F, n)
    tw = flip_map(F, n, n)
    if compose(d, mu) != compose(mu.kron(mu), i_n.kron(tw).kron(i_n), d.kron(d)):
        return False
    if compose(eps, mu) != eps.kron(eps):
        return False
    if compose(d, u) != u.kron(u):
        return False
    if compose(eps, u) != Mat.identity(F, 1):
        return False
    return True


def entwining_axioms_hold(e: Entwining) -> bool:
    F = e.field
    a, c = e.algebra, e.coalgebra
    n, m = a.dim, c.dim
    mu, u = mu_map(a), unit_map(a)
    d, eps = delta_map(c), counit_map(c)
    psi = psi_map(e)
    i_n, i_m = identity_map(F, n), identity_map(F, m)
    if compose(psi, i_m.kron(mu)) != compose(mu.kron(i_m), i_n.kron(psi), psi.kron(i_n)):
        return False
    if compose(psi, i_m.kron(u)) != u.kron(i_m):
        return False
    if compose(i_n.kron(d), psi) != compose(psi.kron(i_m), i_m.kron(psi), d.kron(i_n)):
        return False
    return compose(i_n.kron(eps), psi) == eps.kron(i_n)
