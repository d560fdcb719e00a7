"""Built-in example structures: the trivial pair, group algebras, the
4-dimensional non-commutative non-cocommutative bialgebra, an upper
triangular matrix algebra, and a two-idempotent Galois datum.

Every entry is built from structure constants at load time and is expected
to pass all applicable validators (the test suite enforces this).  Entries
take the ground field as a parameter where the construction is
field-generic; constructions needing 1/2 reject characteristic 2.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable, Dict, List, Tuple

from .fields import Field
from .structures import (ComoduleAlgebraCoaction, DoiHopfDatum, Entwining,
                         FiniteAlgebra, FiniteBialgebra, FiniteCoalgebra,
                         ModuleCoalgebraAction, build_doi_hopf, build_flip,
                         zeros3)
from .entmod import EntwinedModule
from .galois import ComoduleAlgebra


# -- building blocks ---------------------------------------------------------

def algebra_k(f: Field) -> FiniteAlgebra:
    return FiniteAlgebra(f, 1, [[[f.one]]], [f.one], ("1",))


def coalgebra_k(f: Field) -> FiniteCoalgebra:
    return FiniteCoalgebra(f, 1, [[[f.one]]], [f.one], ("1",))


def group_algebra_z2(f: Field) -> FiniteAlgebra:
    mult = zeros3(f, 2, 2, 2)
    mult[0][0][0] = f.one
    mult[0][1][1] = f.one
    mult[1][0][1] = f.one
    mult[1][1][0] = f.one
    return FiniteAlgebra(f, 2, mult, [f.one, f.zero], ("1", "g"))


def grouplike_coalgebra(f: Field, n: int, labels: Tuple[str, ...] = None) -> FiniteCoalgebra:
    comult = zeros3(f, n, n, n)
    for i in range(n):
        comult[i][i][i] = f.one
    return FiniteCoalgebra(f, n, comult, [f.one] * n,
                           labels or tuple(f"g{i}" for i in range(n)))


def z2_bialgebra(f: Field) -> FiniteBialgebra:
    return FiniteBialgebra(group_algebra_z2(f),
                           grouplike_coalgebra(f, 2, ("1", "g")))


def sweedler_bialgebra(f: Field) -> FiniteBialgebra:
    """Basis 1, g, x, gx with g^2 = 1, x^2 = 0, xg = -gx; Delta(g) = g (x) g,
    Delta(x) = x (x) 1 + g (x) x.  Non-commutative and non-cocommutative."""
    one, zero = f.one, f.zero
    mult = zeros3(f, 4, 4, 4)
    # indices: 0 = 1, 1 = g, 2 = x, 3 = gx
    table = {
        (0, 0): [(0, one)], (0, 1): [(1, one)], (0, 2): [(2, one)], (0, 3): [(3, one)],
        (1, 0): [(1, one)], (1, 1): [(0, one)], (1, 2): [(3, one)], (1, 3): [(2, one)],
        (2, 0): [(2, one)], (2, 1): [(3, f.neg(one))],
        (3, 0): [(3, one)], (3, 1): [(2, f.neg(one))],
    }
    for (i, j), terms in table.items():
        for k, v in terms:
            mult[i][j][k] = v
    comult = zeros3(f, 4, 4, 4)
    comult[0][0][0] = one
    comult[1][1][1] = one
    comult[2][2][0] = one
    comult[2][1][2] = one
    comult[3][3][1] = one
    comult[3][0][3] = one
    counit = [one, one, zero, zero]
    return FiniteBialgebra(
        FiniteAlgebra(f, 4, mult, [one, zero, zero, zero], ("1", "g", "x", "gx")),
        FiniteCoalgebra(f, 4, comult, counit, ("1", "g", "x", "gx")))


def upper_triangular2(f: Field) -> FiniteAlgebra:
    """Upper triangular 2x2 matrices, basis E11, E12, E22."""
    mult = zeros3(f, 3, 3, 3)
    one = f.one
    mult[0][0][0] = one   # E11 E11 = E11
    mult[0][1][1] = one   # E11 E12 = E12
    mult[1][2][1] = one   # E12 E22 = E12
    mult[2][2][2] = one   # E22 E22 = E22
    return FiniteAlgebra(f, 3, mult, [one, f.zero, one], ("E11", "E12", "E22"))


def self_doi_hopf_datum(h: FiniteBialgebra) -> DoiHopfDatum:
    """C = H as a module coalgebra via multiplication, A = H as a comodule
    algebra via comultiplication."""
    n = h.dim
    action = [[list(h.algebra.mult[p][k]) for k in range(n)] for p in range(n)]
    coaction = [[list(h.coalgebra.comult[i][j]) for j in range(n)] for i in range(n)]
    return DoiHopfDatum(
        h,
        ModuleCoalgebraAction(h, h.coalgebra, action),
        ComoduleAlgebraCoaction(h, h.algebra, coaction))


def hopf_module(e: Entwining) -> EntwinedModule:
    """The underlying space of A with action = multiplication and coaction =
    the comodule-algebra coaction (for self-datum entwinings: Delta)."""
    a = e.algebra
    n = a.dim
    return EntwinedModule(
        e, n,
        [[list(a.mult[s][i]) for i in range(n)] for s in range(n)],
        [[list(e.coalgebra.comult[s][t]) for t in range(n)] for s in range(n)])


def trivial_coaction_module(e: Entwining) -> EntwinedModule:
    """A itself with coaction m -> m (x) c_0; entwined whenever dim C = 1."""
    a = e.algebra
    f = a.field
    n = a.dim
    co = zeros3(f, n, n, 1)
    for s in range(n):
        co[s][s][0] = f.one
    return EntwinedModule(e, n,
                          [[list(a.mult[s][i]) for i in range(n)] for s in range(n)],
                          co)


def qq_pair_algebra(f: Field) -> FiniteAlgebra:
    """k (+) k with idempotent basis u0, u1."""
    mult = zeros3(f, 2, 2, 2)
    mult[0][0][0] = f.one
    mult[1][1][1] = f.one
    return FiniteAlgebra(f, 2, mult, [f.one, f.one], ("u0", "u1"))


def qq_mixing_datum(f: Field) -> DoiHopfDatum:
    """The group coproduct of kZ/2 transported to the idempotent basis
    u_i = (1 +- g)/2: a component-mixing comodule-algebra coaction."""
    if f.char == 2:
        raise ValueError("the mixing coaction needs 1/2: characteristic 2 not supported")
    h = z2_bialgebra(f)
    a = qq_pair_algebra(f)
    half = f.div(f.one, f.of(2))
    nhalf = f.neg(half)
    # rho(u0) = 1/2 (u0+u1) (x) 1 + 1/2 (u0-u1) (x) g
    # rho(u1) = 1/2 (u0+u1) (x) 1 - 1/2 (u0-u1) (x) g
    coaction = [
        [[half, half], [half, nhalf]],
        [[half, nhalf], [half, half]],
    ]
    n = h.dim
    action = [[list(h.algebra.mult[p][k]) for k in range(n)] for p in range(n)]
    return DoiHopfDatum(
        h,
        ModuleCoalgebraAction(h, h.coalgebra, action),
        ComoduleAlgebraCoaction(h, a, coaction))


def comodule_algebra_of_datum(datum: DoiHopfDatum) -> ComoduleAlgebra:
    """Forget the bialgebra: the comodule-algebra view used by the Galois path."""
    return ComoduleAlgebra(datum.algebra, datum.coalgebra,
                           [[list(r) for r in row] for row in datum.comodule_algebra.coaction])


# -- the catalog --------------------------------------------------------------

@dataclass
class CatalogEntry:
    name: str
    notes: str
    build: Callable[[Field], Dict[str, object]]
    min_char_excluded: Tuple[int, ...] = ()


def trivial_comodule_algebra(a: FiniteAlgebra) -> ComoduleAlgebra:
    """a -> a (x) c_0 over the one-dimensional coalgebra."""
    f = a.field
    co = zeros3(f, a.dim, a.dim, 1)
    for i in range(a.dim):
        co[i][i][0] = f.one
    return ComoduleAlgebra(a, coalgebra_k(f), co)


def _entry_trivial_k(f: Field) -> Dict[str, object]:
    e = build_flip(algebra_k(f), coalgebra_k(f))
    return {"entwining": e, "module": trivial_coaction_module(e),
            "comodule_algebra": trivial_comodule_algebra(e.algebra)}


def _entry_z2_trivial(f: Field) -> Dict[str, object]:
    e = build_flip(group_algebra_z2(f), coalgebra_k(f))
    return {"entwining": e, "module": trivial_coaction_module(e),
            "comodule_algebra": trivial_comodule_algebra(e.algebra)}


def _entry_ut2_trivial(f: Field) -> Dict[str, object]:
    e = build_flip(upper_triangular2(f), coalgebra_k(f))
    return {"entwining": e, "module": trivial_coaction_module(e),
            "comodule_algebra": trivial_comodule_algebra(e.algebra)}


def _entry_grouplike2_flip(f: Field) -> Dict[str, object]:
    e = build_flip(group_algebra_z2(f), grouplike_coalgebra(f, 2))
    return {"entwining": e}


def _entry_k_grouplike2(f: Field) -> Dict[str, object]:
    e = build_flip(algebra_k(f), grouplike_coalgebra(f, 2))
    return {"entwining": e}


def _entry_z2_hopf(f: Field) -> Dict[str, object]:
    datum = self_doi_hopf_datum(z2_bialgebra(f))
    e = build_doi_hopf(datum)
    return {"datum": datum, "entwining": e, "module": hopf_module(e),
            "comodule_algebra": comodule_algebra_of_datum(datum)}


def _entry_sweedler_h4(f: Field) -> Dict[str, object]:
    datum = self_doi_hopf_datum(sweedler_bialgebra(f))
    e = build_doi_hopf(datum)
    return {"datum": datum, "entwining": e, "module": hopf_module(e),
            "comodule_algebra": comodule_algebra_of_datum(datum)}


def _entry_qq_galois(f: Field) -> Dict[str, object]:
    datum = qq_mixing_datum(f)
    e = build_doi_hopf(datum)
    return {"datum": datum, "entwining": e,
            "comodule_algebra": comodule_algebra_of_datum(datum)}


CATALOG: Dict[str, CatalogEntry] = {
    entry.name: entry for entry in [
        CatalogEntry("trivial-k", "A = C = k with the identity entwining",
                     _entry_trivial_k),
        CatalogEntry("z2-trivial", "group algebra of Z/2 with trivial coalgebra",
                     _entry_z2_trivial),
        CatalogEntry("ut2-trivial", "upper triangular 2x2 matrices with trivial coalgebra",
                     _entry_ut2_trivial),
        CatalogEntry("grouplike2-flip", "group algebra of Z/2 with a 2-dim group-like "
                                        "coalgebra, flip entwining",
                     _entry_grouplike2_flip),
        CatalogEntry("k-grouplike2", "A = k with a 2-dim group-like coalgebra, flip",
                     _entry_k_grouplike2),
        CatalogEntry("z2-hopf", "kZ/2 acting and coacting on itself "
                                "(classical Hopf-module datum)",
                     _entry_z2_hopf),
        CatalogEntry("sweedler-h4", "the 4-dim non-commutative non-cocommutative "
                                    "bialgebra acting and coacting on itself",
                     _entry_sweedler_h4),
        CatalogEntry("qq-galois", "k (+) k with the component-mixing coaction "
                                  "(Galois over the diagonal)",
                     _entry_qq_galois, min_char_excluded=(2,)),
    ]
}


def catalog_list() -> List[Tuple[str, str]]:
    return [(name, CATALOG[name].notes) for name in sorted(CATALOG)]


def catalog_entry(name: str, char: int = 0) -> Dict[str, object]:
    if name not in CATALOG:
        raise KeyError(f"unknown catalog entry {name!r}; known: {sorted(CATALOG)}")
    entry = CATALOG[name]
    if char in entry.min_char_excluded:
        raise ValueError(f"catalog entry {name!r} is not defined in characteristic {char}")
    return entry.build(Field(char))


def catalog_entwinings(char: int = 0) -> Dict[str, Entwining]:
    """All catalog entwinings definable over the given characteristic."""
    out = {}
    for name, entry in sorted(CATALOG.items()):
        if char in entry.min_char_excluded:
            continue
        out[name] = entry.build(Field(char))["entwining"]
    return out
