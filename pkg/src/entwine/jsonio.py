"""JSON serialization for every structure, certificate and report.

Schema notes:

* every document carries a "kind" discriminator;
* scalars are strings: reduced "p/q" with positive denominator over the
  rationals, decimal residues over GF(p);
* structure-constant tensors are sparse lists of [indices..., "coeff"]
  entries, sorted lexicographically, with omitted entries zero;
* matrices are dense row lists;
* an entwined module may reference its entwining inline, by catalog name,
  or by a path to an entwining JSON file.

`canonical_json_bytes` fixes key order, separators and a trailing newline,
so identical content serializes byte-for-byte identically.
"""

from __future__ import annotations

import hashlib
import json
import os
from typing import List, Optional, Sequence

from .fields import Field, Scalar
from .linalg import Mat
from .structures import (ComoduleAlgebraCoaction, DoiHopfDatum, Entwining,
                         FiniteAlgebra, FiniteBialgebra, FiniteCoalgebra,
                         ModuleCoalgebraAction, zeros2, zeros3, zeros4)
from .entmod import EntwinedModule
from .galois import ComoduleAlgebra
from .frobint import FrobeniusCertificate, IntegralSpace
from .maschke import (NormalizedCointegralMap, NormalizedIntegralMap,
                      SplitCertificate)


# -- canonical bytes ----------------------------------------------------------

def canonical_json_bytes(obj) -> bytes:
    return (json.dumps(obj, sort_keys=True, indent=2, ensure_ascii=True) + "\n").encode()


def digest(obj) -> str:
    return hashlib.sha256(canonical_json_bytes(obj)).hexdigest()


# -- scalars and tensors ------------------------------------------------------

def field_to_json(f: Field) -> dict:
    return {"char": f.char}


def field_from_json(obj) -> Field:
    return Field(int(obj["char"]))


def _vec(f: Field, v: Sequence[Scalar]) -> list:
    return [f.to_str(x) for x in v]


def _parse_vec(f: Field, v) -> list:
    return [f.parse(x) for x in v]


def _rows(f: Field, m: Mat) -> list:
    return [[f.to_str(m.at(i, j)) for j in range(m.cols)] for i in range(m.rows)]


def _parse_rows(f: Field, rows) -> Mat:
    return Mat.from_rows(f, [[f.parse(x) for x in row] for row in rows])


def _sparse3(f: Field, t) -> list:
    out = []
    for i, ti in enumerate(t):
        for j, tij in enumerate(ti):
            for k, v in enumerate(tij):
                if v != 0:
                    out.append([i, j, k, f.to_str(v)])
    return out


def _parse_sparse3(f: Field, entries, d1, d2, d3) -> list:
    t = zeros3(f, d1, d2, d3)
    for i, j, k, c in entries:
        t[i][j][k] = f.add(t[i][j][k], f.parse(c))
    return t


def _sparse4(f: Field, t) -> list:
    out = []
    for i, ti in enumerate(t):
        for j, tij in enumerate(ti):
            for k, tijk in enumerate(tij):
                for l, v in enumerate(tijk):
                    if v != 0:
                        out.append([i, j, k, l, f.to_str(v)])
    return out


def _parse_sparse4(f: Field, entries, d1, d2, d3, d4) -> list:
    t = zeros4(f, d1, d2, d3, d4)
    for i, j, k, l, c in entries:
        t[i][j][k][l] = f.add(t[i][j][k][l], f.parse(c))
    return t


# -- structures ---------------------------------------------------------------

def algebra_to_json(a: FiniteAlgebra) -> dict:
    out = {"kind": "algebra", "field": field_to_json(a.field), "dim": a.dim,
           "mult": _sparse3(a.field, a.mult), "unit": _vec(a.field, a.unit)}
    if a.basis_labels:
        out["labels"] = list(a.basis_labels)
    return out


def algebra_from_json(obj) -> FiniteAlgebra:
    f = field_from_json(obj["field"])
    n = int(obj["dim"])
    labels = tuple(obj["labels"]) if "labels" in obj else None
    return FiniteAlgebra(f, n, _parse_sparse3(f, obj["mult"], n, n, n),
                         _parse_vec(f, obj["unit"]), labels)


def coalgebra_to_json(c: FiniteCoalgebra) -> dict:
    out = {"kind": "coalgebra", "field": field_to_json(c.field), "dim": c.dim,
           "comult": _sparse3(c.field, c.comult), "counit": _vec(c.field, c.counit)}
    if c.basis_labels:
        out["labels"] = list(c.basis_labels)
    return out


def coalgebra_from_json(obj) -> FiniteCoalgebra:
    f = field_from_json(obj["field"])
    m = int(obj["dim"])
    labels = tuple(obj["labels"]) if "labels" in obj else None
    return FiniteCoalgebra(f, m, _parse_sparse3(f, obj["comult"], m, m, m),
                           _parse_vec(f, obj["counit"]), labels)


def bialgebra_to_json(h: FiniteBialgebra) -> dict:
    f = h.field
    out = {"kind": "bialgebra", "field": field_to_json(f), "dim": h.dim,
           "mult": _sparse3(f, h.algebra.mult), "unit": _vec(f, h.algebra.unit),
           "comult": _sparse3(f, h.coalgebra.comult),
           "counit": _vec(f, h.coalgebra.counit)}
    if h.algebra.basis_labels:
        out["labels"] = list(h.algebra.basis_labels)
    return out


def bialgebra_from_json(obj) -> FiniteBialgebra:
    f = field_from_json(obj["field"])
    n = int(obj["dim"])
    labels = tuple(obj["labels"]) if "labels" in obj else None
    return FiniteBialgebra(
        FiniteAlgebra(f, n, _parse_sparse3(f, obj["mult"], n, n, n),
                      _parse_vec(f, obj["unit"]), labels),
        FiniteCoalgebra(f, n, _parse_sparse3(f, obj["comult"], n, n, n),
                        _parse_vec(f, obj["counit"]), labels))


def entwining_to_json(e: Entwining) -> dict:
    return {"kind": "entwining",
            "algebra": algebra_to_json(e.algebra),
            "coalgebra": coalgebra_to_json(e.coalgebra),
            "psi": _sparse4(e.field, e.psi)}


def entwining_from_json(obj) -> Entwining:
    a = algebra_from_json(obj["algebra"])
    c = coalgebra_from_json(obj["coalgebra"])
    psi = _parse_sparse4(a.field, obj["psi"], c.dim, a.dim, a.dim, c.dim)
    return Entwining(a, c, psi)


def comodule_algebra_to_json(ca: ComoduleAlgebra) -> dict:
    return {"kind": "comodule_algebra",
            "algebra": algebra_to_json(ca.algebra),
            "coalgebra": coalgebra_to_json(ca.coalgebra),
            "coaction": _sparse3(ca.field, ca.coaction)}


def comodule_algebra_from_json(obj) -> ComoduleAlgebra:
    a = algebra_from_json(obj["algebra"])
    c = coalgebra_from_json(obj["coalgebra"])
    co = _parse_sparse3(a.field, obj["coaction"], a.dim, a.dim, c.dim)
    return ComoduleAlgebra(a, c, co)


def doi_hopf_datum_to_json(d: DoiHopfDatum) -> dict:
    f = d.bialgebra.field
    return {"kind": "doi_hopf_datum",
            "bialgebra": bialgebra_to_json(d.bialgebra),
            "coalgebra": coalgebra_to_json(d.coalgebra),
            "action": _sparse3(f, d.module_coalgebra.action),
            "algebra": algebra_to_json(d.algebra),
            "coaction": _sparse3(f, d.comodule_algebra.coaction)}


def doi_hopf_datum_from_json(obj) -> DoiHopfDatum:
    h = bialgebra_from_json(obj["bialgebra"])
    c = coalgebra_from_json(obj["coalgebra"])
    a = algebra_from_json(obj["algebra"])
    f = h.field
    action = _parse_sparse3(f, obj["action"], c.dim, h.dim, c.dim)
    coaction = _parse_sparse3(f, obj["coaction"], a.dim, a.dim, h.dim)
    return DoiHopfDatum(h, ModuleCoalgebraAction(h, c, action),
                        ComoduleAlgebraCoaction(h, a, coaction))


def entwined_module_to_json(mod: EntwinedModule, inline_entwining: bool = True) -> dict:
    f = mod.field
    out = {"kind": "entwined_module", "dim": mod.dim,
           "action": _sparse3(f, mod.action),
           "coaction": _sparse3(f, mod.coaction)}
    if inline_entwining:
        out["entwining"] = entwining_to_json(mod.entwining)
    return out


def entwined_module_from_json(obj, entwining: Optional[Entwining] = None,
                              base_dir: Optional[str] = None) -> EntwinedModule:
    if entwining is None:
        ref = obj.get("entwining")
        if ref is None:
            raise ValueError("module JSON has no entwining and none was supplied")
        entwining = resolve_entwining(ref, base_dir)
    f = entwining.field
    d = int(obj["dim"])
    n, m = entwining.algebra.dim, entwining.coalgebra.dim
    action = _parse_sparse3(f, obj["action"], d, n, d)
    coaction = _parse_sparse3(f, obj["coaction"], d, d, m)
    return EntwinedModule(entwining, d, action, coaction)


def resolve_entwining(ref, base_dir: Optional[str] = None) -> Entwining:
    """Inline object, catalog name, or path to an entwining JSON."""
    if isinstance(ref, dict):
        return entwining_from_json(ref)
    if isinstance(ref, str):
        from .catalog import CATALOG, catalog_entry
        if ref in CATALOG:
            return catalog_entry(ref)["entwining"]
        path = ref if os.path.isabs(ref) or base_dir is None else os.path.join(base_dir, ref)
        with open(path) as fh:
            return entwining_from_json(json.load(fh))
    raise ValueError(f"cannot resolve entwining reference {ref!r}")


# -- spaces, certificates -----------------------------------------------------

def integral_space_to_json(s: IntegralSpace) -> dict:
    f = s.entwining.field
    return {"kind": "integral_space", "space": s.kind, "dim": s.dim,
            "entwining": entwining_to_json(s.entwining),
            "basis": [_vec(f, b) for b in s.basis]}


def integral_space_from_json(obj) -> IntegralSpace:
    e = entwining_from_json(obj["entwining"])
    f = e.field
    return IntegralSpace(obj["space"], e, [_parse_vec(f, b) for b in obj["basis"]])


def frobenius_certificate_to_json(cert: FrobeniusCertificate) -> dict:
    e = cert.entwining
    f = e.field
    witness = {}
    for key, val in cert.witness.items():
        if key == "gram":
            witness[key] = _rows(f, val) if isinstance(val, Mat) else val
        else:
            witness[key] = _vec(f, val)
    return {"kind": "frobenius_certificate", "criterion": cert.criterion,
            "entwining": entwining_to_json(e), "witness": witness,
            "phi": _rows(f, cert.phi), "inverse": _rows(f, cert.inverse),
            "checks": list(cert.checks)}


def frobenius_certificate_from_json(obj) -> FrobeniusCertificate:
    e = entwining_from_json(obj["entwining"])
    f = e.field
    witness = {}
    for key, val in obj["witness"].items():
        if key == "gram":
            witness[key] = _parse_rows(f, val)
        else:
            witness[key] = _parse_vec(f, val)
    return FrobeniusCertificate(obj["criterion"], e, witness,
                                _parse_rows(f, obj["phi"]),
                                _parse_rows(f, obj["inverse"]),
                                list(obj.get("checks", [])))


def integral_map_to_json(phi: NormalizedIntegralMap) -> dict:
    f = phi.entwining.field
    return {"kind": "integral_map", "entwining": entwining_to_json(phi.entwining),
            "tensor": _sparse3(f, phi.tensor), "solution_dim": phi.solution_dim}


def integral_map_from_json(obj) -> NormalizedIntegralMap:
    e = entwining_from_json(obj["entwining"])
    n, m = e.algebra.dim, e.coalgebra.dim
    tensor = _parse_sparse3(e.field, obj["tensor"], m, m, n)
    return NormalizedIntegralMap(e, tensor, int(obj.get("solution_dim", 0)))


def cointegral_map_to_json(phi: NormalizedCointegralMap) -> dict:
    f = phi.entwining.field
    return {"kind": "cointegral_map", "entwining": entwining_to_json(phi.entwining),
            "tensor": _sparse3(f, phi.tensor), "solution_dim": phi.solution_dim}


def cointegral_map_from_json(obj) -> NormalizedCointegralMap:
    e = entwining_from_json(obj["entwining"])
    n, m = e.algebra.dim, e.coalgebra.dim
    tensor = _parse_sparse3(e.field, obj["tensor"], n, m, n)
    return NormalizedCointegralMap(e, tensor, int(obj.get("solution_dim", 0)))


def split_certificate_to_json(cert: SplitCertificate) -> dict:
    e = cert.entwining
    f = e.field
    return {"kind": "split_certificate", "split": cert.kind, "mode": cert.mode,
            "entwining": entwining_to_json(e),
            "module": entwined_module_to_json(cert.module, inline_entwining=False),
            "target": entwined_module_to_json(cert.target, inline_entwining=False),
            "f": _rows(f, cert.f), "g": _rows(f, cert.g),
            "g_tilde": _rows(f, cert.g_tilde),
            "phi": _sparse3(f, cert.phi_tensor),
            "checks": list(cert.checks)}


def split_certificate_from_json(obj) -> SplitCertificate:
    e = entwining_from_json(obj["entwining"])
    f = e.field
    n, m = e.algebra.dim, e.coalgebra.dim
    m_mod = entwined_module_from_json(obj["module"], entwining=e)
    n_mod = entwined_module_from_json(obj["target"], entwining=e)
    if obj["split"] == "integral":
        phi_tensor = _parse_sparse3(f, obj["phi"], m, m, n)
    else:
        phi_tensor = _parse_sparse3(f, obj["phi"], n, m, n)
    return SplitCertificate(obj["split"], obj["mode"], m_mod, n_mod,
                            _parse_rows(f, obj["f"]), _parse_rows(f, obj["g"]),
                            _parse_rows(f, obj["g_tilde"]), phi_tensor,
                            list(obj.get("checks", [])))


def structure_to_json(obj) -> dict:
    """Serialize any supported structure by type."""
    if isinstance(obj, FiniteBialgebra):
        return bialgebra_to_json(obj)
    if isinstance(obj, FiniteAlgebra):
        return algebra_to_json(obj)
    if isinstance(obj, FiniteCoalgebra):
        return coalgebra_to_json(obj)
    if isinstance(obj, Entwining):
        return entwining_to_json(obj)
    if isinstance(obj, ComoduleAlgebra):
        return comodule_algebra_to_json(obj)
    if isinstance(obj, DoiHopfDatum):
        return doi_hopf_datum_to_json(obj)
    if isinstance(obj, EntwinedModule):
        return entwined_module_to_json(obj)
    if isinstance(obj, IntegralSpace):
        return integral_space_to_json(obj)
    if isinstance(obj, FrobeniusCertificate):
        return frobenius_certificate_to_json(obj)
    if isinstance(obj, NormalizedIntegralMap):
        return integral_map_to_json(obj)
    if isinstance(obj, NormalizedCointegralMap):
        return cointegral_map_to_json(obj)
    if isinstance(obj, SplitCertificate):
        return split_certificate_to_json(obj)
    raise TypeError(f"no JSON encoding for {type(obj).__name__}")
