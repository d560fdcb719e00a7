"""Independent re-verification of emitted certificates and structures.

Everything here evaluates identities directly (validators, diagram
composition, matrix products); nothing solves, searches, or trusts a field
of the certificate that can be recomputed from the witness.  A certificate
whose recorded derived data disagrees with recomputation is rejected even
if the recorded data happens to satisfy the final identities.
"""

from __future__ import annotations

from dataclasses import dataclass, field as dc_field
from typing import List

from .linalg import Mat
from .structures import (validate_algebra, validate_bialgebra,
                         validate_coalgebra, validate_doi_hopf_datum,
                         validate_entwining)
from .entmod import (comodule_map_failures, is_morphism, module_map_failures,
                     validate_entwined_module)
from .galois import validate_comodule_algebra_galois
from .frobint import (assemble_phi_from_integral, _bimodule_comodule_checks,
                      build_psi_bar, element_certificate_checks,
                      frobenius_form_check, is_entwining_integral,
                      is_smash_integral, left_hit_matrix, build_smash)
from .maschke import (assemble_g_tilde_cointegral, assemble_g_tilde_integral,
                      NormalizedCointegralMap, NormalizedIntegralMap,
                      cointegral_map_failures, cointegral_map_failures_diagram,
                      integral_map_failures, integral_map_failures_diagram,
                      lifted_cointegral_failures)
from . import jsonio


@dataclass
class RecheckResult:
    accepted: bool
    failures: List[str] = dc_field(default_factory=list)

    def fail(self, msg: str):
        self.accepted = False
        self.failures.append(msg)


def recheck_document(obj: dict) -> RecheckResult:
    kind = obj.get("kind")
    handlers = {
        "algebra": _recheck_algebra,
        "coalgebra": _recheck_coalgebra,
        "bialgebra": _recheck_bialgebra,
        "entwining": _recheck_entwining,
        "comodule_algebra": _recheck_comodule_algebra,
        "doi_hopf_datum": _recheck_datum,
        "entwined_module": _recheck_module,
        "integral_space": _recheck_integral_space,
        "frobenius_certificate": _recheck_frobenius,
        "integral_map": _recheck_integral_map,
        "cointegral_map": _recheck_cointegral_map,
        "split_certificate": _recheck_split,
        "report": _recheck_report,
    }
    if kind not in handlers:
        raise ValueError(f"cannot recheck documents of kind {kind!r}")
    return handlers[kind](obj)


def _from_report(rep, out: RecheckResult, prefix: str = ""):
    for fail in rep.failures:
        out.fail(prefix + str(fail))


def _recheck_algebra(obj) -> RecheckResult:
    out = RecheckResult(True)
    _from_report(validate_algebra(jsonio.algebra_from_json(obj)), out)
    return out


def _recheck_coalgebra(obj) -> RecheckResult:
    out = RecheckResult(True)
    _from_report(validate_coalgebra(jsonio.coalgebra_from_json(obj)), out)
    return out


def _recheck_bialgebra(obj) -> RecheckResult:
    out = RecheckResult(True)
    _from_report(validate_bialgebra(jsonio.bialgebra_from_json(obj)), out)
    return out


def _recheck_entwining(obj) -> RecheckResult:
    out = RecheckResult(True)
    _from_report(validate_entwining(jsonio.entwining_from_json(obj)), out)
    return out


def _recheck_comodule_algebra(obj) -> RecheckResult:
    out = RecheckResult(True)
    _from_report(validate_comodule_algebra_galois(jsonio.comodule_algebra_from_json(obj)), out)
    return out


def _recheck_datum(obj) -> RecheckResult:
    out = RecheckResult(True)
    _from_report(validate_doi_hopf_datum(jsonio.doi_hopf_datum_from_json(obj)), out)
    return out


def _recheck_module(obj) -> RecheckResult:
    out = RecheckResult(True)
    _from_report(validate_entwined_module(jsonio.entwined_module_from_json(obj)), out)
    return out


def _recheck_integral_space(obj) -> RecheckResult:
    out = RecheckResult(True)
    space = jsonio.integral_space_from_json(obj)
    e = space.entwining
    rep = validate_entwining(e)
    if not rep.ok:
        _from_report(rep, out, "entwining: ")
        return out
    if space.kind == "smash":
        smash = build_smash(e)
        for idx, lam in enumerate(space.basis):
            if not is_smash_integral(smash, lam):
                out.fail(f"basis vector {idx} is not a smash integral")
    else:
        for idx, x in enumerate(space.basis):
            if not is_entwining_integral(e, x):
                out.fail(f"basis vector {idx} is not an integral")
    if int(obj.get("dim", len(space.basis))) != len(space.basis):
        out.fail("claimed dimension does not match the basis length")
    return out


def _recheck_frobenius(obj) -> RecheckResult:
    out = RecheckResult(True)
    cert = jsonio.frobenius_certificate_from_json(obj)
    e = cert.entwining
    rep = validate_entwining(e)
    if not rep.ok:
        _from_report(rep, out, "entwining: ")
        return out
    n, m = e.algebra.dim, e.coalgebra.dim
    ident = Mat.identity(e.field, cert.phi.rows)
    if cert.phi.mul(cert.inverse) != ident or cert.inverse.mul(cert.phi) != ident:
        out.fail("recorded inverse is not a two-sided inverse of phi")
    if cert.criterion == "integral":
        x = cert.witness.get("x")
        if x is None or len(x) != n * m:
            out.fail("missing or malformed integral witness")
            return out
        if not is_entwining_integral(e, x):
            out.fail("witness x is not an integral")
        if assemble_phi_from_integral(e, x) != cert.phi:
            out.fail("recorded phi does not match the map assembled from x")
        elif out.accepted:
            _from_report(_bimodule_comodule_checks(e, cert.phi), out)
    elif cert.criterion in ("element", "form"):
        ev = cert.witness.get("e")
        if cert.criterion == "form":
            gram = cert.witness.get("gram")
            if gram is None:
                out.fail("missing gram witness")
                return out
            check = frobenius_form_check(e, gram=gram)
            _from_report(check.report, out)
            ev = check.derived_e
        if ev is None or len(ev) != m:
            out.fail("missing or malformed element witness")
            return out
        # the element must commute with every a under psi
        F = e.field
        for i in range(n):
            for j in range(n):
                for q in range(m):
                    lhs = F.zero
                    for p in range(m):
                        lhs = F.add(lhs, F.mul(ev[p], e.psi[p][i][j][q]))
                    want = ev[q] if i == j else F.zero
                    if lhs != want:
                        out.fail(f"witness e does not commute under psi at ({i},{j},{q})")
                        break
        if cert.criterion == "element" and left_hit_matrix(e, ev) != cert.phi:
            out.fail("recorded phi does not match the left-hit matrix of e")
        elif out.accepted:
            _from_report(element_certificate_checks(e, ev, left_hit_matrix(e, ev),
                                                    build_psi_bar(e)), out)
    else:
        out.fail(f"unknown criterion {cert.criterion!r}")
    return out


def _recheck_integral_map(obj) -> RecheckResult:
    out = RecheckResult(True)
    phi = jsonio.integral_map_from_json(obj)
    rep = validate_entwining(phi.entwining)
    if not rep.ok:
        _from_report(rep, out, "entwining: ")
        return out
    _from_report(integral_map_failures(phi.entwining, phi.tensor), out)
    _from_report(integral_map_failures_diagram(phi.entwining, phi.tensor), out)
    return out


def _recheck_cointegral_map(obj) -> RecheckResult:
    out = RecheckResult(True)
    phi = jsonio.cointegral_map_from_json(obj)
    rep = validate_entwining(phi.entwining)
    if not rep.ok:
        _from_report(rep, out, "entwining: ")
        return out
    _from_report(cointegral_map_failures(phi.entwining, phi.tensor), out)
    _from_report(cointegral_map_failures_diagram(phi.entwining, phi.tensor), out)
    _from_report(lifted_cointegral_failures(phi.entwining, phi.tensor), out)
    return out


def _recheck_split(obj) -> RecheckResult:
    out = RecheckResult(True)
    cert = jsonio.split_certificate_from_json(obj)
    e = cert.entwining
    F = e.field
    rep = validate_entwining(e)
    if not rep.ok:
        _from_report(rep, out, "entwining: ")
        return out
    for label, mod in (("module", cert.module), ("target", cert.target)):
        rep = validate_entwined_module(mod)
        _from_report(rep, out, f"{label}: ")
    if not out.accepted:
        return out
    if cert.kind == "integral":
        phi = NormalizedIntegralMap(e, cert.phi_tensor, 0)
        _from_report(integral_map_failures(e, cert.phi_tensor), out, "phi: ")
        _from_report(integral_map_failures_diagram(e, cert.phi_tensor), out, "phi: ")
        g_rebuilt = assemble_g_tilde_integral(phi, cert.module, cert.target, cert.g)
        rep = module_map_failures(cert.g, cert.module.as_module(), cert.target.as_module())
        _from_report(rep, out, "g: ")
    else:
        phi = NormalizedCointegralMap(e, cert.phi_tensor, 0)
        _from_report(cointegral_map_failures(e, cert.phi_tensor), out, "phi: ")
        _from_report(cointegral_map_failures_diagram(e, cert.phi_tensor), out, "phi: ")
        g_rebuilt = assemble_g_tilde_cointegral(phi, cert.module, cert.target, cert.g)
        rep = comodule_map_failures(cert.g, cert.module.as_comodule(), cert.target.as_comodule())
        _from_report(rep, out, "g: ")
    _from_report(is_morphism(cert.f, cert.target, cert.module), out, "f: ")
    if cert.mode == "section":
        if cert.f.mul(cert.g) != Mat.identity(F, cert.module.dim):
            out.fail("g is not a section of f")
    else:
        if cert.g.mul(cert.f) != Mat.identity(F, cert.target.dim):
            out.fail("g is not a retraction of f")
    if g_rebuilt != cert.g_tilde:
        out.fail("recorded g~ does not match re-assembly from (phi, g)")
    _from_report(is_morphism(cert.g_tilde, cert.module, cert.target), out, "g~: ")
    if cert.mode == "section":
        if cert.f.mul(cert.g_tilde) != Mat.identity(F, cert.module.dim):
            out.fail("g~ is not a section of f")
    else:
        if cert.g_tilde.mul(cert.f) != Mat.identity(F, cert.target.dim):
            out.fail("g~ is not a retraction of f")
    return out


def _recheck_report(obj) -> RecheckResult:
    """Recheck every certificate-like payload embedded in a report."""
    out = RecheckResult(True)
    payload = obj.get("result")
    found = False
    if isinstance(payload, dict) and "kind" in payload:
        sub = recheck_document(payload)
        found = True
        if not sub.accepted:
            out.failures.extend(sub.failures)
            out.accepted = False
    if not found:
        out.fail("report contains no recheckable payload")
    return out
