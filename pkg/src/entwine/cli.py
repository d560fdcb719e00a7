"""Command-line front end.

Every command prints a deterministic report JSON (canonical key order, no
timestamps) and exits 0 whenever a verdict was computed, including negative
verdicts such as "no certificate found", "none exists", "not Galois" or a
rejected certificate.  Nonzero exit means an operational error: unreadable
or malformed input, or an input structure that fails validation for a
command that needs it valid.  `validate` itself always exits 0 and carries
the failure list in its report.

`--output FILE` writes the same report that is printed; commands that
consume structures accept either a bare structure JSON or a report whose
`result` holds one.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from typing import Optional

from . import __version__
from . import jsonio
from .recheck import recheck_document
from .catalog import CATALOG, catalog_entry, catalog_list
from .fields import Field
from .linalg import Mat
from .structures import (build_flip, build_doi_hopf, entwining_morphism_report,
                         validate_algebra, validate_bialgebra,
                         validate_coalgebra, validate_doi_hopf_datum,
                         validate_entwining)
from .entmod import validate_entwined_module
from .galois import canonical_entwining, validate_comodule_algebra_galois
from .frobint import (FrobeniusCertificate, build_smash, entwining_integrals,
                      frobenius_element_search, frobenius_form_check,
                      frobenius_search, smash_integrals)
from .maschke import (find_cointegral_map, find_integral_map,
                      make_section_instance, make_retraction_instance,
                      split_with_cointegral_map, split_with_integral_map)
import random


class CliError(Exception):
    """Operational error: bad input, failed precondition, unknown name."""


def _load_json(path: str) -> dict:
    try:
        with open(path) as fh:
            return json.load(fh)
    except OSError as exc:
        raise CliError(f"cannot read {path}: {exc}") from exc
    except json.JSONDecodeError as exc:
        raise CliError(f"malformed JSON in {path}: {exc}") from exc


def _unwrap(obj: dict) -> dict:
    if obj.get("kind") == "report" and isinstance(obj.get("result"), dict):
        return obj["result"]
    return obj


def _report(command: str, inputs, verdict: str, result=None, seed=None,
            trials=None, diagnostics=None) -> dict:
    return {
        "kind": "report",
        "command": command,
        "version": __version__,
        "inputs_digest": jsonio.digest(inputs),
        "seed": seed,
        "trials": trials,
        "verdict": verdict,
        "diagnostics": diagnostics or [],
        "result": result,
    }


def _require_valid(report, what: str):
    if not report.ok:
        raise CliError(f"invalid {what}:\n" + report.describe())


def _load_entwining(path: str):
    obj = _unwrap(_load_json(path))
    if obj.get("kind") != "entwining":
        raise CliError(f"{path} does not hold an entwining (kind={obj.get('kind')!r})")
    e = jsonio.entwining_from_json(obj)
    _require_valid(validate_entwining(e), "entwining")
    return e, obj


# -- commands -----------------------------------------------------------------

def cmd_validate(args) -> dict:
    obj = _unwrap(_load_json(args.input))
    kind = obj.get("kind")
    validators = {
        "algebra": lambda o: validate_algebra(jsonio.algebra_from_json(o)),
        "coalgebra": lambda o: validate_coalgebra(jsonio.coalgebra_from_json(o)),
        "bialgebra": lambda o: validate_bialgebra(jsonio.bialgebra_from_json(o)),
        "entwining": lambda o: validate_entwining(jsonio.entwining_from_json(o)),
        "comodule_algebra": lambda o: validate_comodule_algebra_galois(
            jsonio.comodule_algebra_from_json(o)),
        "doi_hopf_datum": lambda o: validate_doi_hopf_datum(
            jsonio.doi_hopf_datum_from_json(o)),
        "entwined_module": lambda o: validate_entwined_module(
            jsonio.entwined_module_from_json(o, base_dir=os.path.dirname(args.input))),
        "entwining_morphism": _validate_morphism_json,
    }
    if kind not in validators:
        raise CliError(f"cannot validate documents of kind {kind!r}")
    rep = validators[kind](obj)
    verdict = "valid" if rep.ok else "invalid"
    return _report("validate", obj, verdict,
                   diagnostics=[str(f) for f in rep.failures])


def _validate_morphism_json(obj):
    src = jsonio.entwining_from_json(obj["source"])
    dst = jsonio.entwining_from_json(obj["target"])
    f = src.field
    f_rows = [[f.parse(x) for x in row] for row in obj["f"]]
    g_rows = [[f.parse(x) for x in row] for row in obj["g"]]
    return entwining_morphism_report(src, dst, f_rows, g_rows)


def cmd_build(args) -> dict:
    obj = _unwrap(_load_json(args.input))
    if args.what == "flip":
        a = jsonio.algebra_from_json(obj["algebra"])
        c = jsonio.coalgebra_from_json(obj["coalgebra"])
        _require_valid(validate_algebra(a), "algebra")
        _require_valid(validate_coalgebra(c), "coalgebra")
        e = build_flip(a, c)
        return _report("build flip", obj, "built", jsonio.entwining_to_json(e))
    if args.what == "doi-hopf":
        if obj.get("kind") != "doi_hopf_datum":
            raise CliError("build doi-hopf expects a doi_hopf_datum JSON")
        datum = jsonio.doi_hopf_datum_from_json(obj)
        try:
            e = build_doi_hopf(datum)
        except ValueError as exc:
            raise CliError(str(exc)) from exc
        return _report("build doi-hopf", obj, "built", jsonio.entwining_to_json(e))
    if args.what == "galois":
        if obj.get("kind") != "comodule_algebra":
            raise CliError("build galois expects a comodule_algebra JSON")
        ca = jsonio.comodule_algebra_from_json(obj)
        try:
            outcome = canonical_entwining(ca)
        except ValueError as exc:
            raise CliError(str(exc)) from exc
        if not outcome.ok:
            return _report("build galois", obj, "not Galois",
                           diagnostics=[outcome.reason,
                                        f"quotient dimension {outcome.quotient_dim}",
                                        f"target dimension {outcome.target_dim}",
                                        f"rank {outcome.rank}",
                                        f"rank defect {outcome.rank_defect}"])
        result = jsonio.entwining_to_json(outcome.entwining)
        f = ca.field
        diag = ["coinvariant basis: "
                + json.dumps([[f.to_str(x) for x in b] for b in outcome.data.b_basis])]
        return _report("build galois", obj, "built", result, diagnostics=diag)
    raise CliError(f"unknown build target {args.what!r}")


def cmd_smash(args) -> dict:
    e, obj = _load_entwining(args.input)
    x = build_smash(e)
    return _report("smash", obj, "built", jsonio.algebra_to_json(x.algebra))


def cmd_integrals(args) -> dict:
    e, obj = _load_entwining(args.input)
    if args.kind == "smash":
        space = smash_integrals(build_smash(e))
    else:
        space = entwining_integrals(e)
    return _report(f"integrals {args.kind}", obj,
                   f"dimension {space.dim}", jsonio.integral_space_to_json(space))


def cmd_frobenius(args) -> dict:
    e, obj = _load_entwining(args.input)
    if args.via == "integral":
        res = frobenius_search(e, seed=args.seed, trials=args.trials)
    elif args.via == "element":
        res = frobenius_element_search(e, seed=args.seed, trials=args.trials)
    else:  # form: derive an element witness, then certify through the form
        res = frobenius_element_search(e, seed=args.seed, trials=args.trials)
        if isinstance(res, FrobeniusCertificate):
            check = frobenius_form_check(e, element=res.witness["e"])
            res = FrobeniusCertificate("form", e, {"gram": check.gram},
                                       check.gram, check.inverse,
                                       ["form is bilinear, associative, non-degenerate",
                                        "compatibility diagram verified",
                                        "reconstructed element verified"])
    if isinstance(res, FrobeniusCertificate):
        return _report(f"frobenius via {args.via}", obj, "certificate",
                       jsonio.frobenius_certificate_to_json(res),
                       seed=args.seed, trials=args.trials)
    return _report(f"frobenius via {args.via}", obj, res.reason,
                   seed=args.seed, trials=args.trials,
                   diagnostics=[f"rank {res.rank} of {res.expected_rank}"])


def cmd_integral_map(args) -> dict:
    e, obj = _load_entwining(args.input)
    res = find_integral_map(e)
    if res.found:
        return _report("integral-map", obj,
                       f"found (solution space dimension {res.map.solution_dim})",
                       jsonio.integral_map_to_json(res.map))
    return _report("integral-map", obj, "none exists", diagnostics=[res.reason])


def cmd_cointegral_map(args) -> dict:
    e, obj = _load_entwining(args.input)
    res = find_cointegral_map(e)
    if res.found:
        return _report("cointegral-map", obj,
                       f"found (solution space dimension {res.map.solution_dim})",
                       jsonio.cointegral_map_to_json(res.map))
    return _report("cointegral-map", obj, "none exists", diagnostics=[res.reason])


def cmd_split(args) -> dict:
    mobj = _unwrap(_load_json(args.module))
    kobj = _unwrap(_load_json(args.target))
    m_mod = jsonio.entwined_module_from_json(mobj, base_dir=os.path.dirname(args.module))
    k_mod = jsonio.entwined_module_from_json(
        kobj, entwining=m_mod.entwining, base_dir=os.path.dirname(args.target))
    _require_valid(validate_entwined_module(m_mod), "module")
    _require_valid(validate_entwined_module(k_mod), "target module")
    e = m_mod.entwining
    inputs = {"module": mobj, "target": kobj}
    rng = random.Random(args.seed)
    if args.kind == "integral":
        res = find_integral_map(e)
        if not res.found:
            return _report("split integral", inputs, "no integral map exists",
                           seed=args.seed, diagnostics=[res.reason])
        if args.mode == "section":
            n_mod, f, g = make_section_instance(m_mod, k_mod, rng)
            cert = split_with_integral_map(res.map, m_mod, n_mod, f, g, "section")
        else:
            n_big, f, g = make_retraction_instance(m_mod, k_mod, rng)
            cert = split_with_integral_map(res.map, n_big, m_mod, f, g, "retraction")
    else:
        res = find_cointegral_map(e)
        if not res.found:
            return _report("split cointegral", inputs, "no cointegral map exists",
                           seed=args.seed, diagnostics=[res.reason])
        if args.mode == "section":
            n_mod, f, g = make_section_instance(m_mod, k_mod, rng, colinear=True)
            cert = split_with_cointegral_map(res.map, m_mod, n_mod, f, g, "section")
        else:
            n_big, f, g = make_retraction_instance(m_mod, k_mod, rng, colinear=True)
            cert = split_with_cointegral_map(res.map, n_big, m_mod, f, g, "retraction")
    return _report(f"split {args.kind}", inputs, "split",
                   jsonio.split_certificate_to_json(cert), seed=args.seed)


def cmd_recheck(args) -> dict:
    obj = _load_json(args.input)
    try:
        res = recheck_document(obj)
    except (ValueError, KeyError, TypeError) as exc:
        raise CliError(f"cannot recheck: {exc}") from exc
    verdict = "accepted" if res.accepted else "rejected"
    return _report("recheck", obj, verdict, diagnostics=res.failures)


def cmd_catalog(args) -> dict:
    if args.action == "list":
        entries = [{"name": name, "notes": notes} for name, notes in catalog_list()]
        return _report("catalog list", {"catalog": "builtin"},
                       f"{len(entries)} entries", entries)
    # emit
    try:
        artifacts = catalog_entry(args.name, char=args.field)
    except (KeyError, ValueError) as exc:
        raise CliError(str(exc)) from exc
    outdir = args.output or "."
    os.makedirs(outdir, exist_ok=True)
    written = []
    for key in sorted(artifacts):
        payload = jsonio.structure_to_json(artifacts[key])
        fname = f"{args.name}.{key}.json"
        path = os.path.join(outdir, fname)
        data = jsonio.canonical_json_bytes(payload)
        with open(path, "wb") as fh:
            fh.write(data)
        written.append({"file": fname, "kind": payload["kind"],
                        "digest": jsonio.digest(payload)})
    return _report("catalog emit", {"name": args.name, "field": args.field},
                   f"wrote {len(written)} files", written, seed=None)


# -- argument parsing ----------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="entwine",
        description="exact verification and construction for entwining structures")
    parser.add_argument("--version", action="version", version=__version__)
    sub = parser.add_subparsers(dest="command", required=True)

    def add_common(p, output=True, seed=False, trials=False):
        if output:
            p.add_argument("--output", help="also write the report JSON to this file")
        if seed:
            p.add_argument("--seed", type=int, default=0, help="search seed (default 0)")
        if trials:
            p.add_argument("--trials", type=int, default=32,
                           help="random trials in searches (default 32)")

    p = sub.add_parser("validate", help="validate any structure JSON")
    p.add_argument("--input", required=True)
    add_common(p)
    p.set_defaults(func=cmd_validate)

    p = sub.add_parser("build", help="construct an entwining")
    p.add_argument("what", choices=["flip", "doi-hopf", "galois"])
    p.add_argument("--input", required=True)
    add_common(p)
    p.set_defaults(func=cmd_build)

    p = sub.add_parser("galois", help="alias of: build galois")
    p.add_argument("--input", required=True)
    add_common(p)
    p.set_defaults(func=cmd_build, what="galois")

    p = sub.add_parser("smash", help="build the smash product algebra")
    p.add_argument("--input", required=True)
    add_common(p)
    p.set_defaults(func=cmd_smash)

    p = sub.add_parser("integrals", help="compute a space of integrals")
    p.add_argument("--input", required=True)
    p.add_argument("--kind", choices=["smash", "entwining"], default="entwining")
    add_common(p)
    p.set_defaults(func=cmd_integrals)

    p = sub.add_parser("frobenius", help="search for a Frobenius certificate")
    p.add_argument("--input", required=True)
    p.add_argument("--via", choices=["integral", "element", "form"], default="integral")
    add_common(p, seed=True, trials=True)
    p.set_defaults(func=cmd_frobenius)

    p = sub.add_parser("integral-map", help="solve for a normalised integral map")
    p.add_argument("--input", required=True)
    add_common(p)
    p.set_defaults(func=cmd_integral_map)

    p = sub.add_parser("cointegral-map", help="solve for a normalised cointegral map")
    p.add_argument("--input", required=True)
    add_common(p)
    p.set_defaults(func=cmd_cointegral_map)

    p = sub.add_parser("split", help="produce a seeded splitting certificate")
    p.add_argument("--kind", choices=["integral", "cointegral"], required=True)
    p.add_argument("--module", required=True, help="entwined module JSON (M)")
    p.add_argument("--target", required=True, help="complement summand JSON (K)")
    p.add_argument("--mode", choices=["section", "retraction"], default="section")
    add_common(p, seed=True)
    p.set_defaults(func=cmd_split)

    p = sub.add_parser("recheck", help="independently re-verify a certificate")
    p.add_argument("--input", required=True)
    add_common(p)
    p.set_defaults(func=cmd_recheck)

    p = sub.add_parser("catalog", help="list or emit built-in examples")
    cat = p.add_subparsers(dest="action", required=True)
    pl = cat.add_parser("list")
    pl.add_argument("--output")
    pl.set_defaults(func=cmd_catalog, action="list")
    pe = cat.add_parser("emit")
    pe.add_argument("name")
    pe.add_argument("--field", type=int, default=0,
                    help="field characteristic (0 or a prime, default 0)")
    pe.add_argument("--output", help="directory for the emitted files")
    pe.set_defaults(func=cmd_catalog, action="emit")

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        report = args.func(args)
    except CliError as exc:
        print(f"entwine: error: {exc}", file=sys.stderr)
        return 1
    text = jsonio.canonical_json_bytes(report).decode()
    output = getattr(args, "output", None)
    if output and args.func is not cmd_catalog:
        with open(output, "w") as fh:
            fh.write(text)
    sys.stdout.write(text)
    return 0


if __name__ == "__main__":
    sys.exit(main())
