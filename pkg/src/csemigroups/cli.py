"""Command-line front end.

Subcommands: `invariants` (full report for a semigroup document), `construct`
(the parameterized families), `decompose`, `sweep` (type growth data across a
family), and `verify` (re-derive the catalogue of worked examples against the
golden file). Exit codes: 0 success, 1 verification failure, 2 invalid input.

A semigroup document is a JSON object with exactly one of:
  {"generators": [[...], ...], "bound": 100}   integer vectors, optional bound
  {"cone_rays": [[...], ...], "gaps": [[...], ...]}
  {"numerical": [n1, n2, ...]}                 positive integers
"""

from __future__ import annotations

import argparse
import json
import sys
from importlib import resources

from . import constructions, decomposition, invariants, lattice, semigroup
from .errors import CSemigroupError, InvalidParameter
from .numerical import numerical_semigroup


# ---------------------------------------------------------------------------
# Documents.


def parse_document(doc: dict):
    """Build a model from a semigroup document."""
    keys = {"generators", "cone_rays", "gaps", "numerical", "bound"}
    unknown = set(doc) - keys
    if unknown:
        raise InvalidParameter(f"unknown document keys: {sorted(unknown)}")
    has_gen = "generators" in doc
    has_cone = "cone_rays" in doc or "gaps" in doc
    has_num = "numerical" in doc
    if sum([has_gen, has_cone, has_num]) != 1:
        raise InvalidParameter(
            "document must contain exactly one of generators / cone_rays+gaps / numerical")
    if has_gen:
        gens = [_vector(v) for v in doc["generators"]]
        bound = int(doc.get("bound", semigroup.DEFAULT_SEARCH_BOUND))
        return semigroup.from_generators(gens, bound)
    if has_cone:
        if "cone_rays" not in doc or "gaps" not in doc:
            raise InvalidParameter("cone documents need both cone_rays and gaps")
        rays = [_vector(v) for v in doc["cone_rays"]]
        gaps = [_vector(v) for v in doc["gaps"]]
        return semigroup.from_gap_set(rays, gaps)
    ns = numerical_semigroup([_integer(x) for x in doc["numerical"]])
    return ns.to_model()


def model_document(model) -> dict:
    """Canonical re-ingestable document for a built model."""
    return {
        "cone_rays": [list(r) for r in model.cone.rays],
        "gaps": [list(g) for g in model.gaps],
    }


def _vector(v):
    if not isinstance(v, (list, tuple)) or not v:
        raise InvalidParameter(f"expected an integer vector, got {v!r}")
    return tuple(_integer(x) for x in v)


def _integer(x):
    if isinstance(x, bool) or not isinstance(x, int):
        raise InvalidParameter(f"expected an integer, got {x!r}")
    return int(x)


def _load_input(path: str) -> dict:
    text = sys.stdin.read() if path == "-" else open(path, "r", encoding="utf-8").read()
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise InvalidParameter(f"input is not valid JSON: {exc}") from exc
    if not isinstance(doc, dict):
        raise InvalidParameter("input document must be a JSON object")
    return doc


# ---------------------------------------------------------------------------
# Report rendering.


def report_payload(model) -> dict:
    rep = invariants.classify(model)
    return {
        "dimension": model.dim,
        "cone_rays": [list(r) for r in model.cone.rays],
        "extremal_ray_elements": [list(r) for r in model.extremal_rays],
        "min_generators": [list(g) for g in model.min_generators],
        "gap_count": len(model.gaps),
        "gaps": [list(g) for g in model.gaps],
        "pseudo_frobenius": [list(p) for p in rep.pseudo_frobenius],
        "special_gaps": [list(p) for p in rep.special_gaps],
        "frobenius_allowable": [list(p) for p in rep.frobenius_allowable],
        "cone_maximal_gaps": [list(p) for p in rep.cone_maximal_gaps],
        "cone_frobenius": list(rep.cone_frobenius) if rep.cone_frobenius else None,
        "conductor_complement": [list(p) for p in rep.conductor_complement],
        "type": rep.type,
        "tau": rep.tau,
        "reduced_type": [{"ray": list(k), "value": v}
                         for k, v in sorted(rep.reduced_type.items())],
        "flags": {
            "symmetric": rep.symmetric,
            "almost_symmetric": rep.almost_symmetric,
            "quasi_irreducible": rep.quasi_irreducible,
            "quasi_symmetric": rep.quasi_symmetric,
            "irreducible": rep.irreducible,
            "minimal_reduced_type": rep.minimal_reduced_type,
            "maximal_reduced_type": rep.maximal_reduced_type,
            "trivial": rep.trivial,
        },
    }


def _set_str(points) -> str:
    if not points:
        return "{}"
    return "{" + ", ".join(str(tuple(p)) for p in points) + "}"


def render_text(payload: dict) -> str:
    lines = [
        f"dimension: {payload['dimension']}",
        f"cone rays: {_set_str(payload['cone_rays'])}",
        f"minimal extremal ray elements E: {_set_str(payload['extremal_ray_elements'])}",
        f"minimal generators ({len(payload['min_generators'])}): "
        f"{_set_str(payload['min_generators'])}",
        f"gaps H(S) ({payload['gap_count']}): {_set_str(payload['gaps'])}",
        f"PF(S) = {_set_str(payload['pseudo_frobenius'])}",
        f"SG(S) = {_set_str(payload['special_gaps'])}",
        f"FA(S) = {_set_str(payload['frobenius_allowable'])}",
        f"Maximals_C H(S) = {_set_str(payload['cone_maximal_gaps'])}",
        f"F_C(S) = {tuple(payload['cone_frobenius']) if payload['cone_frobenius'] else 'does not exist'}",
        f"S \\ conductor = {_set_str(payload['conductor_complement'])}",
        f"type t(S) = {payload['type']}",
        f"tau(S) = {payload['tau']}",
    ]
    for item in payload["reduced_type"]:
        lines.append(f"reduced type s(S, {tuple(item['ray'])}) = {item['value']}")
    flags = payload["flags"]
    lines.append("flags: " + ", ".join(
        f"{name}={'yes' if flags[name] else 'no'}"
        for name in ("symmetric", "almost_symmetric", "quasi_irreducible",
                     "quasi_symmetric", "irreducible", "minimal_reduced_type",
                     "maximal_reduced_type")))
    return "\n".join(lines)


def emit(payload, fmt: str):
    if fmt == "json":
        sys.stdout.write(json.dumps(payload, sort_keys=True, separators=(",", ":")) + "\n")
    else:
        if isinstance(payload, dict) and "report" in payload:
            if "document" in payload:
                doc = payload["document"]
                if "numerical" in doc:
                    sys.stdout.write(f"numerical generators: {doc['numerical']}\n")
            sys.stdout.write(render_text(payload["report"]) + "\n")
        else:
            sys.stdout.write(render_text(payload) + "\n")


# ---------------------------------------------------------------------------
# Subcommands.


def cmd_invariants(args) -> int:
    model = parse_document(_load_input(args.input))
    if args.bound is not None and model is None:
        pass
    payload = report_payload(model)
    emit(payload, args.format)
    return 0


def _parse_int_list(text: str):
    return [int(x) for x in text.replace(" ", "").split(",") if x != ""]


def _parse_vectors(text: str):
    return [tuple(int(x) for x in chunk.split(",")) for chunk in
            text.replace(" ", "").split(";") if chunk]


def cmd_construct(args) -> int:
    fam = args.family
    if fam == "bresinsky":
        ns = constructions.bresinsky(args.h)
        model = ns.to_model()
        doc = {"numerical": list(ns.min_generators)}
    elif fam == "gluing":
        s1 = numerical_semigroup(_parse_int_list(args.s1))
        s2 = numerical_semigroup(_parse_int_list(args.s2))
        res = constructions.glue(s1, s2, args.lam, args.mu)
        model = res.semigroup.to_model()
        doc = {"numerical": list(res.semigroup.min_generators)}
    elif fam == "nice-extension":
        s = numerical_semigroup(_parse_int_list(args.s))
        ns = constructions.nice_extension(s, _parse_int_list(args.coeffs), args.p)
        model = ns.to_model()
        doc = {"numerical": list(ns.min_generators)}
    elif fam == "tgraded":
        t = numerical_semigroup(_parse_int_list(args.t))
        model = constructions.t_graded(t, args.d)
        doc = model_document(model)
    elif fam == "thicken":
        base = parse_document(_load_input(args.input))
        model = constructions.thicken(base, args.k, args.axis)
        doc = model_document(model)
    elif fam == "sfamily":
        model = constructions.s_family(args.a, args.r, args.d)
        doc = model_document(model)
    elif fam == "antichain":
        cone = lattice.cone_from_rays(_parse_vectors(args.rays))
        model = constructions.antichain_semigroup(cone, _parse_vectors(args.points))
        doc = model_document(model)
    else:
        raise InvalidParameter(f"unknown family {fam}")
    emit({"document": doc, "report": report_payload(model)}, args.format)
    return 0


def cmd_decompose(args) -> int:
    model = parse_document(_load_input(args.input))
    result = decomposition.decompose(model)
    verified, diagnostics = decomposition.verify_decomposition(model, result.components)
    payload = {
        "components": [model_document(c) for c in result.components],
        "component_count": len(result.components),
        "cover_map": {",".join(map(str, h)): i for h, i in sorted(result.cover_map.items())},
        "lower_bound": result.lower_bound,
        "verified": verified,
        "uncovered_special_gaps": diagnostics["uncovered_special_gaps"],
    }
    if args.format == "json":
        emit(payload, "json")
    else:
        lines = [f"irreducible components: {payload['component_count']} "
                 f"(lower bound {payload['lower_bound']}, verified: "
                 f"{'yes' if verified else 'no'})"]
        for i, comp in enumerate(payload["components"]):
            lines.append(f"  component {i}: gaps {_set_str(comp['gaps'])}")
        for h, i in payload["cover_map"].items():
            lines.append(f"  special gap ({h}) kept by component {i}")
        sys.stdout.write("\n".join(lines) + "\n")
    return 0


def cmd_sweep(args) -> int:
    rows = []
    if args.family == "bresinsky":
        lo, hi = _parse_range(args.h_range)
        for h in range(lo, hi + 1):
            ns = constructions.bresinsky(h)
            rows.append({"h": h, "embedding_dimension": len(ns.min_generators),
                         "type": ns.type(), "reduced_type": ns.reduced_type()})
        headers = ["h", "embedding_dimension", "type", "reduced_type"]
    elif args.family == "sfamily":
        lo, hi = _parse_range(args.a_range)
        for a in range(lo, hi + 1):
            if a <= args.r + 1:
                continue
            model = constructions.s_family(a, args.r, args.d)
            rep = invariants.classify(model)
            rows.append({"a": a, "r": args.r, "d": args.d,
                         "embedding_dimension": len(model.min_generators),
                         "type": rep.type,
                         "reduced_type": sorted(rep.reduced_type.values()),
                         "almost_symmetric": rep.almost_symmetric})
        headers = ["a", "r", "d", "embedding_dimension", "type",
                   "reduced_type", "almost_symmetric"]
    else:
        raise InvalidParameter(f"unknown sweep family {args.family}")
    if args.format == "json":
        emit(rows, "json")
    else:
        sys.stdout.write("  ".join(headers) + "\n")
        for row in rows:
            sys.stdout.write("  ".join(str(row[h]) for h in headers) + "\n")
    return 0


def _parse_range(text: str):
    if ":" in text:
        lo, hi = text.split(":")
        return int(lo), int(hi)
    v = int(text)
    return v, v


# ---------------------------------------------------------------------------
# Worked-example verification.


def _load_golden(path: str | None):
    if path is None:
        with resources.files("csemigroups.data").joinpath("worked_examples.json").open(
                "r", encoding="utf-8") as fh:
            return json.load(fh)
    with open(path, "r", encoding="utf-8") as fh:
        return json.load(fh)


def _pts(items):
    return tuple(sorted(tuple(p) for p in items))


def _run_example(entry) -> tuple[bool, str]:
    from .verify_examples import run_check

    return run_check(entry)


def cmd_verify(args) -> int:
    table = _load_golden(args.golden)
    rows = [e for e in table if args.only is None or e["id"] == args.only]
    if not rows:
        raise InvalidParameter(f"no worked example with id {args.only!r}")
    failures = 0
    out = []
    for entry in rows:
        try:
            ok, detail = _run_example(entry)
        except CSemigroupError as exc:
            ok, detail = False, f"{type(exc).__name__}: {exc}"
        status = "ok  " if ok else "FAIL"
        if not ok:
            failures += 1
        out.append({"id": entry["id"], "status": "pass" if ok else "fail",
                    "detail": detail})
        if args.format != "json":
            line = f"{status}  {entry['id']}"
            if not ok:
                line += f"  [{detail}]"
            sys.stdout.write(line + "\n")
    if args.format == "json":
        emit({"results": out, "failures": failures}, "json")
    else:
        sys.stdout.write(f"{len(rows) - failures} passed, {failures} failed\n")
    return 1 if failures else 0


# ---------------------------------------------------------------------------
# Entry point.


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="csemigroups",
        description="Exact invariants, constructions and decompositions of "
                    "affine C-semigroups.")
    sub = parser.add_subparsers(dest="command", required=True)

    p_inv = sub.add_parser("invariants", help="full invariant report for a document")
    p_inv.add_argument("--input", required=True, help="path to a JSON document, or - for stdin")
    p_inv.add_argument("--format", choices=("text", "json"), default="text")
    p_inv.add_argument("--bound", type=int, default=None,
                       help="generator search bound override (documents may set their own)")
    p_inv.set_defaults(func=cmd_invariants)

    p_con = sub.add_parser("construct", help="build a parameterized family member")
    p_con.add_argument("family", choices=("bresinsky", "gluing", "nice-extension",
                                          "tgraded", "thicken", "sfamily", "antichain"))
    p_con.add_argument("--h", type=int, help="bresinsky parameter (h >= 2)")
    p_con.add_argument("--s1", help="first numerical semigroup, e.g. 3,4,5")
    p_con.add_argument("--s2", help="second numerical semigroup")
    p_con.add_argument("--lam", type=int, help="gluing factor from the second semigroup")
    p_con.add_argument("--mu", type=int, help="gluing factor from the first semigroup")
    p_con.add_argument("--s", help="numerical semigroup to extend, e.g. 3,4,5")
    p_con.add_argument("--coeffs", help="extension coefficients, e.g. 1,1,0")
    p_con.add_argument("--p", type=int, help="extension multiplier")
    p_con.add_argument("--t", help="grading numerical semigroup, e.g. 5,6,7")
    p_con.add_argument("--d", type=int, help="ambient dimension")
    p_con.add_argument("--input", help="document for the semigroup to thicken")
    p_con.add_argument("--k", type=int, help="thickening depth")
    p_con.add_argument("--axis", type=int, help="thickening axis (1-based)")
    p_con.add_argument("--a", type=int, help="sfamily parameter a")
    p_con.add_argument("--r", type=int, help="sfamily parameter r")
    p_con.add_argument("--rays", help="cone rays, e.g. '1,0;0,1'")
    p_con.add_argument("--points", help="antichain points, e.g. '1,2;2,1'")
    p_con.add_argument("--format", choices=("text", "json"), default="text")
    p_con.set_defaults(func=cmd_construct)

    p_dec = sub.add_parser("decompose", help="decompose into irreducible C-semigroups")
    p_dec.add_argument("--input", required=True)
    p_dec.add_argument("--format", choices=("text", "json"), default="text")
    p_dec.set_defaults(func=cmd_decompose)

    p_sweep = sub.add_parser("sweep", help="tabulate type growth across a family")
    p_sweep.add_argument("--family", choices=("bresinsky", "sfamily"), required=True)
    p_sweep.add_argument("--h-range", default="2:6", help="bresinsky range lo:hi")
    p_sweep.add_argument("--a-range", default="4:8", help="sfamily range lo:hi")
    p_sweep.add_argument("--r", type=int, default=1)
    p_sweep.add_argument("--d", type=int, default=2)
    p_sweep.add_argument("--format", choices=("text", "json"), default="text")
    p_sweep.set_defaults(func=cmd_sweep)

    p_ver = sub.add_parser("verify", help="re-derive the worked-example catalogue")
    p_ver.add_argument("--only", default=None, help="run a single example id")
    p_ver.add_argument("--golden", default=None, help="alternate golden file")
    p_ver.add_argument("--format", choices=("text", "json"), default="text")
    p_ver.set_defaults(func=cmd_verify)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except CSemigroupError as exc:
        sys.stderr.write(f"error: {type(exc).__name__}: {exc}\n")
        return 2
    except FileNotFoundError as exc:
        sys.stderr.write(f"error: {exc}\n")
        return 2


if __name__ == "__main__":
    sys.exit(main())
