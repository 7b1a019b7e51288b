"""Runners for the worked-example catalogue used by the CLI `verify` command.

Each entry of the golden table names a check kind, an input, and the expected
values; the runner recomputes everything from scratch and compares exactly.
"""

from __future__ import annotations

from . import constructions, decomposition, invariants, lattice, semigroup
from .numerical import numerical_semigroup


def _pts(items):
    return tuple(sorted(tuple(int(x) for x in p) for p in items))


def _model(doc):
    from .cli import parse_document

    return parse_document(doc)


def _diff(name, expected, got):
    return f"{name}: expected {sorted(expected)}, got {sorted(got)}"


def run_check(entry) -> tuple[bool, str]:
    kind = entry["kind"]
    runner = _RUNNERS.get(kind)
    if runner is None:
        return False, f"unknown check kind {kind!r}"
    return runner(entry["input"], entry["expected"])


def _check_model_sets(inp, exp):
    model = _model(inp["document"])
    rep = invariants.classify(model)
    values = {
        "gaps": _pts(model.gaps),
        "min_generators": _pts(model.min_generators),
        "extremal_ray_elements": _pts(model.extremal_rays),
        "pseudo_frobenius": rep.pseudo_frobenius,
        "special_gaps": rep.special_gaps,
        "frobenius_allowable": rep.frobenius_allowable,
        "cone_maximal_gaps": rep.cone_maximal_gaps,
        "conductor_complement": rep.conductor_complement,
    }
    for key, want in exp.items():
        if values[key] != _pts(want):
            return False, _diff(key, _pts(want), values[key])
    return True, f"{len(exp)} set(s) match"


def _check_set_chain(inp, exp):
    model = _model(inp["document"])
    rep = invariants.classify(model)
    sets = {
        "frobenius_allowable": set(rep.frobenius_allowable),
        "cone_maximal_gaps": set(rep.cone_maximal_gaps),
        "special_gaps": set(rep.special_gaps),
        "pseudo_frobenius": set(rep.pseudo_frobenius),
    }
    chain = exp["chain"]
    strict = exp["strict"]
    for (a, b), must_be_strict in zip(zip(chain, chain[1:]), strict):
        if not sets[a] <= sets[b]:
            return False, f"{a} is not contained in {b}"
        if must_be_strict and sets[a] == sets[b]:
            return False, f"{a} should be strictly smaller than {b}"
        if not must_be_strict and sets[a] != sets[b]:
            return False, f"{a} should equal {b}"
    return True, "containment chain as stated"


def _check_apery(inp, exp):
    model = _model(inp["document"])
    ap = semigroup.apery_set(model)
    if "elements" in exp and ap.elements != _pts(exp["elements"]):
        return False, _diff("Ap(S,E)", _pts(exp["elements"]), ap.elements)
    if "element_count" in exp and len(ap.elements) != exp["element_count"]:
        return False, f"|Ap(S,E)| = {len(ap.elements)}, expected {exp['element_count']}"
    for p in exp.get("maximal", ()):
        if tuple(p) not in ap.maximal_elements:
            return False, f"{tuple(p)} should be a maximal Apery element"
    for p in exp.get("not_maximal", ()):
        if tuple(p) in ap.maximal_elements:
            return False, f"{tuple(p)} should not be a maximal Apery element"
    return True, f"|Ap(S,E)| = {len(ap.elements)}"


def _check_point_facts(inp, exp):
    model = _model(inp["document"])
    ap = semigroup.apery_set(model)
    cond = invariants.conductor(model)
    for check in exp["checks"]:
        p = tuple(check["point"])
        facts = {
            "in_conductor": p in cond,
            "in_apery": p in ap.elements,
            "in_apery_maximals": p in ap.maximal_elements,
            "in_semigroup": model.contains(p),
        }
        for key, want in check.items():
            if key == "point":
                continue
            if facts[key] != want:
                return False, f"{p}: {key} is {facts[key]}, expected {want}"
    return True, f"{len(exp['checks'])} point fact(s) hold"


def _check_conductor_equals_shift(inp, exp):
    model = _model(inp["document"])
    cond = invariants.conductor(model)
    corner = tuple(exp["corner"])
    lim = exp["box"]
    import itertools

    for x in itertools.product(range(lim + 1), repeat=model.dim):
        want = all(a >= b for a, b in zip(x, corner))
        if (x in cond) != want:
            return False, f"conductor at {x} is {x in cond}, expected {want}"
    return True, f"conductor = {corner} + N^{model.dim} on the box"


def _check_conductor_contains_shift(inp, exp):
    model = _model(inp["document"])
    cond = invariants.conductor(model)
    corner = tuple(exp["corner"])
    lim = exp["box"]
    import itertools

    for off in itertools.product(range(lim + 1), repeat=model.dim):
        x = tuple(a + b for a, b in zip(corner, off))
        if x not in cond:
            return False, f"{x} should lie in the conductor"
    return True, f"{corner} + N^{model.dim} inside the conductor (box check)"


def _check_apery_conductor_empty(inp, exp):
    model = _model(inp["document"])
    ap = semigroup.apery_set(model)
    cond = invariants.conductor(model)
    inside = [p for p in ap.maximal_elements if p in cond]
    if exp["empty"] and inside:
        return False, f"conductor meets the maximal Apery elements in {inside}"
    if not exp["empty"] and not inside:
        return False, "conductor misses every maximal Apery element"
    return True, ("conductor misses every maximal Apery element"
                  if exp["empty"] else f"intersection: {inside}")


def _check_classify(inp, exp):
    model = _model(inp["document"])
    rep = invariants.classify(model)
    for name, want in exp.get("flags", {}).items():
        got = getattr(rep, name)
        if got != want:
            return False, f"flag {name} is {got}, expected {want}"
    if "pseudo_frobenius" in exp and rep.pseudo_frobenius != _pts(exp["pseudo_frobenius"]):
        return False, _diff("PF", _pts(exp["pseudo_frobenius"]), rep.pseudo_frobenius)
    if "extremal_ray_elements" in exp and _pts(model.extremal_rays) != _pts(exp["extremal_ray_elements"]):
        return False, _diff("E", _pts(exp["extremal_ray_elements"]), _pts(model.extremal_rays))
    if "reduced_type_values" in exp:
        got = sorted(rep.reduced_type.values())
        if got != sorted(exp["reduced_type_values"]):
            return False, f"reduced types {got}, expected {exp['reduced_type_values']}"
    if "type" in exp and rep.type != exp["type"]:
        return False, f"type {rep.type}, expected {exp['type']}"
    return True, "classification as stated"


def _check_numerical(inp, exp):
    ns = numerical_semigroup(inp["generators"])
    facts = {
        "pseudo_frobenius": tuple(ns.pseudo_frobenius()),
        "frobenius": ns.frobenius,
        "type": ns.type(),
        "reduced_type": ns.reduced_type(),
        "min_generators": list(ns.min_generators),
        "gaps": list(ns.gaps),
    }
    for key, want in exp.items():
        got = facts[key]
        want_norm = tuple(want) if key == "pseudo_frobenius" else want
        if got != want_norm:
            return False, f"{key}: got {got}, expected {want}"
    return True, f"{len(exp)} value(s) match"


def _check_bresinsky_family(inp, exp):
    for h in range(inp["h_from"], inp["h_to"] + 1):
        ns = constructions.bresinsky(h)
        if ns.type() != 4 * h - 3:
            return False, f"h={h}: type {ns.type()} != {4 * h - 3}"
        if ns.reduced_type() != h:
            return False, f"h={h}: reduced type {ns.reduced_type()} != {h}"
    return True, f"type = 4h-3 and reduced type = h for h in {inp['h_from']}..{inp['h_to']}"


def _check_gluing(inp, exp):
    res = constructions.glue(
        numerical_semigroup(inp["s1"]), numerical_semigroup(inp["s2"]),
        inp["lam"], inp["mu"])
    if list(res.pseudo_frobenius) != exp["pseudo_frobenius"]:
        return False, _diff("PF", exp["pseudo_frobenius"], res.pseudo_frobenius)
    if res.frobenius != exp["frobenius"] or res.type != exp["type"]:
        return False, f"F={res.frobenius}, t={res.type}; expected {exp['frobenius']}, {exp['type']}"
    return True, f"PF = {list(res.pseudo_frobenius)}, F = {res.frobenius}, type = {res.type}"


def _check_tgraded(inp, exp):
    t = numerical_semigroup(inp["t"])
    model = constructions.t_graded(t, inp["d"])
    rep = invariants.classify(model)
    pf_degs = sorted({sum(p) for p in rep.pseudo_frobenius})
    fa_degs = sorted({sum(p) for p in rep.frobenius_allowable})
    if pf_degs != exp["pf_degrees"]:
        return False, f"PF degrees {pf_degs}, expected {exp['pf_degrees']}"
    if fa_degs != [exp["fa_degree"]]:
        return False, f"FA degrees {fa_degs}, expected [{exp['fa_degree']}]"
    if "pf_count" in exp and len(rep.pseudo_frobenius) != exp["pf_count"]:
        return False, f"|PF| = {len(rep.pseudo_frobenius)}, expected {exp['pf_count']}"
    if rep.maximal_reduced_type != exp["maximal_reduced_type"]:
        return False, f"maximal reduced type is {rep.maximal_reduced_type}"
    if rep.minimal_reduced_type:
        return False, "graded model reported minimal reduced type"
    return True, "graded closed forms hold"


def _check_thicken_chain(inp, exp):
    model = numerical_semigroup(inp["numerical"]).to_model()
    got = []
    for k, axis in inp["steps"]:
        model = constructions.thicken(model, k, axis)
        got.append(invariants.pseudo_frobenius(model))
    for step, (want, have) in enumerate(zip(exp["pf_after_each"], got)):
        if _pts(want) != have:
            return False, f"step {step}: " + _diff("PF", _pts(want), have)
    return True, "thickening shifts PF as computed"


def _check_sfamily(inp, exp):
    model = constructions.s_family(inp["a"], inp["r"], inp["d"])
    rep = invariants.classify(model)
    if len(model.min_generators) != exp["embedding_dimension"]:
        return False, f"e(S) = {len(model.min_generators)}, expected {exp['embedding_dimension']}"
    pf, fa = set(rep.pseudo_frobenius), set(rep.frobenius_allowable)
    for p in exp.get("pf_and_fa_contains", ()):
        if tuple(p) not in pf or tuple(p) not in fa:
            return False, f"{tuple(p)} missing from PF or FA"
    if rep.type < exp["type_at_least"]:
        return False, f"type {rep.type} below the bound {exp['type_at_least']}"
    return True, f"e = {exp['embedding_dimension']}, type {rep.type} >= {exp['type_at_least']}"


def _check_decompose(inp, exp):
    model = _model(inp["document"])
    result = decomposition.decompose(model)
    ok, diag = decomposition.verify_decomposition(model, result.components)
    if not ok:
        return False, f"decomposition failed verification: {diag}"
    if "component_count" in exp and len(result.components) != exp["component_count"]:
        return False, f"{len(result.components)} components, expected {exp['component_count']}"
    if "count_at_least" in exp and len(result.components) < exp["count_at_least"]:
        return False, f"{len(result.components)} components, expected >= {exp['count_at_least']}"
    if "component_gaps" in exp:
        got = sorted(tuple(sorted(c.gaps)) for c in result.components)
        want = sorted(_pts(g) for g in exp["component_gaps"])
        if got != want:
            return False, f"component gap sets {got} != expected {want}"
    if "lower_bound" in exp and result.lower_bound != exp["lower_bound"]:
        return False, f"lower bound {result.lower_bound}, expected {exp['lower_bound']}"
    return True, f"{len(result.components)} verified irreducible component(s)"


def _check_antichain(inp, exp):
    cone = lattice.cone_from_rays([tuple(r) for r in inp["rays"]])
    model = constructions.antichain_semigroup(cone, [tuple(p) for p in inp["points"]])
    if _pts(model.gaps) != _pts(exp["gaps"]):
        return False, _diff("gaps", _pts(exp["gaps"]), _pts(model.gaps))
    return True, f"{len(model.gaps)} gap(s) as expected"


_RUNNERS = {
    "model_sets": _check_model_sets,
    "set_chain": _check_set_chain,
    "apery": _check_apery,
    "point_facts": _check_point_facts,
    "conductor_equals_shift": _check_conductor_equals_shift,
    "conductor_contains_shift": _check_conductor_contains_shift,
    "apery_conductor_empty": _check_apery_conductor_empty,
    "classify": _check_classify,
    "numerical": _check_numerical,
    "bresinsky_family": _check_bresinsky_family,
    "gluing": _check_gluing,
    "tgraded": _check_tgraded,
    "thicken_chain": _check_thicken_chain,
    "sfamily": _check_sfamily,
    "decompose": _check_decompose,
    "antichain_gaps": _check_antichain,
}
