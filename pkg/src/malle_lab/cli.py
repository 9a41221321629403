"""Command-line entry point: malle-lab.

Commands
  invariants  a, d, d', per-e twist-orbit counts, b, growth formula
  conjecture  revised constant: max b over admissible normal subgroups
  braid       orbit decomposition of the braid action for a class vector
  series      Euler-product expansion, oracle check, pole report, fit
  verify      run a named golden scenario and diff against expected values
  presets     list shipped scenarios

Exit codes: 0 success, 1 computation error, 2 parse/validation error,
3 golden mismatch.
"""

from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction

from . import braid as braid_mod
from . import errors as err
from . import invariants as inv
from . import series as ser
from .groups import (
    FiniteGroup,
    GNContext,
    a_invariant,
    find_cyclic_complement,
)
from .perms import format_cycles, parse_cycles
from .presets import GroupSpecFile, abelian_q, abelian_suite, get_preset, preset_names
from .report import build_report, dump_report

VALIDATION_ERRORS = (
    err.ParseError,
    err.PointOutOfRange,
    err.DegreeMismatch,
    err.UnknownPreset,
    err.BadModulus,
    err.NotASubgroup,
    err.IndexOutOfRange,
    err.TrivialClassPresent,
    ValueError,
    KeyError,
)


def load_group_spec(path: str) -> GroupSpecFile:
    try:
        with open(path) as fh:
            data = json.load(fh)
    except OSError as exc:
        raise err.ParseError(f"cannot read group file: {exc}", position=0)
    except json.JSONDecodeError as exc:
        raise err.ParseError(f"invalid JSON in group file: {exc}", position=exc.pos)
    try:
        degree = int(data["degree"])
        generators = tuple(str(s) for s in data["generators"])
        named = {
            str(k): tuple(str(s) for s in v)
            for k, v in data.get("named_subgroups", {}).items()
        }
    except (KeyError, TypeError) as exc:
        raise err.ParseError(f"malformed group file: {exc}", position=0)
    return GroupSpecFile(degree=degree, generators=generators, named_subgroups=named)


def resolve_spec(args) -> GroupSpecFile:
    if args.preset:
        return get_preset(args.preset).spec
    if not args.group:
        raise err.ParseError("one of --group or --preset is required", position=0)
    return load_group_spec(args.group)


def resolve_pair(args) -> tuple[FiniteGroup, FiniteGroup, GNContext]:
    spec = resolve_spec(args)
    N = spec.group()
    G = spec.subgroup(args.normal) if args.normal else N
    if not (G.is_subgroup_of(N) and G.is_normal_in(N)):
        raise err.NotASubgroup(f"{args.normal!r} is not normal in the main group")
    ctx = find_cyclic_complement(N, G)
    return N, G, ctx


def require_q(args, N: FiniteGroup) -> int:
    if args.q is None:
        raise err.ParseError("--q is required for this command", position=0)
    import math

    if math.gcd(args.q, N.order) != 1:
        raise err.ParseError(
            f"q = {args.q} shares a factor with |N| = {N.order}; "
            "q must be coprime to the group order",
            position=0,
        )
    return args.q


def ctx_inputs(N: FiniteGroup, G: FiniteGroup, ctx: GNContext, q=None) -> dict:
    out = {
        "n": N.degree,
        "order_N": N.order,
        "order_G": G.order,
        "d": ctx.d,
        "d_prime": ctx.d_prime,
        "split": ctx.split,
    }
    if q is not None:
        out["q"] = q
    return out


def cmd_invariants(args) -> dict:
    N, G, ctx = resolve_pair(args)
    q = require_q(args, N)
    warnings = []
    if not ctx.split:
        warnings.append(inv.NON_SPLIT_WARNING)
    by_e = {e: inv.b_e(inv.TwistSpec(q=q, e=e, ctx=ctx)) for e in ctx.admissible_e()}
    b = max(by_e.values())
    a = a_invariant(G)
    outputs = {
        "a": a,
        "b": b,
        "b_by_e": by_e,
        "argmax_e": [e for e, v in by_e.items() if v == b],
        "asymptotic": inv.render_growth(a, b),
        "minimal_index": int(1 / a),
        "minimal_classes": sorted(
            format_cycles(c.representative) for c in inv.minimal_index_classes(G)
        ),
    }
    return build_report("invariants", ctx_inputs(N, G, ctx, q), outputs, warnings)


def cmd_conjecture(args) -> dict:
    spec = resolve_spec(args)
    N = spec.group()
    q = require_q(args, N)
    report = inv.revised_b(N, inv.FunctionField(q))
    a = a_invariant(N)
    rows = [
        {
            "order_G": r.G_order,
            "a": r.a,
            "quotient_order": r.quotient_order,
            "status": r.status,
            "b": r.b,
        }
        for r in report.rows
    ]
    outputs = {
        "b": report.value,
        "a": a,
        "asymptotic": inv.render_growth(a, report.value),
        "rows": rows,
    }
    inputs = {"n": N.degree, "order_N": N.order, "q": q}
    return build_report("conjecture", inputs, outputs, list(report.warnings))


def parse_class_vector(text: str, G: FiniteGroup) -> braid_mod.ClassVector:
    entries = []
    for part in text.split(","):
        part = part.strip()
        if not part:
            continue
        p = parse_cycles(part, G.degree)
        if p not in G:
            raise err.NotASubgroup(f"entry {part!r} is not in the subgroup")
        entries.append(p)
    if not entries:
        raise err.ParseError("empty class vector", position=0)
    return braid_mod.class_vector_of(G, entries)


def cmd_braid(args) -> dict:
    N, G, ctx = resolve_pair(args)
    if not args.classes:
        raise err.ParseError("--classes is required for braid", position=0)
    cv = parse_class_vector(args.classes, G)
    orbits = braid_mod.braid_orbits(G, N, cv)
    warnings = []
    outputs: dict = {
        "class_vector": repr(cv),
        "orbit_count": len(orbits),
        "orbit_sizes": [o.size for o in orbits],
        "tuple_count": sum(o.size for o in orbits),
    }
    if args.q is not None:
        q = require_q(args, N)
        e = args.e if args.e is not None else 1
        spec = inv.TwistSpec(q=q, e=e, ctx=ctx)
        stable = braid_mod.frobenius_stable_orbits(orbits, spec)
        outputs["stable_orbit_count"] = len(stable)
        warnings.append(braid_mod.FROBENIUS_MODEL_WARNING)
    return build_report("braid", ctx_inputs(N, G, ctx, args.q), outputs, warnings)


def cmd_series(args) -> dict:
    N, G, ctx = resolve_pair(args)
    q = require_q(args, N)
    e = args.e if args.e is not None else 1
    R = args.terms if args.terms is not None else 40
    spec = inv.TwistSpec(q=q, e=e, ctx=ctx)
    warnings = []
    if not ctx.split:
        warnings.append(inv.NON_SPLIT_WARNING)
    blocks = inv.orbit_blocks(spec, restrict_minimal=False)
    gf = ser.euler_product(blocks, q)
    table = ser.expand(gf, R, e=e)
    oracle = ser.brute_force_h3(blocks, q, R)
    oracle_ok = table.values == oracle.values
    pole = ser.dominant_pole(gf)
    warnings.append(pole.caveat)
    outputs: dict = {
        "factors": [list(f) for f in gf.factors],
        "a": pole.a,
        "b": pole.b,
        "oracle_match": oracle_ok,
        "coefficients": {str(r): v for r, v in sorted(table.values.items())},
    }
    if R >= 40:
        fit = ser.tauberian_fit(table, pole)
        outputs["fit"] = {
            "min_ratio": fit.min_ratio,
            "max_ratio": fit.max_ratio,
            "spread": fit.spread,
            "window": fit.window,
            "ok": fit.ok,
        }
    else:
        warnings.append("tauberian fit skipped: fewer than 40 terms")
    return build_report("series", ctx_inputs(N, G, ctx, q), outputs, warnings)


def cmd_presets(args) -> dict:
    outputs = {
        name: {
            "description": get_preset(name).description,
            "q_values": list(get_preset(name).q_values),
        }
        for name in preset_names()
    }
    return build_report("presets", {}, outputs, [])


# --------------------------------------------------------------------------
# verify: golden scenarios


def _b_lax(ctx: GNContext, q: int) -> int:
    """max b_e over admissible e, allowing the non-split fallback tau."""
    return max(inv.b_e(inv.TwistSpec(q=q, e=e, ctx=ctx)) for e in ctx.admissible_e())


def _verify_klueners_s6(preset) -> tuple[dict, list[str]]:
    spec = preset.spec
    N = spec.group()
    G1 = spec.subgroup("G1")
    ctx = find_cyclic_complement(N, G1)
    checks = {}
    exp = preset.expected
    a = a_invariant(G1)
    checks["a"] = {"expected": exp["a"], "got": a, "ok": a == exp["a"]}
    for q in preset.q_values:
        b = inv.b_constant(ctx, q)
        checks[f"b_q{q}"] = {"expected": exp["b"], "got": b, "ok": b == exp["b"]}
    formula = inv.render_growth(a, exp["b"])
    checks["asymptotic"] = {
        "expected": exp["asymptotic"],
        "got": formula,
        "ok": formula == exp["asymptotic"],
    }
    return checks, []


def _verify_wreath_s18(preset) -> tuple[dict, list[str]]:
    spec = preset.spec
    N = spec.group()
    exp = preset.expected
    checks = {}
    for name in exp["subgroups"]:
        G = spec.subgroup(name)
        ctx = find_cyclic_complement(N, G)
        a = a_invariant(G)
        checks[f"{name}_a"] = {"expected": exp["a"], "got": a, "ok": a == exp["a"]}
        for q in preset.q_values:
            b = inv.b_constant(ctx, q)
            checks[f"{name}_b_q{q}"] = {
                "expected": exp["b"],
                "got": b,
                "ok": b == exp["b"],
            }
    return checks, []


def _verify_abelian_suite(preset) -> tuple[dict, list[str]]:
    from .groups import normal_subgroups_with_cyclic_quotient

    checks = {}
    warnings = []
    for label, spec in sorted(abelian_suite().items()):
        N = spec.group()
        for q in abelian_q(label):
            ctx_N = find_cyclic_complement(N, N)
            b_N = _b_lax(ctx_N, q)
            for G in normal_subgroups_with_cyclic_quotient(N):
                if G.order == 1:
                    continue
                ctx = find_cyclic_complement(N, G)
                if not ctx.split:
                    warnings.append(f"{label}: non-split subgroup of order {G.order}")
                b_G = _b_lax(ctx, q)
                checks[f"{label}_q{q}_order{G.order}"] = {
                    "expected": f"b <= {b_N}",
                    "got": b_G,
                    "ok": b_G <= b_N,
                }
    return checks, warnings


def _verify_s3_clebsch(preset) -> tuple[dict, list[str]]:
    spec = preset.spec
    N = spec.group()
    transposition = parse_cycles("(1 2)", 3)
    cv = braid_mod.class_vector_of(N, [transposition] * 4)
    tuples = braid_mod.enumerate_nielsen(N, cv)
    orbits = braid_mod.braid_orbits(N, N, cv)
    exp = preset.expected
    checks = {
        "tuple_count": {
            "expected": exp["transposition_tuples_k4"],
            "got": len(tuples),
            "ok": len(tuples) == exp["transposition_tuples_k4"],
        },
        "connected": {
            "expected": exp["braid_connected"],
            "got": len(orbits) == 1,
            "ok": (len(orbits) == 1) == exp["braid_connected"],
        },
    }
    return checks, []


def _verify_klueners_q(preset) -> tuple[dict, list[str]]:
    spec = preset.spec
    N = spec.group()
    exp = preset.expected
    report = inv.revised_b(N, inv.RationalNumberField(M=exp["M"]))
    checks = {
        "b_phi_max": {
            "expected": exp["b_phi_max"],
            "got": report.value,
            "ok": report.value == exp["b_phi_max"],
        }
    }
    return checks, list(report.warnings)


_VERIFIERS = {
    "klueners-s6": _verify_klueners_s6,
    "wreath-s18": _verify_wreath_s18,
    "abelian-suite": _verify_abelian_suite,
    "s3-clebsch": _verify_s3_clebsch,
    "klueners-q": _verify_klueners_q,
}


def cmd_verify(args) -> dict:
    if not args.preset:
        raise err.ParseError("--preset is required for verify", position=0)
    preset = get_preset(args.preset)
    checks, warnings = _VERIFIERS[preset.name](preset)
    ok = all(c["ok"] for c in checks.values())
    outputs = {"checks": checks, "all_ok": ok}
    report = build_report("verify", {"preset": preset.name}, outputs, warnings)
    report["exit_hint"] = 0 if ok else 3
    return report


COMMANDS = {
    "invariants": cmd_invariants,
    "conjecture": cmd_conjecture,
    "braid": cmd_braid,
    "series": cmd_series,
    "verify": cmd_verify,
    "presets": cmd_presets,
}


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="malle-lab",
        description="permutation-group counting constants and braid orbits",
    )
    parser.add_argument("command", choices=sorted(COMMANDS))
    parser.add_argument("--group", help="path to a JSON group-spec file")
    parser.add_argument("--normal", help="name of a named subgroup to use as G")
    parser.add_argument("--q", type=int, help="field size, coprime to |N|")
    parser.add_argument("--e", type=int, help="twist type (default 1)")
    parser.add_argument(
        "--classes", help="comma-separated cycle-notation class-vector entries"
    )
    parser.add_argument("--terms", type=int, help="series truncation order R")
    parser.add_argument("--preset", help="named preset scenario")
    parser.add_argument("--out", help="write the JSON report to this file")
    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return 2 if exc.code else 0
    try:
        report = COMMANDS[args.command](args)
    except VALIDATION_ERRORS as exc:
        print(json.dumps({"error": str(exc), "code": type(exc).__name__}), file=sys.stderr)
        return 2
    except err.MalleLabError as exc:
        print(json.dumps({"error": str(exc), "code": type(exc).__name__}), file=sys.stderr)
        return 1
    exit_code = report.pop("exit_hint", 0)
    text = dump_report(report)
    if args.out:
        with open(args.out, "w") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    return exit_code


if __name__ == "__main__":
    sys.exit(main())
