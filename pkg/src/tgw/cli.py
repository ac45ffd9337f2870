"""Batch command-line entry point.

Exit codes: 0 = all checks passed, 1 = a verified-false finding (axiom
violation, density failure, non-bijective adjunction, ...), 2 = input or
configuration error.  With --lenient, base-axiom failures downgrade to
printed warnings.  Output is deterministic: identical invocations produce
byte-identical text.
"""

from __future__ import annotations

import argparse
import json
import os
import sys

from . import fixtures
from .core import WorkbenchError, check_axioms
from .geometry import embed, export_graph, valuation_from_dict
from .homology import (adjunction_check, ext1, homological_semisimplicity,
                       tor1)
from .ideals import (enumerate_ideals, gelfand_injectivity, localize,
                     spectrum, zariski_report)
from .modules import (check_module_axioms, cyclic_module_catalog,
                      density_check, jacobson_radical, regular_module)

MAX_PRINTED_VIOLATIONS = 10


def _budget(default: int) -> int:
    raw = os.environ.get("TGW_BUDGET")
    if raw is None:
        return default
    try:
        return int(raw)
    except ValueError:
        raise WorkbenchError(f"TGW_BUDGET must be an integer, got {raw!r}") from None


def _violation_lines(violations, S, kind="violation"):
    lines = []
    shown = violations[:MAX_PRINTED_VIOLATIONS]
    for v in shown:
        witness = ",".join(str(w) for w in v.witness)
        lines.append(f"  {kind}: {v.law} at witness ({witness}): "
                     f"{v.left} != {v.right}")
    if len(violations) > len(shown):
        lines.append(f"  ... {len(violations) - len(shown)} more "
                     f"(use --format json for the full list)")
    return lines


def _anchor_for(S, args):
    if getattr(args, "anchor", None) is not None:
        label = args.anchor
        if label not in S.elements:
            raise WorkbenchError(f"anchor {label!r} is not an element of {S.name}")
        return S.elements.index(label)
    if S.unit is not None:
        return S.unit
    return S.zero


def _structure_gate(S, args, out, findings) -> bool:
    """Shared axiom preamble: prints violations, applies the lenient policy.

    Returns True when this fixture is blocked (violations without --lenient).
    """
    report = check_axioms(S)
    if not report.violations:
        return False
    if args.lenient:
        out.append(f"warning: {S.name} fails {len(report.violations)} axiom "
                   f"instance(s); continuing leniently")
        out.extend(_violation_lines(report.violations, S, kind="warning"))
        return False
    out.append(f"{S.name}: {len(report.violations)} axiom violation(s)")
    out.extend(_violation_lines(report.violations, S))
    findings.append(f"{S.name}:axiom-violations")
    return True


def cmd_check(args, out):
    findings = []
    payload = []
    for name in args.fixtures:
        S = fixtures.resolve_structure(name)
        report = check_axioms(S)
        payload.append({"structure": S.name, **report.to_dict(),
                        "lenient": args.lenient})
        if report.passed:
            out.append(f"{S.name}: all axioms hold "
                       f"(|T|={S.n}, |Gamma|={S.g})")
        elif args.lenient:
            out.append(f"{S.name}: {len(report.violations)} axiom violation(s) "
                       f"downgraded to warnings (lenient)")
            out.extend(_violation_lines(report.violations, S, kind="warning"))
        else:
            out.append(f"{S.name}: {len(report.violations)} axiom violation(s)")
            out.extend(_violation_lines(report.violations, S))
            findings.append(name)
    return (1 if findings else 0), payload


def cmd_ideals(args, out):
    findings = []
    payload = []
    for name in args.fixtures:
        S = fixtures.resolve_structure(name)
        if _structure_gate(S, args, out, findings):
            continue
        ideals = enumerate_ideals(S, bound=_budget(12), lenient=args.lenient)
        out.append(f"{S.name}: {len(ideals)} ideal(s)")
        for ideal in ideals:
            out.append("  {" + ",".join(ideal.labels(S)) + "}")
        payload.append({"structure": S.name, "lenient": args.lenient,
                        "ideals": [i.to_dict(S) for i in ideals]})
    return (1 if findings else 0), payload


def cmd_spec(args, out):
    findings = []
    payload = []
    for name in args.fixtures:
        S = fixtures.resolve_structure(name)
        if _structure_gate(S, args, out, findings):
            continue
        spc = spectrum(S, bound=_budget(12), lenient=args.lenient)
        zar = zariski_report(S, spc)
        out.append(f"{S.name}: {len(spc.points)} prime point(s)")
        for label in spc.point_labels(S):
            out.append(f"  {label}")
        out.append(f"  closed-set identity V(I)∩V(J)=V(I+J): "
                   f"{'holds' if zar.intersection_ok else 'FAILS'}")
        out.append(f"  T0 separation: {'holds' if zar.t0_ok else 'FAILS'}")
        if not zar.passed:
            findings.append(name)
        payload.append({"structure": S.name, "spectrum": spc.to_dict(S),
                        "zariski": zar.to_dict()})
    return (1 if findings else 0), payload


def cmd_modules(args, out):
    findings = []
    payload = []
    for name in args.fixtures:
        S = fixtures.resolve_structure(name)
        mods = fixtures.modules_for(S.name) if S.name in fixtures.STRUCTURE_NAMES else []
        for spec_arg in args.module or []:
            mods.append(fixtures.resolve_module(spec_arg, S))
        if not mods:
            mods = [regular_module(S)]
        for M in mods:
            report = check_module_axioms(M)
            status = "passes" if report.passed else (
                f"fails {len(report.violations)} law instance(s)")
            out.append(f"{M.name} over {S.name}: {status}; "
                       f"base warnings: {len(report.warnings)}")
            if not report.passed:
                out.extend(_violation_lines(report.violations, S))
                if not args.lenient:
                    findings.append(M.name)
            payload.append({"module": M.name, "structure": S.name,
                            **report.to_dict()})
    return (1 if findings else 0), payload


def cmd_simples(args, out):
    findings = []
    payload = []
    for name in args.fixtures:
        S = fixtures.resolve_structure(name)
        if _structure_gate(S, args, out, findings):
            continue
        catalog = cyclic_module_catalog(S, lenient=args.lenient)
        simple_count = sum(1 for e in catalog if e.simple)
        out.append(f"{S.name}: catalog of {len(catalog)} cyclic module(s), "
                   f"{simple_count} simple")
        for entry in catalog:
            flag = "simple" if entry.simple else "not simple"
            out.append(f"  {entry.module.name} (|M|={entry.module.size}): {flag}"
                       f" (congruence-simple: {entry.congruence_simple})")
        payload.append({"structure": S.name,
                        "catalog": [{"module": e.module.name,
                                     "size": e.module.size,
                                     "simple": e.simple,
                                     "congruence_simple": e.congruence_simple}
                                    for e in catalog]})
    return (1 if findings else 0), payload


def cmd_density(args, out):
    findings = []
    payload = []
    for name in args.fixtures:
        S = fixtures.resolve_structure(name)
        if _structure_gate(S, args, out, findings):
            continue
        anchor = _anchor_for(S, args)
        if args.module:
            targets = [fixtures.resolve_module(m, S) for m in args.module]
        else:
            targets = [e.module for e in cyclic_module_catalog(S, lenient=args.lenient)
                       if e.simple]
        for M in targets:
            rep = density_check(M, anchor=anchor, rank2=args.rank2,
                                lenient=args.lenient)
            verdict = "Yes" if rep.ok else "No"
            out.append(f"{M.name}: density {verdict} "
                       f"(anchor {S.elements[anchor]}, "
                       f"{len(rep.witnesses)} witnessed pair(s))")
            if not rep.ok:
                findings.append(M.name)
                for mm, nn in rep.unsolvable[:5]:
                    out.append(f"  unsolvable pair: m={M.carrier[mm]}, "
                               f"n={M.carrier[nn]}")
            payload.append(rep.to_dict())
    return (1 if findings else 0), payload


def _pick_pair(args, S):
    mods = [fixtures.resolve_module(m, S) for m in (args.module or [])]
    while len(mods) < 2:
        mods.append(regular_module(S))
    return mods[0], mods[1]


def cmd_ext(args, out):
    findings = []
    payload = []
    for name in args.fixtures:
        S = fixtures.resolve_structure(name)
        if _structure_gate(S, args, out, findings):
            continue
        M, N = _pick_pair(args, S)
        result = ext1(S, M, N, budget=_budget(50000), lenient=args.lenient)
        out.append(f"Ext1({M.name},{N.name}) = {result.ext1.structure_tag} "
                   f"({result.ext1.size} class(es)); "
                   f"Ext0 size {result.ext0_size} vs |Hom| {result.hom_size}")
        if not result.ext0_matches_hom:
            findings.append(name)
            out.append("  finding: Ext0 does not match the hom count")
        payload.append({"structure": S.name, "ext1": result.ext1.to_dict(),
                        "ext0_size": result.ext0_size,
                        "hom_size": result.hom_size,
                        "ext0_matches_hom": result.ext0_matches_hom,
                        "notes": list(result.notes)})
    return (1 if findings else 0), payload


def cmd_tor(args, out):
    findings = []
    payload = []
    for name in args.fixtures:
        S = fixtures.resolve_structure(name)
        if _structure_gate(S, args, out, findings):
            continue
        M, N = _pick_pair(args, S)
        result = tor1(S, M, N, lenient=args.lenient)
        out.append(f"Tor1({M.name},{N.name}) = {result.tor1.structure_tag} "
                   f"({result.tor1.size} class(es)); Tor0 matches tensor: "
                   f"{result.tor0_matches_tensor}")
        if not result.tor0_matches_tensor:
            findings.append(name)
        payload.append({"structure": S.name, "tor1": result.tor1.to_dict(),
                        "tor0": result.tor0.to_dict(),
                        "tor0_matches_tensor": result.tor0_matches_tensor,
                        "notes": list(result.notes)})
    return (1 if findings else 0), payload


def cmd_adjunction(args, out):
    findings = []
    payload = []
    for name in args.fixtures:
        S = fixtures.resolve_structure(name)
        if _structure_gate(S, args, out, findings):
            continue
        mods = [fixtures.resolve_module(m, S) for m in (args.module or [])]
        while len(mods) < 3:
            mods.append(regular_module(S))
        M, N, P = mods[0], mods[1], mods[2]
        rep = adjunction_check(M, N, P, budget=_budget(50000),
                               lenient=args.lenient)
        out.append(f"|Hom({M.name}(x){N.name},{P.name})| = {rep.lhs_size}, "
                   f"|Hom({M.name},Hom({N.name},{P.name}))| = {rep.rhs_size}, "
                   f"bijection: {'Yes' if rep.holds else 'No'}")
        if not rep.holds:
            findings.append(name)
        payload.append({"structure": S.name, **rep.to_dict()})
    return (1 if findings else 0), payload


def cmd_radical(args, out):
    findings = []
    payload = []
    for name in args.fixtures:
        S = fixtures.resolve_structure(name)
        if _structure_gate(S, args, out, findings):
            continue
        rep = jacobson_radical(S, lenient=args.lenient)
        out.append(f"J({S.name}) = {{{','.join(rep.ideal.labels(S))}}} "
                   f"[{rep.note}, from {len(rep.simples_used)} simple(s)]")
        payload.append({"structure": S.name, **rep.to_dict(S)})
    return (1 if findings else 0), payload


def cmd_localize(args, out):
    findings = []
    payload = []
    for name in args.fixtures:
        S = fixtures.resolve_structure(name)
        if _structure_gate(S, args, out, findings):
            continue
        spc = spectrum(S, bound=_budget(12), lenient=args.lenient)
        for P in spc.points:
            loc = localize(S, P, lenient=args.lenient)
            out.append(f"{S.name} at {{{','.join(P.labels(S))}}}: "
                       f"{len(loc.classes)} class(es), well-defined: "
                       f"{loc.well_defined}, maximal ideal classes: "
                       f"{sorted(loc.maximal_ideal)}")
            if not loc.well_defined:
                findings.append(name)
                for f in loc.failures[:5]:
                    out.append(f"  failure: {f}")
            payload.append(loc.to_dict(S))
    return (1 if findings else 0), payload


def cmd_gelfand(args, out):
    findings = []
    payload = []
    for name in args.fixtures:
        S = fixtures.resolve_structure(name)
        if _structure_gate(S, args, out, findings):
            continue
        spc = spectrum(S, bound=_budget(12), lenient=args.lenient)
        rep = gelfand_injectivity(S, spc, lenient=args.lenient)
        out.append(f"{S.name}: evaluation map injective: {rep.injective}"
                   + (" (vacuous)" if rep.vacuous else ""))
        if not rep.injective:
            findings.append(name)
            a, b = rep.witness
            out.append(f"  witness: {S.elements[a]} and {S.elements[b]} "
                       f"are not separated")
        payload.append({"structure": S.name, **rep.to_dict()})
    return (1 if findings else 0), payload


def cmd_embed(args, out):
    findings = []
    payload = []
    for name in args.fixtures:
        S = fixtures.resolve_structure(name)
        if _structure_gate(S, args, out, findings):
            continue
        spc = spectrum(S, bound=_budget(12), lenient=args.lenient)
        valuation = None
        if args.valuation:
            with open(args.valuation, encoding="utf-8") as fh:
                valuation = valuation_from_dict(S, json.load(fh))
        weight_table = None
        if args.weights and args.weights != "default":
            with open(args.weights, encoding="utf-8") as fh:
                data = json.load(fh)
            weight_table = tuple(data["weights"])
        graph = embed(S, spc, k=args.k, valuation=valuation,
                      weight_table=weight_table)
        text = export_graph(graph, args.format)
        if args.out:
            with open(args.out, "w", encoding="utf-8") as fh:
                fh.write(text)
            out.append(f"{S.name}: wrote {args.format} graph to {args.out}")
        else:
            out.append(text.rstrip("\n"))
        payload.append(graph.to_dict())
    return (1 if findings else 0), payload


def _report_battery():
    """Full battery over the bundled fixtures, rendered as three tables."""
    lines = []
    findings = []
    payload = {"density_table": [], "ext_tor_table": [], "adjunction_table": [],
               "warnings": [], "notes": []}
    remarks = {"B2": "Boolean", "Z3": "mod-3 (lenient)",
               "B2xB2": "Boolean product"}

    density_rows = []
    ext_rows = []
    adj_rows = []
    for name in fixtures.STRUCTURE_NAMES:
        S = fixtures.bundled_structure(name)
        axioms = check_axioms(S)
        if axioms.violations:
            first = axioms.violations[0]
            payload["warnings"].append(
                f"{name}: {len(axioms.violations)} axiom violation(s), e.g. "
                f"{first.law} at witness {tuple(first.witness)}; analyses ran "
                f"in lenient mode")
        catalog = cyclic_module_catalog(S, lenient=True)
        simples = [e for e in catalog if e.simple]
        anchor = S.unit if S.unit is not None else S.zero
        density_ok = all(density_check(e.module, anchor=anchor, lenient=True).ok
                         for e in simples)
        if not density_ok:
            findings.append(f"{name}: density failed")
        density_rows.append((S.n, S.g, len(simples),
                             "Yes" if density_ok else "No", remarks[name]))

        if S.unit is None:
            ext_rows.append((S.n, S.g, "n/a (no unit)", "n/a (no unit)", "n/a"))
        else:
            reg = regular_module(S)
            ext_result = ext1(S, reg, reg, lenient=True)
            tor_result = tor1(S, reg, reg, lenient=True)
            hs = homological_semisimplicity(S, catalog, lenient=True)
            interp = "semisimple" if hs.ok and hs.radical_zero else "not semisimple"
            if not hs.consistent:
                findings.append(f"{name}: radical and Ext disagree")
                interp = "inconsistent"
            if not ext_result.ext0_matches_hom:
                findings.append(f"{name}: Ext0 mismatch")
            ext_rows.append((S.n, S.g, ext_result.ext1.structure_tag,
                             tor_result.tor1.structure_tag, interp))

        try:
            reg = regular_module(S)
            adj = adjunction_check(reg, reg, reg, lenient=True)
            equality = "Yes" if adj.holds else "No"
            if not adj.holds:
                findings.append(f"{name}: adjunction not bijective")
            adj_rows.append((S.n, S.g, adj.lhs_size, adj.rhs_size, equality))
        except WorkbenchError as exc:
            adj_rows.append((S.n, S.g, "n/a", "n/a", f"n/a ({exc})"))

        spc = spectrum(S, lenient=True)
        if spc.points:
            zar = zariski_report(S, spc)
            if not zar.passed:
                findings.append(f"{name}: closed-set identities failed")

    lines.append("Density confirmation")
    lines.append("|T|, |Gamma|, #simple modules, Density verified, Remarks")
    for row in density_rows:
        lines.append(", ".join(str(v) for v in row))
        payload["density_table"].append(list(row))
    lines.append("")
    lines.append("Ext and Tor for the regular module")
    lines.append("|T|, |Gamma|, Ext1(M,M), Tor1(M,M), Interpretation")
    for row in ext_rows:
        lines.append(", ".join(str(v) for v in row))
        payload["ext_tor_table"].append(list(row))
    lines.append("")
    lines.append("Tensor-Hom adjunction")
    lines.append("|T|, |Gamma|, |Hom(MxN,P)|, |Hom(M,Hom(N,P))|, Equality")
    for row in adj_rows:
        lines.append(", ".join(str(v) for v in row))
        payload["adjunction_table"].append(list(row))
    lines.append("")
    lines.append("note: the Gamma column counts declared parameters of each fixture")
    payload["notes"].append("gamma column counts declared parameters")
    for warning in payload["warnings"]:
        lines.append(f"warning: {warning}")
    return lines, payload, findings


def cmd_report(args, out):
    lines, payload, findings = _report_battery()
    out.extend(lines)
    return (1 if findings else 0), payload


_COMMANDS = {
    "check": cmd_check,
    "ideals": cmd_ideals,
    "spec": cmd_spec,
    "modules": cmd_modules,
    "simples": cmd_simples,
    "density": cmd_density,
    "ext": cmd_ext,
    "tor": cmd_tor,
    "adjunction": cmd_adjunction,
    "radical": cmd_radical,
    "localize": cmd_localize,
    "gelfand": cmd_gelfand,
    "embed": cmd_embed,
    "report": cmd_report,
}


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="tgw",
        description="Workbench for finite commutative ternary gamma-semirings "
                    "given as operation tables")
    sub = parser.add_subparsers(dest="command", required=True)
    for name in _COMMANDS:
        p = sub.add_parser(name)
        if name != "report":
            p.add_argument("fixtures", nargs="+",
                           help="bundled fixture names or fixture file paths")
        p.add_argument("--module", action="append",
                       help="bundled module name or module fixture path "
                            "(repeatable)")
        p.add_argument("--lenient", action="store_true",
                       help="downgrade base-axiom failures to warnings")
        if name == "embed":
            p.add_argument("--format", choices=("json", "dot", "csv"),
                           default="json", help="graph export format")
        else:
            p.add_argument("--format", choices=("table", "json"),
                           default="table")
        p.add_argument("--anchor", help="anchor element label for density")
        p.add_argument("--rank2", action="store_true",
                       help="also report the simultaneous two-pair density census")
        p.add_argument("--k", type=int, default=2,
                       help="embedding dimension (embed)")
        p.add_argument("--valuation", help="valuation table JSON file (embed)")
        p.add_argument("--weights", default="default",
                       help="'default' or a weight table JSON file (embed)")
        p.add_argument("--out", help="output file path (embed)")
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return 2 if exc.code not in (0, None) else 0
    out: list[str] = []
    try:
        code, payload = _COMMANDS[args.command](args, out)
    except WorkbenchError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    if args.command != "embed" and args.format == "json":
        print(json.dumps({"command": args.command, "exit_code": code,
                          "result": payload}, indent=2))
    else:
        # embed prints its export text directly in the chosen graph format.
        for line in out:
            print(line)
    return code


def entry() -> None:
    sys.exit(main())


if __name__ == "__main__":
    entry()
