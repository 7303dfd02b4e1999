"""Command line front end.

``ikit run FILE`` executes the checks listed in a manifest and reports a
verdict per check; ``ikit enumerate KIND SIZE`` streams small structures in
canonical order followed by a count line.

Exit codes: 0 all checks pass, 1 some verdict failed, 2 input error,
3 a size cap was exceeded.
"""

from __future__ import annotations

import argparse
import json
import sys
from collections.abc import Callable
from dataclasses import dataclass
from typing import Any

from . import adjunction, fuzzy, interior, kuratowski, manifest, order, sets, sieves
from .catalog import chain, label, powerset
from .errors import CapExceeded, IkitError, PreconditionViolated, Verdict

EXIT_PASS, EXIT_FAIL, EXIT_INPUT, EXIT_CAP = 0, 1, 2, 3


class UnknownCheck(Exception):
    pass


@dataclass
class Outcome:
    verdict: Verdict
    output: Any = None


def to_names(x, category: sieves.FinCategory | None = None, points: dict | None = None):
    """Render a value in the manifest's own name space.

    With ``points`` (a name -> position map) subsets are written as point
    lists in that order instead of ``{a,b}`` labels.
    """
    if isinstance(x, sieves.Sieve):
        return category.sort(x.arrows) if category is not None else sorted(map(str, x.arrows))
    if isinstance(x, frozenset):
        if points is not None:
            return sorted(x, key=lambda p: (points.get(p, len(points)), str(p)))
        return label(x)
    if isinstance(x, (tuple, list)):
        return [to_names(v, category, points) for v in x]
    if isinstance(x, dict):
        return {str(k): to_names(v, category, points) for k, v in x.items()}
    if isinstance(x, (str, int, float, bool)) or x is None:
        return x
    return label(x)


def _table_out(m) -> list:
    els = m.dom.elements if hasattr(m, "dom") else m.carrier.elements
    return [[label(x), label(m(x))] for x in els]


def _lattice_out(L: order.CompleteLattice) -> dict:
    els = L.elements
    pairs = [(a, b) for i, a in enumerate(els) for b in els[i:]]
    return {
        "top": label(L.top),
        "bottom": label(L.bottom),
        "meet": [[label(a), label(b), label(L.meet(a, b))] for a, b in pairs],
        "join": [[label(a), label(b), label(L.join(a, b))] for a, b in pairs],
    }


# check registry ---------------------------------------------------------------

Check = Callable[[Any, "Context"], Outcome]


@dataclass
class Context:
    cap: int | None


def _poset_checks() -> dict[str, Check]:
    def validate(body, ctx):
        body.poset
        return Outcome(Verdict.passed())

    def complete(body, ctx):
        return Outcome(Verdict.passed(), _lattice_out(body.lattice))

    def discrete(body, ctx):
        return Outcome(Verdict.passed(), _table_out(interior.discrete_op(body.lattice)))

    def trivial(body, ctx):
        return Outcome(Verdict.passed(), _table_out(interior.trivial_op(body.lattice)))

    def enum_ops(body, ctx):
        L = body.lattice
        L.check_subset_cap(ctx.cap)
        ops = [_table_out(op) for op in interior.enumerate_interior_ops(L)]
        return Outcome(Verdict.passed(), {"count": len(ops), "operators": ops})

    return {"validate_poset": validate, "as_complete_lattice": complete,
            "discrete_op": discrete, "trivial_op": trivial, "enumerate_interior_ops": enum_ops}


def _map_checks() -> dict[str, Check]:
    def need_adjoint(body):
        if body.adjoint is None:
            raise manifest.ParseError("body.adjoint", "an adjoint table for this check")
        return body.adjoint

    return {
        "check_monotone": lambda b, ctx: Outcome(order.check_monotone(b.table)),
        "synthesize_left_adjoint": lambda b, ctx: Outcome(
            Verdict.passed(), _table_out(adjunction.synthesize_left_adjoint(b.table, ctx.cap))),
        "synthesize_right_adjoint": lambda b, ctx: Outcome(
            Verdict.passed(), _table_out(adjunction.synthesize_right_adjoint(b.table, ctx.cap))),
        "is_adjoint_pair": lambda b, ctx: Outcome(
            adjunction.is_adjoint_pair(b.table, need_adjoint(b))),
        "check_preservation": lambda b, ctx: Outcome(adjunction.check_preservation(
            adjunction.AdjointPair.verified(b.table, need_adjoint(b)), ctx.cap)),
    }


def _point_order(f: sets.FinFunction) -> dict:
    order = {p: k for k, p in enumerate(f.cod)}
    order.update({p: k for k, p in enumerate(f.dom)})
    return order


def _function_checks() -> dict[str, Check]:
    def subset_table(m, order):
        return [[to_names(x, points=order), to_names(m(x), points=order)] for x in m.dom.elements]

    def triple(f, ctx):
        t, order = sets.triple_of(f), _point_order(f)
        return Outcome(Verdict.passed(), {"existential": subset_table(t.existential, order),
                                          "inverse": subset_table(t.inverse, order),
                                          "universal": subset_table(t.universal, order)})

    def preservation(f, ctx):
        t = sets.triple_of(f)
        for left, right in ((t.existential, t.inverse), (t.inverse, t.universal)):
            verdict = adjunction.check_preservation(adjunction.AdjointPair(left, right), ctx.cap)
            if not verdict:
                return Outcome(verdict)
        return Outcome(Verdict.passed())

    def laws(f, ctx):
        verdict = sets.check_mono_epi_laws(f)
        return Outcome(verdict, to_names(verdict.details, points=_point_order(f)))

    return {"triple_of": triple, "check_preservation": preservation,
            "check_mono_epi_laws": laws}


def _interior_checks() -> dict[str, Check]:
    def topo(b, ctx):
        t = kuratowski.topology_from_interior(b.op)
        return Outcome(Verdict.passed(), [label(u) for u in t.sorted_opens()])

    return {
        "check_interior": lambda b, ctx: Outcome(interior.check_interior(b.op)),
        "open_elements": lambda b, ctx: Outcome(
            Verdict.passed(), [label(x) for x in interior.open_elements(b.op)]),
        "check_kuratowski": lambda b, ctx: Outcome(kuratowski.check_kuratowski(b.op)),
        "topology_from_interior": topo,
    }


def _category_checks() -> dict[str, Check]:
    def validate(b, ctx):
        b.category
        return Outcome(Verdict.passed())

    def every(b, ctx):
        C = b.category
        return Outcome(Verdict.passed(), {c: [C.sort(s.arrows) for s in sieves.all_sieves(C, c)]
                                          for c in C.objects})

    def maximal(b, ctx):
        C = b.category
        return Outcome(Verdict.passed(),
                       {c: C.sort(sieves.maximal_sieve(C, c).arrows) for c in C.objects})

    return {"validate_category": validate, "all_sieves": every, "maximal_sieve": maximal,
            "pullback_functoriality": lambda b, ctx: Outcome(
                sieves.check_pullback_functoriality(b.category))}


def _covers_out(J: sieves.GrothTopology) -> dict:
    C = J.category
    return {c: [C.sort(s.arrows) for s in J.sorted_covers(c)] for c in C.objects}


def _sieve_interior_checks() -> dict[str, Check]:
    return {
        "check_sieve_interior": lambda b, ctx: Outcome(sieves.check_sieve_interior(b.family)),
        "open_sieve_topology": lambda b, ctx: Outcome(
            Verdict.passed(), _covers_out(sieves.open_sieve_topology(b.family))),
        "check_grothendieck": lambda b, ctx: Outcome(
            sieves.check_grothendieck(sieves.open_sieve_topology(b.family))),
    }


def _fuzzy_checks() -> dict[str, Check]:
    def grades(b, ctx):
        T = fuzzy.fuzzy_topology_from_interior(b.op, b.i7)
        S = b.space
        return Outcome(Verdict.passed(),
                       [[[label(v) for v in f], label(T(f))] for f in S.fuzzy_sets()])

    return {
        "check_fuzzy_interior": lambda b, ctx: Outcome(
            fuzzy.check_fuzzy_interior(b.op, b.i7, ctx.cap)),
        "fuzzy_topology_from_interior": grades,
        "check_fuzzy_topology": lambda b, ctx: Outcome(fuzzy.check_fuzzy_topology(
            fuzzy.fuzzy_topology_from_interior(b.op, b.i7), ctx.cap)),
    }


def _topology_checks() -> dict[str, Check]:
    def groth(b, ctx):
        if not isinstance(b, manifest.CoverBody):
            raise manifest.ParseError("body", "a category and covers for check_grothendieck")
        verdict = sieves.check_grothendieck(b.topology, b.e_morphisms)
        return Outcome(verdict, to_names(verdict.details, b.category) if verdict.details else None)

    def spatial(b):
        if not isinstance(b, kuratowski.Topology):
            raise manifest.ParseError("body", "ground and opens for this check")
        return b

    return {
        "check_grothendieck": groth,
        "check_topology": lambda b, ctx: Outcome(kuratowski.check_topology(spatial(b))),
        "interior_from_topology": lambda b, ctx: Outcome(
            Verdict.passed(), _table_out(kuratowski.interior_from_topology(spatial(b)))),
    }


CHECKS: dict[str, dict[str, Check]] = {
    "poset": _poset_checks(),
    "lattice": _poset_checks(),
    "monotone-map": _map_checks(),
    "function": _function_checks(),
    "interior": _interior_checks(),
    "category": _category_checks(),
    "sieve-interior": _sieve_interior_checks(),
    "gl-monoid": {"check_gl_monoid": lambda b, ctx: Outcome(fuzzy.check_gl_monoid(b.monoid, ctx.cap))},
    "fuzzy-interior": _fuzzy_checks(),
    "topology-candidate": _topology_checks(),
}


def _category_of(body) -> sieves.FinCategory | None:
    for attr in ("category",):
        C = getattr(body, attr, None)
        if isinstance(C, sieves.FinCategory):
            return C
    return None


def run_manifest(m: manifest.Manifest, cap: int | None = None) -> tuple[dict, int]:
    """Execute every check; returns the report and the exit status."""
    table = CHECKS[m.kind]
    for name in m.checks:
        if name not in table:
            raise UnknownCheck(name)
    ctx = Context(cap)
    results, status = [], EXIT_PASS
    for name in m.checks:
        entry: dict[str, Any] = {"name": name}
        try:
            outcome = table[name](m.body, ctx)
        except CapExceeded as exc:
            outcome = Outcome(Verdict.failed("CapExceeded", *exc.witness))
            status = EXIT_CAP
        except IkitError as exc:
            outcome = Outcome(Verdict.failed(type(exc).__name__, *exc.witness))
        verdict = outcome.verdict
        entry["verdict"] = "pass" if verdict else "fail"
        try:
            C = _category_of(m.body) if m.kind != "category" else m.body.category
        except IkitError:
            C = None
        if not verdict:
            order = _point_order(m.body) if m.kind == "function" else None
            entry["witness"] = {"law": verdict.law,
                                "values": to_names(list(verdict.witness), C, order)}
            if status == EXIT_PASS:
                status = EXIT_FAIL
        if outcome.output is not None:
            entry["output"] = outcome.output
        results.append(entry)
    passed = sum(r["verdict"] == "pass" for r in results)
    report = {"checks": results, "summary": {"passed": passed, "failed": len(results) - passed}}
    return report, status


def format_text(report: dict) -> str:
    lines = []
    for r in report["checks"]:
        if r["verdict"] == "pass":
            lines.append(f"PASS {r['name']}")
        else:
            w = r["witness"]
            values = json.dumps(w["values"], ensure_ascii=False)
            lines.append(f"FAIL {r['name']}: {w['law']} {values}")
        if "output" in r:
            lines.append("  output: " + json.dumps(r["output"], ensure_ascii=False))
    s = report["summary"]
    lines.append(f"passed {s['passed']} failed {s['failed']}")
    return "\n".join(lines) + "\n"


# enumeration ----------------------------------------------------------------

ENUM_CAPS = {"topologies": 4, "kuratowski-ops": 4, "interior-ops": 6, "sieves": 6}


def enumerate_structures(kind: str, size: int, cap: int | None = None,
                         lattice_kind: str = "chain", at: str | None = None):
    """Yield JSON-ready structures of ``kind`` in canonical order."""
    if kind not in ENUM_CAPS:
        raise manifest.ParseError("kind", "one of " + ", ".join(ENUM_CAPS))
    if size < 0:
        raise manifest.ParseError("size", "a non-negative integer")
    limit = ENUM_CAPS[kind] if cap is None else cap
    if kind == "interior-ops" and lattice_kind == "powerset" and cap is None:
        limit = 3
    if size > limit:
        raise CapExceeded(kind, size, limit)
    if kind == "topologies":
        for t in kuratowski.enumerate_topologies(size, cap=limit):
            yield [sorted(u) for u in t.sorted_opens()]
    elif kind == "kuratowski-ops":
        for op in kuratowski.enumerate_kuratowski_ops(size, cap=limit):
            yield _table_out(op)
    elif kind == "interior-ops":
        if lattice_kind == "chain":
            if size < 1:
                raise manifest.ParseError("size", "at least 1 for a chain")
            L = chain(size, [str(k) for k in range(size)])
        elif lattice_kind == "powerset":
            L = powerset(kuratowski.default_points(size))
        else:
            raise manifest.ParseError("--lattice", "chain or powerset")
        for op in interior.enumerate_interior_ops(L):
            yield _table_out(op)
    else:
        if size < 1:
            raise manifest.ParseError("size", "at least 1 object")
        names = [chr(ord("a") + k) for k in range(size)]
        C = sieves.chain_category(names)
        target = names[-1] if at is None else at
        if target not in C.objects:
            raise manifest.ParseError("--at", f"an object among {names}")
        for s in sieves.all_sieves(C, target):
            yield C.sort(s.arrows)


# entry point -------------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="ikit", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)
    run = sub.add_parser("run", help="run the checks listed in a manifest")
    run.add_argument("file")
    run.add_argument("--max-size", type=int, default=None,
                     help="override the size cap for exhaustive iteration")
    run.add_argument("--report", choices=("json", "text"), default="text")
    enum = sub.add_parser("enumerate", help="list small structures")
    enum.add_argument("kind", choices=sorted(ENUM_CAPS))
    enum.add_argument("size", type=int)
    enum.add_argument("--count-only", action="store_true")
    enum.add_argument("--max-size", type=int, default=None)
    enum.add_argument("--lattice", choices=("chain", "powerset"), default="chain",
                      help="carrier for interior-ops")
    enum.add_argument("--at", default=None, help="object for sieves (default: the last)")
    return parser


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    out = sys.stdout
    try:
        if args.command == "run":
            try:
                with open(args.file, encoding="utf-8") as fh:
                    text = fh.read()
            except OSError as exc:
                print(f"error: {exc}", file=sys.stderr)
                return EXIT_INPUT
            m = manifest.loads(text, args.max_size)
            report, status = run_manifest(m, args.max_size)
            if args.report == "json":
                out.write(manifest.dumps(report))
            else:
                out.write(format_text(report))
            return status
        count = 0
        for item in enumerate_structures(args.kind, args.size, args.max_size,
                                         args.lattice, args.at):
            count += 1
            if not args.count_only:
                out.write(json.dumps(item, ensure_ascii=False) + "\n")
        out.write(f"count {count}\n")
        return EXIT_PASS
    except manifest.ParseError as exc:
        print(f"ParseError: {exc}", file=sys.stderr)
        return EXIT_INPUT
    except UnknownCheck as exc:
        print(f"UnknownCheck: {exc.args[0]}", file=sys.stderr)
        return EXIT_INPUT
    except CapExceeded as exc:
        print(f"CapExceeded: {exc.witness}", file=sys.stderr)
        return EXIT_CAP
    except (IkitError, ValueError) as exc:
        print(f"input error: {exc}", file=sys.stderr)
        return EXIT_INPUT


if __name__ == "__main__":
    sys.exit(main())
