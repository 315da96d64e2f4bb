"""Command-line front end.

Exit codes: 0 success, 1 verification failure (counterexample JSON on stderr),
2 usage or parse error, 3 resource cap exceeded.
"""

from __future__ import annotations

import argparse
import json
import re
import sys
from pathlib import Path

from .algebra import LinearCombination
from .antipode import antipode
from .config import HyperhopfError, ResourceCapError
from .coproducts import CoproductMode, coproduct_pair, delta_contract
from .core import Hypergraph, Mode, single_edge
from .invariants import chromatic, eulerian_idempotent, lambda_character
from .multicomplex import (
    MultiComplex,
    kappa,
    mc_antipode,
    mc_chromatic,
    mc_coproduct,
    mc_delta_contract,
    mc_eulerian,
    mc_quotient,
    mc_restrict,
    mc_takeuchi_antipode,
)
from .orientations import QuasiOrder, acyclic_orientations, classify_orientation, orientation_sums
from .polynomial import format_hilbert, to_hilbert_basis
from .serialize import (
    dumps,
    factor_json,
    fraction_text,
    lincomb_json,
    parse_hypergraph,
    parse_multicomplex,
    polynomial_json,
)
from .verify import SUITES, run_suite

EXIT_OK, EXIT_FAIL, EXIT_USAGE, EXIT_CAP = 0, 1, 2, 3

_SINGLE_EDGE = re.compile(r"^T_?(\d+)(\.json)?$")


class UsageError(Exception):
    pass


def _read_source(source: str) -> str | None:
    """File contents, the literal itself if it is inline JSON, or None."""
    if source.lstrip().startswith("{"):
        return source
    path = Path(source)
    if path.exists():
        return path.read_text(encoding="utf-8")
    return None


def load_hypergraph(source: str) -> Hypergraph:
    """A JSON file, inline JSON, or a built-in single edge written T4 / T_4 / T_4.json."""
    text = _read_source(source)
    if text is None:
        m = _SINGLE_EDGE.match(Path(source).name)
        if m:
            return single_edge(int(m.group(1)))
        raise UsageError(f"no such file: {source}")
    return parse_hypergraph(text)


def load_multicomplex(source: str) -> MultiComplex:
    text = _read_source(source)
    if text is None:
        raise UsageError(f"no such file: {source}")
    return parse_multicomplex(text)


def _lc_text(x: LinearCombination) -> str:
    return repr(x) if len(x) else "0"


def _emit_lc(x: LinearCombination, as_json: bool) -> None:
    print(dumps(lincomb_json(x)) if as_json else _lc_text(x))


def _json_arg(text: str, what: str):
    try:
        return json.loads(text)
    except json.JSONDecodeError as exc:
        raise UsageError(f"{what} is not valid JSON: {exc}") from None


# ---------------------------------------------------------------------------
# commands
# ---------------------------------------------------------------------------

def cmd_chromatic(args) -> int:
    G = load_hypergraph(args.input)
    P = chromatic(G, args.variant)
    if args.json:
        out = polynomial_json(P, hilbert=args.basis == "hilbert")
        if args.at_minus_one:
            out["at_minus_one"] = fraction_text(P(-1))
        print(dumps(out))
        return EXIT_OK
    print(format_hilbert(to_hilbert_basis(P)) if args.basis == "hilbert" else str(P))
    if args.at_minus_one:
        print(f"P(-1) = {fraction_text(P(-1))}")
    return EXIT_OK


def cmd_coproduct(args) -> int:
    G = load_hypergraph(args.input)
    if args.contract:
        x = delta_contract(G, args.contract)
    else:
        x = coproduct_pair(G, CoproductMode.parse(args.mode))
    _emit_lc(x, args.json)
    return EXIT_OK


def cmd_antipode(args) -> int:
    G = load_hypergraph(args.input)
    _emit_lc(antipode(G, CoproductMode.parse(args.mode), args.method), args.json)
    return EXIT_OK


def _quasi_order(G: Hypergraph, obj) -> QuasiOrder:
    """``{"classes": [[labels]], "less": [[i, j]]}`` where class i is below class j."""
    if not isinstance(obj, dict) or "classes" not in obj:
        raise UsageError('an orientation is {"classes": [[labels]], "less": [[i, j], ...]}')
    blocks = tuple(G.mask(c) for c in obj["classes"])
    if sum(blocks) != G.full_mask or any(a & b for i, a in enumerate(blocks) for b in blocks[i + 1:]):
        raise UsageError("orientation classes must partition the vertex set")
    k = len(blocks)
    below = [0] * k
    for i, j in obj.get("less", []):
        if not (0 <= i < k and 0 <= j < k) or i == j:
            raise UsageError(f"bad pair {[i, j]} in orientation")
        below[j] |= 1 << i
    for _ in range(k):
        for j in range(k):
            for i in range(k):
                if below[j] >> i & 1:
                    below[j] |= below[i]
    if any(below[i] >> i & 1 for i in range(k)):
        raise UsageError("orientation relation has a cycle between classes")
    return QuasiOrder(blocks, tuple(below))


def cmd_orientations(args) -> int:
    G = load_hypergraph(args.input)
    if args.action == "sums":
        s = orientation_sums(G)
        out = {"signed_all": s.signed_all, "total_count": s.total_count, "signed_one_max": s.signed_one_max}
        print(dumps(out) if args.json else "\n".join(f"{k} = {v}" for k, v in out.items()))
        return EXIT_OK
    if args.action == "classify":
        if not args.order:
            raise UsageError("classify needs --order")
        q = _quasi_order(G, _json_arg(args.order, "--order"))
        c = classify_orientation(G, q)
        out = {"acyclic": c.is_acyclic, "total": c.is_total, "one_max": c.is_one_max}
        print(dumps(out) if args.json else " ".join(f"{k}={str(v).lower()}" for k, v in out.items()))
        return EXIT_OK
    rows = []
    for q in acyclic_orientations(G):
        c = classify_orientation(G, q)
        rows.append({**q.normalized().describe(G.labels), "total": c.is_total, "one_max": c.is_one_max})
    if args.json:
        print(dumps(rows))
    else:
        for r in rows:
            print(json.dumps(r, ensure_ascii=False))
    return EXIT_OK


def cmd_character(args) -> int:
    G = load_hypergraph(args.input)
    value = lambda_character(Mode(args.mode))(G)
    print(dumps({"lambda": fraction_text(value), "mode": args.mode}) if args.json else fraction_text(value))
    return EXIT_OK


def cmd_eulerian(args) -> int:
    G = load_hypergraph(args.input)
    _emit_lc(eulerian_idempotent(G), args.json)
    return EXIT_OK


def cmd_mc(args) -> int:
    C = load_multicomplex(args.input)
    op = args.mc_command
    if op == "chromatic":
        P = mc_chromatic(C)
        print(dumps(polynomial_json(P)) if args.json else str(P))
    elif op == "kappa":
        H = kappa(C)
        print(dumps(factor_json(H)) if args.json else repr(H))
    elif op == "coproduct":
        _emit_lc(mc_coproduct(C), args.json)
    elif op == "contract":
        _emit_lc(mc_delta_contract(C), args.json)
    elif op == "antipode":
        _emit_lc(mc_takeuchi_antipode(C) if args.method == "takeuchi" else mc_antipode(C), args.json)
    elif op == "eulerian":
        _emit_lc(mc_eulerian(C), args.json)
    elif op == "quotient":
        if not args.blocks:
            raise UsageError("quotient needs --blocks")
        print(dumps(mc_quotient(C, _json_arg(args.blocks, "--blocks")).describe()))
    elif op == "restrict":
        if args.subset is None:
            raise UsageError("restrict needs --subset")
        print(dumps(mc_restrict(C, _json_arg(args.subset, "--subset")).describe()))
    return EXIT_OK


def cmd_verify(args) -> int:
    report = run_suite(args.suite, max_n=args.max_n, count=args.count, seed=args.seed)
    print(report.summary())
    if report.failures:
        for f in report.failures:
            print(json.dumps(f, ensure_ascii=False, default=str), file=sys.stderr)
        return EXIT_FAIL
    return EXIT_OK


# ---------------------------------------------------------------------------
# parser
# ---------------------------------------------------------------------------

class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        print(f"{self.prog}: error: {message}", file=sys.stderr)
        raise SystemExit(EXIT_USAGE)


def build_parser() -> argparse.ArgumentParser:
    p = _Parser(prog="hyperhopf", description="Hopf-algebraic invariants of hypergraphs and multi-complexes.")
    sub = p.add_subparsers(dest="command", required=True, parser_class=_Parser)

    def common(sp, with_input=True):
        if with_input:
            sp.add_argument("input", help="JSON file, inline JSON, or Tn for the single edge on n vertices")
        sp.add_argument("--json", action="store_true", help="emit JSON")

    sp = sub.add_parser("chromatic", help="chromatic polynomial")
    common(sp)
    sp.add_argument("--variant", choices=["subset", "cap", "mixed"], default="subset")
    sp.add_argument("--basis", choices=["monomial", "hilbert"], default="monomial")
    sp.add_argument("--at-minus-one", action="store_true", help="also print the value at -1")
    sp.set_defaults(fn=cmd_chromatic)

    sp = sub.add_parser("coproduct", help="restriction or contraction-extraction coproduct")
    common(sp)
    sp.add_argument("--mode", default="subset,subset", help='left,right restriction modes, e.g. "subset,cap"')
    sp.add_argument("--contract", choices=["subset", "cap"], help="contraction-extraction coproduct instead")
    sp.set_defaults(fn=cmd_coproduct)

    sp = sub.add_parser("antipode", help="antipode")
    common(sp)
    sp.add_argument("--mode", default="subset,subset")
    sp.add_argument("--method", choices=["takeuchi", "closed", "mixed"], default="takeuchi")
    sp.set_defaults(fn=cmd_antipode)

    sp = sub.add_parser("orientations", help="acyclic orientations")
    common(sp)
    sp.add_argument("--action", choices=["list", "classify", "sums"], default="sums")
    sp.add_argument("--order", help='orientation to classify: {"classes": [[..]], "less": [[i, j]]}')
    sp.set_defaults(fn=cmd_orientations)

    sp = sub.add_parser("character", help="λ character value")
    common(sp)
    sp.add_argument("--mode", choices=["subset", "cap"], default="subset")
    sp.set_defaults(fn=cmd_character)

    sp = sub.add_parser("eulerian", help="eulerian idempotent")
    common(sp)
    sp.set_defaults(fn=cmd_eulerian)

    sp = sub.add_parser("mc", help="multi-complex operations")
    sp.add_argument(
        "mc_command",
        choices=["chromatic", "kappa", "coproduct", "contract", "antipode", "eulerian", "quotient", "restrict"],
    )
    common(sp)
    sp.add_argument("--method", choices=["closed", "takeuchi"], default="closed")
    sp.add_argument("--blocks", help="JSON list of label lists for quotient")
    sp.add_argument("--subset", help="JSON list of labels for restrict")
    sp.set_defaults(fn=cmd_mc)

    sp = sub.add_parser("verify", help="run a verification suite")
    sp.add_argument("--suite", choices=SUITES, required=True)
    sp.add_argument("--max-n", type=int, default=4)
    sp.add_argument("--count", type=int, default=0, help="seeded random cases on top of the exhaustive corpus")
    sp.add_argument("--seed", type=int, default=0)
    sp.set_defaults(fn=cmd_verify)
    return p


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        return args.fn(args)
    except ResourceCapError as exc:
        print(f"resource cap: {exc}", file=sys.stderr)
        return EXIT_CAP
    except (UsageError, HyperhopfError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
