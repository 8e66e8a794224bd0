"""Command-line entry point: ``trigraphs <command> ...``.

Exit status is 0 on success (pattern free, property holds), 1 when a witness
or counterexample is found, and 2 on bad input or usage.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path
from typing import Sequence

from .core import Trigraph, as_graph
from .cutsets import find_clique_cutset, find_stable_2_cutset
from .decomposer import classify, decompose, sorted_labels, tree_to_json
from .freeness import Pattern, trigraph_is_free
from .generators import FAMILIES, make_family, random_free_trigraph, random_trigraph
from .structure import (
    as_complete_bipartite,
    as_line_trigraph,
    as_prism,
    is_cyclically_3_connected,
    is_series_parallel,
    qualify_root,
)
from .triformat import TriFormatError, format_tri, parse_tri
from .verifier import PROPERTIES, Budget, verify_oracle_agreement, verify_proposition, verify_theorem

OK, FOUND, USAGE = 0, 1, 2

# families whose integer parameters form one list argument
LIST_FAMILIES = {"long_rich_square", "subdivided_k4", "k4_line"}
RANDOM_FAMILIES = ("random", "random_free")


class UsageError(Exception):
    pass


def _read(path: str | None) -> Trigraph:
    if path in (None, "-"):
        text = sys.stdin.read()
    else:
        try:
            text = Path(path).read_text()
        except OSError as exc:
            raise UsageError(f"cannot read {path}: {exc.strerror}") from None
    try:
        return parse_tri(text)
    except TriFormatError as exc:
        raise UsageError(f"malformed trigraph: {exc}") from None


def _emit(text: str, out: str | None = None) -> None:
    if out:
        Path(out).write_text(text if text.endswith("\n") else text + "\n")
    else:
        print(text.rstrip("\n"))


def _json(obj) -> str:
    return json.dumps(obj, indent=2)


def cmd_classify(args) -> int:
    for label in sorted_labels(classify(_read(args.file))):
        print(label)
    return OK


def cmd_decompose(args) -> int:
    _emit(tree_to_json(decompose(_read(args.file))), args.out)
    return OK


def cmd_free_check(args) -> int:
    w = trigraph_is_free(_read(args.file), Pattern(args.pattern), args.triangle_rims)
    if w is None:
        print("free")
        return OK
    print(_json(w.to_dict()))
    return FOUND


def cmd_cutset(args) -> int:
    g = _read(args.file)
    report = find_clique_cutset(g) if args.kind == "clique" else find_stable_2_cutset(g)
    print("none" if report is None else _json(report.to_dict()))
    return OK


def cmd_recognize(args) -> int:
    g = _read(args.file)
    cls = args.cls
    if cls == "sp":
        print("yes" if is_series_parallel(g) else "no")
    elif cls == "bipartite":
        bp = as_complete_bipartite(g)
        print("no" if bp is None else _json(bp.to_dict()))
    elif cls == "prism":
        pc = as_prism(g)
        print("no" if pc is None else _json(pc.to_dict()))
    elif cls == "linetrigraph":
        root = as_line_trigraph(g)
        if root is None:
            print("no")
        else:
            flags = qualify_root(root.h)
            print(_json({"root": root.to_dict(), "qualification": flags._asdict(),
                         "qualified": flags.qualified}))
    else:
        if g.semi_pairs():
            raise UsageError("cyc3conn needs a graph (no semi-adjacent pairs)")
        print("yes" if is_cyclically_3_connected(as_graph(g)) else "no")
    return OK


def _parse_pairs(text: str | None) -> list[tuple[int, int]] | None:
    if not text:
        return None
    out = []
    for item in text.split(","):
        try:
            u, v = (int(x) for x in item.split("-"))
        except ValueError:
            raise UsageError(f"bad semi pair {item!r}; expected u-v") from None
        out.append((u, v))
    return out


def cmd_generate(args) -> int:
    name = args.family.replace("-", "_").lower()
    params = args.params
    seed = args.seed
    if name == "random":
        if len(params) != 1:
            raise UsageError("random takes one parameter: n")
        g = random_trigraph(params[0], args.p_plus, args.p_zero, seed)
    elif name == "random_free":
        if len(params) != 1:
            raise UsageError("random_free takes one parameter: n")
        g = random_free_trigraph(params[0], (Pattern.ISK4, Pattern.WHEEL), seed)
        if g is None:
            raise UsageError("no free trigraph found within the attempt limit")
    else:
        if name in LIST_FAMILIES:
            params = [params]
        elif name == "wheel" and len(params) > 1:
            params = [params[0], params[1:]]
        try:
            g = make_family(name, *params, semi=_parse_pairs(args.semi))
        except ValueError as exc:
            raise UsageError(str(exc)) from None
    _emit(format_tri(g), args.out)
    return OK


def cmd_verify(args) -> int:
    target = args.property
    if target == "theorem":
        kw = {} if args.n is None else {"n_max": args.n}
        rep = verify_theorem(**kw, modulo_iso=args.modulo_iso, all_sizes=args.all_sizes,
                             triangle_rims=args.triangle_rims)
    elif target == "oracle":
        rep = verify_oracle_agreement(*(() if args.n is None else (args.n,)))
    else:
        budget = Budget(n=args.n, samples=args.samples, seed=args.seed, extra=args.extra,
                        modulo_iso=args.modulo_iso or None, triangle_rims=args.triangle_rims)
        rep = verify_proposition(target, budget)
    _emit(rep.to_text(), args.out)
    return OK if rep.passed else FOUND


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="trigraphs", description="Trigraph decomposition toolkit.")
    sub = p.add_subparsers(dest="command", required=True)

    def with_file(name, help_):
        sp = sub.add_parser(name, help=help_)
        sp.add_argument("file", nargs="?", help=".tri file; '-' or omitted reads stdin")
        return sp

    sp = with_file("classify", "print every decomposition outcome that holds")
    sp.set_defaults(func=cmd_classify)

    sp = with_file("decompose", "recursive decomposition tree as JSON")
    sp.add_argument("--out")
    sp.set_defaults(func=cmd_decompose)

    sp = with_file("free-check", "look for an induced pattern in some realization")
    sp.add_argument("--pattern", required=True, choices=[x.value for x in Pattern])
    sp.add_argument("--triangle-rims", action="store_true", help="let K4 count as a wheel")
    sp.set_defaults(func=cmd_free_check)

    sp = with_file("cutset", "find a clique-cutset or a stable 2-cutset")
    sp.add_argument("--kind", required=True, choices=["clique", "stable2"])
    sp.set_defaults(func=cmd_cutset)

    sp = with_file("recognize", "run one class recognizer")
    sp.add_argument("--class", dest="cls", required=True,
                    choices=["sp", "bipartite", "prism", "linetrigraph", "cyc3conn"])
    sp.set_defaults(func=cmd_recognize)

    sp = sub.add_parser("generate", help="write a family member or random trigraph as .tri")
    sp.add_argument("family", help=", ".join(sorted(FAMILIES) + list(RANDOM_FAMILIES)))
    sp.add_argument("params", nargs="*", type=int)
    sp.add_argument("--seed", type=int, default=0)
    sp.add_argument("--semi", help="comma-separated u-v pairs made semi-adjacent")
    sp.add_argument("--p-plus", type=float, default=0.4)
    sp.add_argument("--p-zero", type=float, default=0.2)
    sp.add_argument("--out")
    sp.set_defaults(func=cmd_generate)

    sp = sub.add_parser("verify", help="run a property check and print its report")
    sp.add_argument("property", choices=("theorem", "oracle") + PROPERTIES)
    sp.add_argument("--n", type=int)
    sp.add_argument("--samples", type=int, default=Budget.samples)
    sp.add_argument("--seed", type=int, default=0)
    sp.add_argument("--extra", type=int, default=Budget.extra)
    sp.add_argument("--modulo-iso", action="store_true")
    sp.add_argument("--all-sizes", action="store_true")
    sp.add_argument("--triangle-rims", action="store_true")
    sp.add_argument("--out")
    sp.set_defaults(func=cmd_verify)
    return p


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except UsageError as exc:
        print(f"trigraphs: error: {exc}", file=sys.stderr)
        return USAGE


if __name__ == "__main__":
    sys.exit(main())
