"""Command-line interface: enumeration, map queries, and batch verification.

Everything prints JSON to stdout (or writes to --out); diagnostics and
timings go to stderr so reports stay byte-stable.
"""

from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction

from .algebra import Sqrt2
from .bijection import phi, phi_inverse
from .diagrams import DiagramError, MultiRect, chtop_map_sum, ogs_top_map_sum
from .enumeration import (GuardExceeded, all_maps, conservative_one_face,
                          involutions, liberal_one_face, all_pairs)
from .jack import JackGuardError, JackParams, ch, ch_stanley, jack_in_p
from .maps import (MapError, load_fixture, map_from_json_obj, map_to_json_obj,
                   structure, graph_class, is_orientable, faces)
from .mon import mon, mon_top_detail
from .oriented import oriented_to_json_obj
from .verify import SUITES, SUITE_ALIASES, report_render, run_suite

DOMAIN_ERRORS = (MapError, DiagramError, GuardExceeded, JackGuardError,
                 ZeroDivisionError, FileNotFoundError)

FIXTURES = ("klein", "projective")


def _parse_rational(text: str):
    text = text.strip()
    if "sqrt2" in text:
        sign = -1 if text.startswith("-") else 1
        body = text.lstrip("+-")
        if body == "sqrt2":
            return Sqrt2(0, sign)
        if body == "1/sqrt2":
            return Sqrt2(0, Fraction(sign, 2))
        raise argparse.ArgumentTypeError(
            f"cannot parse {text!r}; sqrt2 values are sqrt2 or 1/sqrt2")
    try:
        return Fraction(text)
    except (ValueError, ZeroDivisionError) as exc:
        raise argparse.ArgumentTypeError(f"cannot parse rational {text!r}") \
            from exc


def _parse_int_list(text: str) -> tuple[int, ...]:
    if not text.strip():
        return ()
    return tuple(int(x) for x in text.split(","))


def _parse_rational_list(text: str):
    if not text.strip():
        return ()
    return tuple(_parse_rational(x) for x in text.split(","))


def _load_map(source: str):
    if source.lower() in FIXTURES:
        return load_fixture(source.lower())
    with open(source) as fh:
        return map_from_json_obj(json.load(fh))


def _emit(payload, out):
    text = json.dumps(payload, sort_keys=True, indent=2) + "\n"
    if out:
        with open(out, "w") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _frac_obj(x):
    if isinstance(x, Sqrt2):
        return {"rational": _frac_obj(x.a), "sqrt2_coeff": _frac_obj(x.b)}
    x = Fraction(x)
    return {"num": x.numerator, "den": x.denominator}


def cmd_enumerate(args) -> int:
    n = args.n
    if args.family == "involutions":
        items = ({"pairs": [list(p) for p in inv.pairs]}
                 for inv in involutions(range(1, 2 * n + 1)))
    elif args.family == "one-face-conservative":
        items = (map_to_json_obj(m) for m in conservative_one_face(n))
    elif args.family == "one-face-liberal":
        items = (map_to_json_obj(m) for m in liberal_one_face(n, args.force))
    elif args.family == "all":
        items = (map_to_json_obj(m) for m in all_maps(n, args.force))
    elif args.family == "oriented-pairs":
        items = (oriented_to_json_obj(om) for om in all_pairs(n, args.force))
    else:
        raise AssertionError(args.family)
    out = open(args.out, "w") if args.out else sys.stdout
    try:
        count = 0
        for item in items:
            out.write(json.dumps(item, sort_keys=True) + "\n")
            count += 1
    finally:
        if args.out:
            out.close()
    print(f"{count} items", file=sys.stderr)
    return 0


def cmd_structure(args) -> int:
    m = _load_map(args.map)
    st = structure(m)
    face_sets, face_type = faces(m)
    _emit({
        "black_vertices": st.blacks,
        "white_vertices": st.whites,
        "edges": st.edges,
        "faces": st.faces,
        "face_type": list(face_type),
        "components": st.components,
        "euler_characteristic": st.euler,
        "genus": _frac_obj(st.genus),
        "orientable": is_orientable(m),
        "graph_class": graph_class(m).key.decode(),
    }, args.out)
    return 0


def cmd_mon(args) -> int:
    m = _load_map(args.map)
    poly = mon(m)
    prob, coeff = mon_top_detail(m)
    if prob != coeff:
        print("internal inconsistency between mon_top computations",
              file=sys.stderr)
        return 2
    _emit({
        "mon": [_frac_obj(c) for c in poly.coeffs],
        "mon_top": _frac_obj(prob),
    }, args.out)
    return 0


def cmd_bijection(args) -> int:
    m = _load_map(args.map)
    history = [tuple(e) for e in json.loads(args.history)]
    fn = phi if args.direction == "apply" else phi_inverse
    res = fn(m, history)
    from .mon import is_top_degree_pair

    _emit({
        "map": map_to_json_obj(res.map),
        "twists": [list(e) for e in res.twists],
        "checks": {
            "output_orientable": is_orientable(res.map),
            "output_top_degree_pair": is_top_degree_pair(res.map, history),
            "graph_class_preserved": graph_class(res.map) == graph_class(m),
        },
    }, args.out)
    return 0


def cmd_chtop(args) -> int:
    if isinstance(args.A, Sqrt2):
        raise DiagramError(
            "chtop needs rational A (multirectangular coordinates must "
            "realize an integer diagram)")
    mr = MultiRect(args.P, args.Q, args.A)
    oriented_sum = chtop_map_sum(args.n, mr, force=args.force)
    one_face = ogs_top_map_sum(args.n, mr, force=args.force)
    payload = {
        "n": args.n,
        "gamma": _frac_obj(mr.gamma),
        "diagram": list(mr.diagram().rows),
        "oriented_sum": _frac_obj(oriented_sum),
        "one_face_sum_displayed": _frac_obj(one_face),
        "one_face_sum_reconciled": _frac_obj(-one_face),
    }
    if args.n in (1, 2, 3):
        full, top = ch_stanley(args.n, mr.gamma, mr.P, mr.Q)
        payload["closed_form_full"] = _frac_obj(full)
        payload["closed_form_top"] = _frac_obj(top)
    _emit(payload, args.out)
    return 0


def cmd_jack(args) -> int:
    theta = jack_in_p(args.lam, args.alpha, force=args.force)
    _emit({
        "lambda": list(args.lam),
        "alpha": _frac_obj(args.alpha),
        "theta": {",".join(map(str, mu)): _frac_obj(c)
                  for mu, c in sorted(theta.items())},
    }, args.out)
    return 0


def cmd_ch(args) -> int:
    params = JackParams.from_A(args.A)
    value = ch(args.pi, args.lam, params, force=args.force)
    _emit({
        "pi": list(args.pi),
        "lambda": list(args.lam),
        "A": str(args.A),
        "alpha": _frac_obj(params.alpha),
        "value": _frac_obj(value),
    }, args.out)
    return 0


def _suite_params(name: str, args) -> dict:
    name = SUITE_ALIASES.get(name, name)
    params: dict = {}
    if args.force:
        params["force"] = True
        print(f"warning: guards raised for suite {name}", file=sys.stderr)
    if args.n is not None:
        if name in ("lemma-equivalence",):
            params["n"] = args.n
        elif name == "degree-bounds":
            params["n_exhaustive"] = args.n
        elif name in ("liberation-nonoriented", "liberation-oriented",
                      "main-theorem", "second-main-theorem", "key-bijection"):
            params["ns"] = tuple(range(1, args.n + 1))
    if args.seed is not None and name == "degree-bounds":
        params["seed"] = args.seed
    return params


def cmd_verify(args) -> int:
    names = list(SUITES) if args.suite == "all" else [args.suite]
    failed = False
    blobs = []
    for name in names:
        report = run_suite(name, **_suite_params(name, args))
        blobs.append(report_render(report, args.format))
        status = "PASS" if report.passed else "FAIL"
        print(f"{name}: {status} ({report.runtime:.2f}s)", file=sys.stderr)
        if not report.passed:
            failed = True
            first = report.first_failure
            print("first counterexample: "
                  + json.dumps({"name": first.name, "values": first.values},
                               sort_keys=True), file=sys.stderr)
    data = b"".join(blobs)
    if args.out:
        with open(args.out, "wb") as fh:
            fh.write(data)
    else:
        sys.stdout.buffer.write(data)
    return 1 if failed else 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="monmap",
        description="Exact verification toolkit for bicolored maps, the "
                    "measure of non-orientability, and Jack character "
                    "map sums.")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("enumerate", help="stream a map family as JSONL")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--family", required=True,
                   choices=["involutions", "one-face-conservative",
                            "one-face-liberal", "all", "oriented-pairs"])
    p.add_argument("--out")
    p.add_argument("--force", action="store_true")
    p.set_defaults(fn=cmd_enumerate)

    p = sub.add_parser("structure", help="structural counts of a map")
    p.add_argument("--map", required=True,
                   help="path to a map JSON file, or a fixture name "
                        f"({'/'.join(FIXTURES)})")
    p.add_argument("--out")
    p.set_defaults(fn=cmd_structure)

    p = sub.add_parser("mon", help="measure of non-orientability of a map")
    p.add_argument("--map", required=True)
    p.add_argument("--out")
    p.set_defaults(fn=cmd_mon)

    p = sub.add_parser("bijection", help="apply the twist bijection")
    p.add_argument("direction", choices=["apply", "invert"])
    p.add_argument("--map", required=True)
    p.add_argument("--history", required=True,
                   help='JSON list of edges, e.g. "[[1,5],[2,4],[3,6]]"')
    p.add_argument("--out")
    p.set_defaults(fn=cmd_bijection)

    p = sub.add_parser("chtop", help="top-degree character map sums at a point")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--P", type=_parse_rational_list, required=True)
    p.add_argument("--Q", type=_parse_rational_list, required=True)
    p.add_argument("--A", type=_parse_rational, required=True)
    p.add_argument("--force", action="store_true")
    p.add_argument("--out")
    p.set_defaults(fn=cmd_chtop)

    p = sub.add_parser("jack", help="theta table of one Jack function")
    p.add_argument("--lambda", dest="lam", type=_parse_int_list, required=True)
    p.add_argument("--alpha", type=_parse_rational, required=True)
    p.add_argument("--force", action="store_true")
    p.add_argument("--out")
    p.set_defaults(fn=cmd_jack)

    p = sub.add_parser("ch", help="normalized Jack character at a parameter")
    p.add_argument("--pi", type=_parse_int_list, required=True)
    p.add_argument("--lambda", dest="lam", type=_parse_int_list, required=True)
    p.add_argument("--A", type=_parse_rational, required=True)
    p.add_argument("--force", action="store_true")
    p.add_argument("--out")
    p.set_defaults(fn=cmd_ch)

    p = sub.add_parser("verify", help="run a named verification suite")
    p.add_argument("suite",
                   choices=sorted(SUITES) + sorted(SUITE_ALIASES) + ["all"])
    p.add_argument("--n", type=int, default=None,
                   help="override the suite's n range (with --force beyond "
                        "the default guards)")
    p.add_argument("--seed", type=int, default=None)
    p.add_argument("--force", action="store_true")
    p.add_argument("--format", default="text",
                   choices=["json", "csv", "text"])
    p.add_argument("--out")
    p.set_defaults(fn=cmd_verify)

    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.fn(args)
    except DOMAIN_ERRORS as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
