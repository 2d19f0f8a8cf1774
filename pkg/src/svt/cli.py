"""``svt`` command line: generate, count, number, map and verify.

Examples::

    svt generate --shape 2,2 --density "2,2;2,2" --format ascii
    svt count --shape 3,3 --density "1,1,1;1,2,2" --method all
    svt number --family raney n=2 k=2 r=2
    svt map to-path '{"shape":[3,3],"cells":[[[1],[3],[7]],[[2,4],[5,6],[8,9]]]}'
    svt verify --suite small
"""

from __future__ import annotations

import argparse
import json
import os
import sys

from . import bijections as bj
from . import serialize as io
from .core import SetValuedTableau, density_of, schutzenberger, total_mass, validate
from .enumeration import TwoRowDensity, count_closed_form, count_shift_recursion
from .generate import count_by_generation, generate_all
from .numbers import FAMILIES
from .verify import CHECKS, Bounds, format_report, run_checks

DEFAULT_MAX_MASS = 20


class CliError(Exception):
    pass


def max_mass() -> int:
    raw = os.environ.get("SVT_MAX_MASS", str(DEFAULT_MAX_MASS))
    try:
        return int(raw)
    except ValueError:
        raise CliError(f"SVT_MAX_MASS must be an integer, got {raw!r}")


def _read_input(args):
    """JSON object from --in FILE, the positional argument, or stdin ('-')."""
    if getattr(args, "infile", None):
        if not os.path.exists(args.infile):
            raise CliError(f"input file {args.infile} does not exist")
        with open(args.infile) as fh:
            return json.load(fh)
    src = getattr(args, "source", None)
    if src == "-":
        return json.load(sys.stdin)
    if src:
        return json.loads(src)
    return None


def _density_args(args):
    if args.density is not None or args.shape is not None:
        shape = io.parse_shape(args.shape) if args.shape is not None else None
        return (shape if shape is not None else ()), io.parse_density(args.density or "", shape)
    obj = _read_input(args)
    if obj is None:
        raise CliError("give --shape/--density or an input file")
    return io.density_spec_from_obj(obj)


def _params(pairs) -> dict:
    out = {}
    for p in pairs or []:
        if "=" not in p:
            raise CliError(f"parameter {p!r} should look like name=value")
        key, val = p.split("=", 1)
        if "," in val or key in ("s_vec", "t_vec"):
            out[key] = tuple(int(x) for x in val.split(",") if x)
        else:
            out[key] = int(val)
    return out


def _emit(args, obj, ascii_text):
    print(io.dumps(obj) if args.format == "json" else ascii_text)


def cmd_generate(args) -> int:
    shape, rho = _density_args(args)
    if total_mass(rho) > max_mass():
        raise CliError(f"total mass {total_mass(rho)} exceeds SVT_MAX_MASS={max_mass()}")
    n = 0
    for t in generate_all(shape, rho):
        if args.limit is not None and n >= args.limit:
            break
        n += 1
        _emit(args, io.tableau_to_obj(t), io.render_tableau(t) + "\n")
    total = n if args.limit is None else count_by_generation(shape, rho)
    _emit(args, {"count": str(total), "emitted": n}, f"count: {total}")
    return 0


def _count(shape, rho, method: str) -> int:
    if method == "brute":
        if total_mass(rho) > max_mass():
            raise CliError(f"total mass {total_mass(rho)} exceeds SVT_MAX_MASS={max_mass()}")
        return count_by_generation(shape, rho)
    if len(rho) > 2:
        raise CliError(f"method {method!r} needs a shape with at most two rows")
    d = TwoRowDensity.from_grid(shape, rho)
    if method == "shift":
        return count_shift_recursion(d)
    if method == "closed":
        return count_closed_form(d)
    if method == "paths":
        return bj.count_paths_below(bj.p_max(d))
    raise CliError(f"unknown method {method!r}")


def cmd_count(args) -> int:
    shape, rho = _density_args(args)
    if args.method == "all":
        methods = ["brute"] + (["shift", "closed", "paths"] if len(rho) <= 2 else [])
        values = {}
        for m in methods:
            try:
                values[m] = _count(shape, rho, m)
            except (CliError, ValueError) as exc:
                print(f"skipping {m}: {exc}", file=sys.stderr)
        if len(set(values.values())) > 1:
            raise CliError("methods disagree: " + ", ".join(f"{k}={v}" for k, v in values.items()))
        if not values:
            raise CliError("no counting method applies")
        value = next(iter(values.values()))
    else:
        value = _count(shape, rho, args.method)
    _emit(args, io.count_to_obj(value), str(value))
    return 0


def cmd_number(args) -> int:
    cls = FAMILIES.get(args.family)
    if cls is None:
        raise CliError(f"unknown family {args.family!r}; choose from {', '.join(FAMILIES)}")
    params = _params(args.params)
    if args.family == "tennis-general":
        params = {"s": params.pop("s", params.pop("s_vec", ())), "t": params.pop("t", params.pop("t_vec", ()))}
    try:
        fam = cls(**params)
    except TypeError as exc:
        raise CliError(f"bad parameters for {args.family}: {exc}")
    value = fam.value()
    if args.show_density:
        shape, rho = fam.density()
        print(f"shape {','.join(map(str, shape))} density {io.format_density(rho)}", file=sys.stderr)
    _emit(args, io.count_to_obj(value), str(value))
    return 0


def _as_tableau(obj) -> SetValuedTableau:
    if obj is None or io.guess_kind(obj) != "tableau":
        raise CliError("this map expects a tableau object")
    return io.tableau_from_obj(obj)


def _render(obj_kind, value) -> tuple[dict, str]:
    if obj_kind == "tableau":
        return io.tableau_to_obj(value), io.render_tableau(value)
    if obj_kind == "path":
        return io.path_to_obj(value), value.steps
    if obj_kind == "raney":
        text = "\n".join(
            f"block {i + 1} (size {s}):\n{io.render_tableau(b)}"
            for i, (s, b) in enumerate(zip(value.sizes, value.blocks))
        )
        return io.raney_to_obj(value), text + f"\nsizes: {','.join(map(str, value.sizes))}"
    if obj_kind == "tennis":
        return io.tennis_to_obj(value), "lawn: " + " ".join(map(str, value.lawn))
    if obj_kind == "shift":
        t, i = value
        return {"tableau": io.tableau_to_obj(t), "i": i}, io.render_tableau(t) + f"\ni = {i}"
    raise AssertionError(obj_kind)


def cmd_map(args) -> int:
    obj = _read_input(args)
    params = _params(args.params)
    name = args.name

    def need(*keys):
        missing = [k for k in keys if k not in params]
        if missing:
            raise CliError(f"map {name} needs parameters: {', '.join(k + '=...' for k in missing)}")
        return [params[k] for k in keys]

    if name == "to-path":
        t = _as_tableau(obj)
        out = bj.tableau_to_path(t)
        back = bj.path_to_tableau(out, t.shape, density_of(t))
        kind, same = "path", back == t
    elif name == "from-path":
        if obj is None or io.guess_kind(obj) != "path":
            raise CliError("from-path expects a path object")
        shape, rho = io.parse_shape(args.shape or ""), None
        rho = io.parse_density(args.density or "", shape)
        p = io.path_from_obj(obj)
        out = bj.path_to_tableau(p, shape, rho)
        kind, same = "tableau", bj.tableau_to_path(out) == p
    elif name == "schutzenberger":
        t = _as_tableau(obj)
        out = schutzenberger(t)
        kind, same = "tableau", schutzenberger(out) == t
    elif name == "density-shift":
        t = _as_tableau(obj)
        tp, i = bj.density_shift(t)
        a1, b1 = len(t.cells[0][0]), len(t.cells[1][0]) if len(t.cells) > 1 else 0
        cut = max(t.cells[0][1]) if t.cells[0][1] else 0
        u = [x - a1 for x in (t.cells[1][0] if len(t.cells) > 1 else ()) if x < cut]
        back = bj.density_shift_inverse(tp, i, u, a1, b1, n2=len(t.cells[1]) if len(t.cells) > 1 else 0)
        out, kind, same = (tp, i), "shift", back == t
    elif name == "raney-split":
        k, r = need("k", "r")
        t = _as_tableau(obj)
        out = bj.raney_split(t, k, r)
        kind, same = "raney", bj.raney_concat(out) == t
    elif name == "raney-concat":
        if obj is None or io.guess_kind(obj) != "raney":
            raise CliError("raney-concat expects {\"k\":..,\"r\":..,\"blocks\":[...]}")
        rt = io.raney_from_obj(obj)
        out = bj.raney_concat(rt)
        kind, same = "tableau", bj.raney_split(out, rt.k, rt.r) == rt
    elif name == "to-tennis":
        t = _as_tableau(obj)
        if "s" in params and isinstance(params["s"], tuple):
            out = bj.tableau_to_tennis(t, params["s"], params["t"])
        else:
            s, tt = need("s", "t")
            out = bj.tableau_to_tennis(t, s, tt, params.get("n"))
        kind, same = "tennis", bj.tennis_to_tableau(out) == t
    elif name == "from-tennis":
        if obj is None or io.guess_kind(obj) != "tennis":
            raise CliError("from-tennis expects {\"s\":[..],\"t\":[..],\"lawn\":[..]}")
        arr = io.tennis_from_obj(obj)
        out = bj.tennis_to_tableau(arr)
        kind, same = "tableau", bj.tableau_to_tennis(out, arr.s_vec, arr.t_vec) == arr
    else:
        raise CliError(f"unknown map {name!r}")

    data, text = _render(kind, out)
    _emit(args, data, text)
    if args.round_trip:
        print("round trip: " + ("ok" if same else "FAILED"), file=sys.stderr)
        return 0 if same else 1
    return 0


def cmd_verify(args) -> int:
    bounds = Bounds.suite(args.suite, args.max_mass)
    checks = CHECKS
    if args.only:
        checks = [c for c in CHECKS if any(key in c.__name__ for key in args.only)]
    results = run_checks(bounds, checks)
    print(format_report(results))
    return 0 if all(r.passed for r in results) else 1


def cmd_validate(args) -> int:
    t = _as_tableau(_read_input(args))
    rho = io.parse_density(args.density, t.shape) if args.density else None
    report = validate(t, rho)
    for v in report.violations:
        print(v.message)
    print("ok" if report.ok else f"{len(report.violations)} violation(s)")
    return 0 if report.ok else 1


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="svt", description="Standard set-valued Young tableaux")
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p, density=True):
        p.add_argument("--format", choices=["json", "ascii"], default="json")
        p.add_argument("--in", dest="infile", help="read the input object from a JSON file")
        if density:
            p.add_argument("--shape", help="row lengths, e.g. 3,3")
            p.add_argument("--density", help='cell densities, rows split by ";", e.g. "1,1,1;2,2,2"')

    p = sub.add_parser("generate", help="list every tableau of a shape and density")
    common(p)
    p.add_argument("--limit", type=int, help="stop after this many tableaux")
    p.set_defaults(func=cmd_generate)

    p = sub.add_parser("count", help="count tableaux of a shape and density")
    common(p)
    p.add_argument("--method", choices=["brute", "shift", "closed", "paths", "all"], default="closed")
    p.set_defaults(func=cmd_count)

    p = sub.add_parser("number", help="evaluate a generalised Catalan number")
    common(p, density=False)
    p.add_argument("--family", required=True, choices=sorted(FAMILIES))
    p.add_argument("--show-density", action="store_true", help="also print the realising density")
    p.add_argument("params", nargs="*", help="name=value pairs, e.g. n=3 k=2")
    p.set_defaults(func=cmd_number)

    p = sub.add_parser("map", help="apply one of the bijections")
    common(p)
    p.add_argument("name", choices=[
        "to-path", "from-path", "schutzenberger", "density-shift",
        "raney-split", "raney-concat", "to-tennis", "from-tennis",
    ])
    p.add_argument("source", nargs="?", help="input JSON object, or - for stdin")
    p.add_argument("params", nargs="*", help="name=value pairs, e.g. k=3 r=4")
    p.add_argument("--round-trip", action="store_true", help="apply the inverse and check identity")
    p.set_defaults(func=cmd_map)

    p = sub.add_parser("verify", help="run the cross-checks")
    p.add_argument("--suite", choices=["small", "full"], default="small")
    p.add_argument("--max-mass", type=int, help="override the mass bound of the suite")
    p.add_argument("--only", nargs="*", help="run only checks whose name contains one of these")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("validate", help="check a tableau for standardness")
    common(p, density=False)
    p.add_argument("source", nargs="?")
    p.add_argument("--density", help="expected density")
    p.set_defaults(func=cmd_validate)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (CliError, ValueError, KeyError, json.JSONDecodeError) as exc:
        print(f"svt: error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
