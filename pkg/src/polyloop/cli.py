"""Command-line interface.

Exit codes: 0 success, 1 a requested check failed, 2 usage error or
malformed input, 3 input/output error.
"""

from __future__ import annotations

import argparse
import json
import random
import sys

from . import artin, arrangements, series
from .cobar import mu_chain, pk_complex, tk_complex, tk_differential
from .corpus import corpus
from .ext_oracle import report_tsv, verify_cotor_iso
from .homology import (BettiTable, BoundaryError, field_homology, integer_homology, multidegrees,
                       tk_into_pk_surjective)
from .loop_assembly import LoopAssembly, sphere_oracle_dims
from .simplicial import SimplicialComplex, build_complex, random_complex

EXIT_OK, EXIT_CHECK, EXIT_USAGE, EXIT_IO = 0, 1, 2, 3


class InputError(Exception):
    """Malformed input (exit code 2)."""


def _read(path: str) -> str:
    if path == "-":
        return sys.stdin.read()
    with open(path) as fh:
        return fh.read()


def _parse_complex(data) -> SimplicialComplex:
    if not isinstance(data, dict) or "m" not in data or "facets" not in data:
        raise InputError('complex must be an object with "m" and "facets"')
    try:
        return build_complex(int(data["m"]), data["facets"])
    except (TypeError, ValueError) as exc:
        raise InputError(str(exc)) from exc


def load_complexes(path: str) -> list[tuple[str, SimplicialComplex]]:
    """A single complex object, a list of them, or an object mapping names to complexes."""
    try:
        data = json.loads(_read(path))
    except json.JSONDecodeError as exc:
        raise InputError(f"malformed JSON in {path}: {exc}") from exc
    if isinstance(data, list):
        return [(f"complex{i}", _parse_complex(d)) for i, d in enumerate(data)]
    if isinstance(data, dict) and "m" not in data:
        return [(name, _parse_complex(d)) for name, d in data.items()]
    return [("complex", _parse_complex(data))]


def load_complex(path: str) -> SimplicialComplex:
    items = load_complexes(path)
    if len(items) != 1:
        raise InputError("expected exactly one complex")
    return items[0][1]


def _parse_multidegree(text: str, m: int) -> tuple:
    try:
        I = tuple(int(x) for x in text.split(","))
    except ValueError as exc:
        raise InputError(f"bad multidegree {text!r}") from exc
    if len(I) != m or any(a < 0 for a in I):
        raise InputError(f"multidegree must have {m} non-negative entries")
    return I


def _emit(args, rows: list[dict], header: list[str]):
    if args.format == "json":
        args.out.write(json.dumps(rows, indent=1, sort_keys=True) + "\n")
        return
    args.out.write("\t".join(header) + "\n")
    for r in rows:
        args.out.write("\t".join(_cell(r[h]) for h in header) + "\n")


def _cell(v) -> str:
    if isinstance(v, bool):
        return "1" if v else "0"
    if isinstance(v, (list, tuple)):
        return ",".join(map(str, v))
    return str(v)


# -- subcommands ------------------------------------------------------------------

def cmd_betti(args) -> int:
    K = load_complex(args.complex)
    table = BettiTable()
    for I in multidegrees(K.m, args.bound):
        cx = tk_complex(K, I)
        if args.char:
            h = {k: (d, ()) for k, d in field_homology(cx, args.char).items()}
        else:
            h = integer_homology(cx)
        table.add(cx, h)
    args.out.write(table.to_json() if args.format == "json" else table.to_tsv())
    return EXIT_OK


def cmd_ext(args) -> int:
    K = load_complex(args.complex)
    ok, rows = verify_cotor_iso(K, args.char, args.bound)
    if args.format == "json":
        _emit(args, [{"n": r.n, "I": list(r.I), "dim_tor": r.dim_tor, "dim_cobar": r.dim_cobar,
                      "match": r.match} for r in rows], [])
    else:
        args.out.write(report_tsv(rows))
    return EXIT_OK if ok else EXIT_CHECK


def _check_d_squared(K, bound, corrupt=False):
    for I in multidegrees(K.m, bound):
        for cx in (tk_complex(K, I), pk_complex(K, I)):
            if corrupt:
                _corrupt(cx)
            if not cx.check_d_squared():
                return False
    return True


def _corrupt(cx):
    """Test hook: double one boundary coefficient so that d^2 no longer vanishes."""
    for k in sorted(cx.boundary):
        if k < 1 or k - 1 not in cx.boundary:
            continue
        for col in cx.boundary[k]:
            for i in col:
                if cx.boundary[k - 1][i]:
                    col[i] *= 2
                    return


def _check_pi0(K, bound):
    return all(
        artin.count_by_multidegree(K, I) == integer_homology(tk_complex(K, I))[0][0]
        for I in multidegrees(K.m, bound)
    )


def _check_mu(K, bound, rng):
    for I in multidegrees(K.m, bound):
        cx = tk_complex(K, I)
        for k, words in cx.basis.items():
            for w in rng.sample(words, min(len(words), 5)):
                for j in range(1, K.m + 1):
                    for kk in range(1, I[j - 1] + 1):
                        a = tk_differential(K, mu_chain(j, kk, {w: 1}))
                        b = mu_chain(j, kk, tk_differential(K, {w: 1}))
                        if a != b:
                            return False
    return True


def _check_flag_collapse(K, bound):
    for I in multidegrees(K.m, bound):
        h = integer_homology(tk_complex(K, I))
        if any(r or t for k, (r, t) in h.items() if k > 0):
            return False
    return True


def _check_surjective(K, bound):
    return all(tk_into_pk_surjective(K, I)[0] for I in multidegrees(K.m, bound))


def _check_shifted(K, bound):
    return arrangements.shifted_torsion_report(K, bound)[0]


def verify_complex(name, K, bound, rng, corrupt=False) -> list[dict]:
    rows = []

    def record(check, fn):
        try:
            ok = bool(fn())
        except BoundaryError:
            ok = False
        rows.append({"complex": name, "check": check, "pass": ok})

    record("d_squared", lambda: _check_d_squared(K, bound, corrupt))
    if corrupt:
        return rows
    record("cotor_iso", lambda: verify_cotor_iso(K, 0, bound)[0])
    record("pi0_artin", lambda: _check_pi0(K, bound))
    record("mu_commutes", lambda: _check_mu(K, bound, rng))
    record("pk_surjective", lambda: _check_surjective(K, min(bound, 4)))
    if K.is_flag():
        record("flag_collapse", lambda: _check_flag_collapse(K, bound))
    if K.is_shifted():
        record("shifted_torsion_free", lambda: _check_shifted(K, bound))
    return rows


def cmd_verify(args) -> int:
    rng = random.Random(args.seed)
    if args.complex:
        items = load_complexes(args.complex)
    else:
        items = [(n, K) for n, K in corpus().items() if K.m <= 4]
        items.append(("random", random_complex(4, rng)))
    rows = []
    for name, K in items:
        rows.extend(verify_complex(name, K, args.bound, rng, corrupt=args.corrupt_boundary))
    _emit(args, rows, ["complex", "check", "pass"])
    return EXIT_OK if all(r["pass"] for r in rows) else EXIT_CHECK


def _vertex_inputs(args, m):
    spec = args.inputs
    if spec.strip().startswith("["):
        try:
            items = json.loads(spec)
        except json.JSONDecodeError as exc:
            raise InputError(f"bad --inputs: {exc}") from exc
    else:
        items = [s for s in _split_top(spec)]
    if len(items) == 1:
        items = items * m
    if len(items) != m:
        raise InputError(f"need 1 or {m} vertex algebras")
    return items


def _split_top(spec: str):
    out, depth, cur = [], 0, ""
    for ch in spec:
        if ch == "(":
            depth += 1
        elif ch == ")":
            depth -= 1
        if ch in ",;" and depth == 0:
            out.append(cur.strip())
            cur = ""
        else:
            cur += ch
    if cur.strip():
        out.append(cur.strip())
    return out


def cmd_loop(args) -> int:
    K = load_complex(args.complex)
    inputs = _vertex_inputs(args, K.m)
    try:
        L = LoopAssembly(K, inputs, args.char, args.cutoff)
    except ValueError as exc:
        raise InputError(str(exc)) from exc
    dims = L.dims()
    rows = [{"degree": d, "dim": n} for d, n in sorted(dims.items())]
    header = ["degree", "dim"]
    ok = True
    if args.oracle:
        degs = []
        for a in L.inputs:
            if len(a.degrees) < 1 or a.products != _poly_products(a):
                raise InputError("--oracle needs poly(n) inputs")
            degs.append(a.degrees[0] + 1)
        ref = sphere_oracle_dims(K, degs, args.char, args.cutoff)
        for r in rows:
            r["oracle"] = ref[r["degree"]]
            r["match"] = r["oracle"] == r["dim"]
            ok &= r["match"]
        header += ["oracle", "match"]
    _emit(args, rows, header)
    return EXIT_OK if ok else EXIT_CHECK


def _poly_products(a):
    from .loop_assembly import poly_input
    return poly_input(a.degrees[0], a.cutoff).products


def cmd_series(args) -> int:
    D = args.cutoff
    if args.fatwedge is not None:
        rows = [{"index_set": s, "formula": f, "reference": r, "equal": e}
                for s, f, r, e in series.fatwedge_discrepancy(args.fatwedge, D)]
        _emit(args, rows, ["index_set", "formula", "reference", "equal"])
        return EXIT_OK
    K = load_complex(args.complex)
    inputs = _vertex_inputs(args, K.m)
    ser = []
    for spec in inputs:
        kind, _, n = str(spec).partition("(")
        n = int(n.rstrip(")"))
        if kind == "poly":
            ser.append(series.poly_series(n, D))
        elif kind == "exterior":
            ser.append(series.exterior_series(n, D))
        else:
            raise InputError(f"series needs poly(n) or exterior(n) inputs, got {spec!r}")
    try:
        inv = series.flag_loop_series(K, ser, D)
    except ValueError as exc:
        raise InputError(str(exc)) from exc
    direct = inv.inverse()
    rows = [{"degree": d, "inverse": inv.as_list()[d], "series": direct.as_list()[d]} for d in range(D + 1)]
    _emit(args, rows, ["degree", "inverse", "series"])
    return EXIT_OK


def cmd_artin(args) -> int:
    K = load_complex(args.complex)
    if args.multidegree:
        Is = [_parse_multidegree(args.multidegree, K.m)]
    else:
        Is = multidegrees(K.m, args.bound)
    rows = [{"I": list(I), "count": artin.count_by_multidegree(K, I)} for I in Is]
    _emit(args, rows, ["I", "count"])
    return EXIT_OK


def cmd_noequal(args) -> int:
    try:
        ok, rows = arrangements.no_equal_report(args.m, args.s, args.interpretation)
    except ValueError as exc:
        raise InputError(str(exc)) from exc
    _emit(args, [{"degree": d, "enumerated": e, "snf_rank": r, "match": mt} for d, e, r, mt in rows],
          ["degree", "enumerated", "snf_rank", "match"])
    return EXIT_OK if ok else EXIT_CHECK


def cmd_arrangement(args) -> int:
    K = load_complex(args.complex)
    I = _parse_multidegree(args.multidegree, K.m) if args.multidegree else (1,) * K.m
    desc = arrangements.multidegree_to_arrangement(K, I)
    args.out.write(json.dumps(desc.to_dict(), indent=1, sort_keys=True) + "\n")
    return EXIT_OK


def _characteristic(text: str) -> int:
    from .linalg import check_characteristic
    try:
        return check_characteristic(int(text))
    except ValueError as exc:
        raise argparse.ArgumentTypeError(str(exc))


def _positive(text: str) -> int:
    v = int(text)
    if v < 0:
        raise argparse.ArgumentTypeError("must be non-negative")
    return v


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="polyloop", description=__doc__.splitlines()[0])
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=["tsv", "json"], default="tsv")
    common.add_argument("--char", type=_characteristic, default=0, help="0 or a prime")
    common.add_argument("--seed", type=int, default=0)
    common.add_argument("--output", "-o", default="-", help="output file (default stdout)")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("betti", parents=[common], help="multigraded homology table of T_K")
    p.add_argument("--complex", required=True)
    p.add_argument("--bound", type=_positive, default=3)
    p.set_defaults(func=cmd_betti)

    p = sub.add_parser("ext", parents=[common], help="compare T_K homology with Tor over the face ring")
    p.add_argument("--complex", required=True)
    p.add_argument("--bound", type=_positive, default=4)
    p.set_defaults(func=cmd_ext)

    p = sub.add_parser("verify", parents=[common], help="run the consistency checks")
    p.add_argument("--complex", help="JSON complex or list of complexes (default: built-in suite)")
    p.add_argument("--bound", type=_positive, default=3)
    p.add_argument("--corrupt-boundary", action="store_true", help=argparse.SUPPRESS)
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("loop", parents=[common], help="graded dimensions of loop homology")
    p.add_argument("--complex", required=True)
    p.add_argument("--cutoff", type=_positive, default=6)
    p.add_argument("--inputs", default="poly(1)",
                   help='vertex algebras: one for all or one per vertex, e.g. "poly(1)" or "exterior(1),poly(2)"')
    p.add_argument("--oracle", action="store_true", help="compare with the sphere oracle (poly inputs)")
    p.set_defaults(func=cmd_loop)

    p = sub.add_parser("series", parents=[common], help="flag Poincare series or fat-wedge report")
    p.add_argument("--complex")
    p.add_argument("--cutoff", type=_positive, default=8)
    p.add_argument("--inputs", default="poly(1)")
    p.add_argument("--fatwedge", type=int, metavar="N", help="fat-wedge discrepancy report for (n+1)-spheres")
    p.set_defaults(func=cmd_series)

    p = sub.add_parser("artin", parents=[common], help="count monoid elements by multidegree")
    p.add_argument("--complex", required=True)
    p.add_argument("--multidegree")
    p.add_argument("--bound", type=_positive, default=3)
    p.set_defaults(func=cmd_artin)

    p = sub.add_parser("noequal", parents=[common], help="basis enumeration versus SNF ranks")
    p.add_argument("--m", type=int, required=True)
    p.add_argument("--s", type=int, required=True)
    p.add_argument("--interpretation", default=arrangements.CALIBRATED.value,
                   choices=[i.value for i in arrangements.Interpretation])
    p.set_defaults(func=cmd_noequal)

    p = sub.add_parser("arrangement", parents=[common], help="diagonal arrangement of a multidegree")
    p.add_argument("--complex", required=True)
    p.add_argument("--multidegree")
    p.set_defaults(func=cmd_arrangement)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    if args.command == "series" and args.fatwedge is None and not args.complex:
        parser.error("series needs --complex or --fatwedge")
    try:
        if args.output == "-":
            args.out = sys.stdout
            return args.func(args)
        with open(args.output, "w") as fh:
            args.out = fh
            return args.func(args)
    except InputError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_IO


if __name__ == "__main__":
    sys.exit(main())
