"""Command-line front end.

Exit status: 0 success, 1 verification mismatch, 2 usage or input error,
3 resource limit exceeded.
"""

from __future__ import annotations

import argparse
import json
import sys
from typing import Optional, Sequence

from .errors import RatNCError, ResourceLimit
from .membership import is_member
from .parking import (
    Permutation,
    all_permutations,
    character_brute,
    character_formula,
    enumerate_park,
    mult_root,
)
from .partitions import LabeledNCPair, enumerate_nc, pair_to_path, pi_map, reflect_pair, rotate_pair
from .paths import CoprimePair, enumerate_paths, parse_path
from .render import show_text, svg_diagram
from .sieving import config12_from_pair, count_fixed, to_config12, verify_csp

EXIT_OK, EXIT_MISMATCH, EXIT_USAGE, EXIT_LIMIT = 0, 1, 2, 3


class UsageError(Exception):
    pass


def _pair(args) -> CoprimePair:
    return CoprimePair(args.a, args.b)


def _read_pair(text: str, pair: CoprimePair) -> LabeledNCPair:
    try:
        d = json.loads(text)
    except json.JSONDecodeError as e:
        raise UsageError(f"--pair is not valid JSON: {e}") from None
    d.setdefault("a", pair.a)
    d.setdefault("b", pair.b)
    pq = LabeledNCPair.from_dict(d)
    if pq.pair != pair:
        raise UsageError(f"pair JSON is for ({pq.a},{pq.b}), not ({pair.a},{pair.b})")
    return pq


def _bool(x: bool) -> str:
    return "true" if x else "false"


def cmd_enumerate(args, out) -> int:
    pair = _pair(args)
    items = enumerate_nc(pair)
    if args.limit is not None:
        items = items[: args.limit]
    if args.format == "tsv":
        out.write("index\tpath\tP\tQ\n")
        for k, pq in enumerate(items):
            p, q = str(pq).split(" Q=")
            out.write(f"{k}\t{pair_to_path(pq)}\t{p[2:]}\t{q}\n")
    else:
        for pq in items:
            out.write(pq.to_json() + "\n")
    return EXIT_OK


def cmd_show(args, out) -> int:
    path = parse_path(args.path, _pair(args))
    out.write(svg_diagram(path) if args.render == "svg" else show_text(path))
    return EXIT_OK


def cmd_member(args, out) -> int:
    pq = _read_pair(args.pair, _pair(args))
    out.write(json.dumps(is_member(pq).to_dict(), separators=(",", ":")) + "\n")
    return EXIT_OK


def cmd_orbit(args, out) -> int:
    pq = _read_pair(args.pair, _pair(args))
    seen, frontier = [pq], [pq]
    while frontier:
        nxt = []
        for x in frontier:
            moves = [rotate_pair(x)]
            if args.dihedral:
                moves.append(reflect_pair(x))
            for y in moves:
                if y not in seen:
                    seen.append(y)
                    nxt.append(y)
        frontier = nxt
    for x in seen:
        out.write(x.to_json() + "\n")
    return EXIT_OK


def cmd_fixed(args, out) -> int:
    res = count_fixed(_pair(args), args.d)
    out.write(str(res) + "\n")
    return EXIT_OK if res.match else EXIT_MISMATCH


def cmd_csp(args, out) -> int:
    pair = _pair(args)
    if args.narayana is not None:
        rep = verify_csp(pair, "narayana", k=args.narayana)
    elif args.kreweras is not None:
        try:
            r = [int(x) for x in args.kreweras.split(",")]
        except ValueError:
            raise UsageError("--kreweras expects comma-separated integers") from None
        rep = verify_csp(pair, "kreweras", r=r)
    else:
        rep = verify_csp(pair)
    out.write(rep.to_tsv())
    return EXIT_OK if rep.ok else EXIT_MISMATCH


def cmd_park(args, out) -> int:
    pair = _pair(args)
    if args.char is not None:
        w = Permutation.parse(args.char[0], pair.a)
        try:
            d = int(args.char[1])
        except ValueError:
            raise UsageError("D must be an integer") from None
        f = character_formula(w, d, pair)
        br = character_brute(w, d, pair)
        out.write(f"mult={mult_root(w, d, pair.b)} formula={f} brute={br} match={_bool(f == br)}\n")
        return EXIT_OK if f == br else EXIT_MISMATCH
    pfs = enumerate_park(pair)
    ok = True
    out.write("w\td\tformula\tbrute\tmatch\n")
    for w in all_permutations(pair.a):
        for d in range(pair.b - 1):
            f = character_formula(w, d, pair)
            br = character_brute(w, d, pair, pfs)
            ok &= f == br
            out.write(f"{','.join(map(str, w.images))}\t{d}\t{f}\t{br}\t{_bool(f == br)}\n")
    return EXIT_OK if ok else EXIT_MISMATCH


def cmd_config12(args, out) -> int:
    if args.n < 2:
        raise UsageError("N must be at least 2")
    pair = CoprimePair(args.n + 1, args.n)
    out.write("path\tballs\tarcs\n")
    ok = True
    for D in enumerate_paths(pair):
        cfg = to_config12(D)
        ok &= cfg == config12_from_pair(pi_map(D))
        balls = ",".join(map(str, sorted(cfg.balls)))
        arcs = " ".join(f"{i}-{j}" for i, j in sorted(cfg.arcs))
        out.write(f"{D}\t{balls}\t{arcs}\n")
    return EXIT_OK if ok else EXIT_MISMATCH


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="ratnc", description="Rational (a,b)-noncrossing partitions.")
    p.add_argument("--out", metavar="PATH", help="write output to PATH instead of stdout")
    sub = p.add_subparsers(dest="command", required=True)

    def with_pair(name, help_):
        sp = sub.add_parser(name, help=help_)
        sp.add_argument("a", type=int)
        sp.add_argument("b", type=int)
        sp.add_argument("--out", metavar="PATH", default=argparse.SUPPRESS)
        return sp

    sp = with_pair("enumerate", "list NC(A,B) in canonical order")
    sp.add_argument("--format", choices=["jsonl", "tsv"], default="jsonl")
    sp.add_argument("--limit", type=int)
    sp.set_defaults(func=cmd_enumerate)

    sp = with_pair("show", "draw a path with labels and lasers, plus its pair")
    sp.add_argument("--path", required=True, help='run vector "3,1,2,1" or NE-string')
    sp.add_argument("--render", choices=["ascii", "svg"], default="ascii")
    sp.set_defaults(func=cmd_show)

    sp = with_pair("member", "membership verdict for a candidate pair")
    sp.add_argument("--pair", required=True, help="pair JSON")
    sp.set_defaults(func=cmd_member)

    sp = with_pair("orbit", "rotation or dihedral orbit of a pair")
    sp.add_argument("--pair", required=True, help="pair JSON")
    sp.add_argument("--dihedral", action="store_true")
    sp.set_defaults(func=cmd_orbit)

    sp = with_pair("fixed", "count rot^D-fixed pairs by formula and brute force")
    sp.add_argument("d", type=int)
    sp.set_defaults(func=cmd_fixed)

    sp = with_pair("csp", "cyclic sieving table over every rotation power")
    g = sp.add_mutually_exclusive_group()
    g.add_argument("--narayana", type=int, metavar="K")
    g.add_argument("--kreweras", metavar="R1,...,RA")
    sp.set_defaults(func=cmd_csp)

    sp = with_pair("park", "parking function characters")
    g = sp.add_mutually_exclusive_group(required=True)
    g.add_argument("--char", nargs=2, metavar=("W", "D"), help="W in one-line or cycle notation")
    g.add_argument("--verify", action="store_true")
    sp.set_defaults(func=cmd_park)

    sp = sub.add_parser("config12", help="the (N+1,N) path to (1,2)-configuration bijection")
    sp.add_argument("n", type=int)
    sp.add_argument("--out", metavar="PATH", default=argparse.SUPPRESS)
    sp.set_defaults(func=cmd_config12)
    return p


def run(argv: Optional[Sequence[str]] = None, stdout=None, stderr=None) -> int:
    stdout = stdout or sys.stdout
    stderr = stderr or sys.stderr
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return EXIT_USAGE if e.code else EXIT_OK
    try:
        if args.out:
            with open(args.out, "w", encoding="utf-8") as fh:
                return args.func(args, fh)
        return args.func(args, stdout)
    except ResourceLimit as e:
        stderr.write(f"resource limit: {e}\n")
        return EXIT_LIMIT
    except (UsageError, RatNCError, ValueError) as e:
        stderr.write(f"error: {e}\n")
        return EXIT_USAGE


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
