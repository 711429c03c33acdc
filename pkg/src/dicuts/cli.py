"""Command-line front end: generate, check, cut, decompose, peel, verify,
and an empirical explorer for the open-problem searches.

Report lines are tab-separated and stable:
instance  method  n  m  size  bound_num/bound_den  oracle  pass
Bounds are exact rationals, never floats.
"""

from __future__ import annotations

import argparse
import math
import random
import sys
from fractions import Fraction

from . import oracle
from .colorcut import dicut_acyclic, dicut_d22
from .d11 import dicut_d11, dicut_d11_connected
from .decompose import split_dkk
from .digraph import (
    CutCertificate,
    Digraph,
    InputError,
    PreconditionError,
    ResourceLimitError,
    class_partition,
    format_dg,
    load_dg,
    save_dg,
)
from .generators import (
    gen_example1,
    gen_example2,
    gen_random_family,
    gen_regular_tournament,
)
from .peel import peel_to_lower_class

EXIT_OK = 0
EXIT_FAIL = 1
EXIT_INPUT = 2
EXIT_RESOURCE = 3


def _infer_k(D: Digraph) -> int:
    k = 0
    while class_partition(D, k, k) is None:
        k += 1
        if k > D.n:
            raise PreconditionError("no degree class found")
    return max(k, 1)


def _triangle_bound_t(D: Digraph) -> int:
    """t for the (2m - t)/5 guarantee: the exact maximum packing when the
    backtracking guard allows, else the always-valid upper bound m // 3."""
    try:
        return oracle.max_triangle_packing(D)
    except ResourceLimitError:
        return D.m // 3


def _run_method(D: Digraph, method: str, k: int | None):
    """(certificate, guaranteed bound as Fraction)."""
    if method == "d11":
        t = _triangle_bound_t(D)
        return dicut_d11(D), Fraction(2 * D.m - t, 5)
    if method == "d11c":
        return dicut_d11_connected(D), Fraction(7 * D.m, 20)
    if method == "acyclic":
        kk = k if k is not None else _infer_k(D)
        return dicut_acyclic(D, kk), Fraction((kk + 1) * D.m, 4 * kk + 2)
    if method == "d22":
        return dicut_d22(D), Fraction(3 * D.m, 10)
    if method == "oracle":
        cert = oracle.max_dicut_exact(D)
        return cert, Fraction(cert.size)
    raise InputError(f"unknown method {method!r}")


def _report_line(instance: str, method: str, D: Digraph,
                 cert: CutCertificate, bound: Fraction,
                 opt: int | None) -> tuple[str, bool]:
    ok = cert.size >= bound and (opt is None or cert.size <= opt)
    line = "\t".join([
        instance, method, str(D.n), str(D.m), str(cert.size),
        f"{bound.numerator}/{bound.denominator}",
        str(opt) if opt is not None else "-",
        "pass" if ok else "fail",
    ])
    return line, ok


def _cmd_gen(args) -> int:
    if args.family == "example1":
        D = gen_example1(args.k)
    elif args.family == "example2":
        D = gen_example2()
    elif args.family == "tournament":
        D = gen_regular_tournament(args.k)
    else:
        D = gen_random_family(args.family, args.n if args.t is None else args.t,
                              args.k, args.seed)
    comment = f"family={args.family} k={args.k} n={args.n} seed={args.seed}"
    if args.output:
        save_dg(D, args.output, comment)
    else:
        sys.stdout.write(format_dg(D, comment))
    return EXIT_OK


def _cmd_check(args) -> int:
    D = load_dg(args.file)
    part = class_partition(D, args.k, args.l)
    if part is None:
        print(f"not in D({args.k},{args.l})")
        return EXIT_FAIL
    print(f"in D({args.k},{args.l}); |X|={len(part.X)} |Y|={len(part.Y)}")
    return EXIT_OK


def _oracle_opt(D: Digraph) -> int | None:
    try:
        return oracle.max_dicut_exact(D).size
    except ResourceLimitError:
        return None


def _cmd_cut(args) -> int:
    D = load_dg(args.file)
    cert, bound = _run_method(D, args.method, args.k)
    line, ok = _report_line(args.file, args.method, D, cert, bound, None)
    print(line)
    if args.edges:
        print("X:", " ".join(map(str, cert.X)))
        for u, v in cert.cut_edges:
            print(u, v)
    return EXIT_OK if ok else EXIT_FAIL


def _cmd_verify(args) -> int:
    D = load_dg(args.file)
    cert, bound = _run_method(D, args.method, args.k)
    cert.verify(D)
    opt = _oracle_opt(D)
    line, ok = _report_line(args.file, args.method, D, cert, bound, opt)
    print(line)
    return EXIT_OK if ok else EXIT_FAIL


def _cmd_decompose(args) -> int:
    D = load_dg(args.file)
    p1, p2 = args.split
    res = split_dkk(D, p1, p2, balance_f=args.balance)
    head = (f"split p1={p1} p2={p2} of {args.file}; "
            f"X={','.join(map(str, res.X))} Y={','.join(map(str, res.Y))}")
    save_dg(res.D1, f"{args.output}.1.dg", head + " (part 1)")
    save_dg(res.D2, f"{args.output}.2.dg", head + " (part 2)")
    print(f"{res.D1.m}\t{res.D2.m}")
    return EXIT_OK


def _cmd_peel(args) -> int:
    D = load_dg(args.file)
    trace: list = []
    rest, R = peel_to_lower_class(D, args.k, trace)
    save_dg(rest, f"{args.output}.rest.dg",
            f"peel k={args.k} of {args.file}")
    with open(f"{args.output}.removed.dg", "w", encoding="ascii") as fh:
        fh.write(f"# removed edges, peel k={args.k} of {args.file}\n")
        fh.write(f"{D.n} {len(R)}\n")
        for u, v in sorted(R):
            fh.write(f"{u} {v}\n")
    print(f"removed\t{len(R)}\tbound\t{2 * D.m // (2 * args.k + 1)}")
    if args.verbose:
        for tag, rem, add in trace:
            print(f"move\t{tag}\t-{list(rem)}\t+{list(add)}")
    return EXIT_OK


def _rand_member(family: str, n: int, k: int, rng: random.Random) -> Digraph:
    return gen_random_family(family, n, k, rng.randrange(1 << 30))


def _cmd_explore(args) -> int:
    rng = random.Random(args.seed)
    p = args.problem
    found_counterexample = False
    if p == 4:
        print("problem 4 is a complexity question; out of scope")
        return EXIT_OK
    if p == 1:
        # smallest cut ratio of connected D(1,1) digraphs, tracked by m
        best: dict[int, Fraction] = {}
        for _ in range(args.budget):
            D = _rand_member("d11", rng.randint(3, args.max_n), 1, rng)
            if not D.is_weakly_connected() or D.m == 0:
                continue
            opt = _oracle_opt(D)
            if opt is None:
                continue
            r = Fraction(opt, D.m)
            if D.m not in best or r < best[D.m]:
                best[D.m] = r
        for m in sorted(best):
            print(f"m={m}\tc_max>={best[m].numerator}/{best[m].denominator}")
    elif p == 2:
        # does max cut reach (2m + s)/5 on triangle-free D(1,1),
        # s = sources + sinks?
        for _ in range(args.budget):
            D = _rand_member("d11-trianglefree", rng.randint(3, args.max_n), 1, rng)
            if D.m == 0:
                continue
            opt = _oracle_opt(D)
            if opt is None:
                continue
            s = sum(1 for v in range(D.n)
                    if (D.in_deg(v) == 0) != (D.out_deg(v) == 0))
            if 5 * opt < 2 * D.m + s:
                print(f"counterexample\tn={D.n}\tm={D.m}\ts={s}\topt={opt}")
                print(format_dg(D))
                found_counterexample = True
        if not found_counterexample:
            print("no counterexample to (2m+s)/5 found")
    elif p == 3:
        for _ in range(args.budget):
            D = _rand_member("d11-trianglefree", rng.randint(3, args.max_n), 1, rng)
            if D.m == 0:
                continue
            opt = _oracle_opt(D)
            if opt is not None and opt == math.ceil(2 * D.m / 5):
                print(f"tight\tn={D.n}\tm={D.m}\topt={opt}")
    elif p == 5:
        worst = Fraction(0)
        for _ in range(args.budget):
            D = _rand_member("dkk", rng.randint(4, args.max_n), 2, rng)
            if D.m == 0 or D.m > 24:
                continue
            R = oracle.min_removal_exact(D, 2)
            if D.m and Fraction(len(R), D.m) > worst:
                worst = Fraction(len(R), D.m)
        print(f"lambda>={worst.numerator}/{worst.denominator}")
    elif p == 6:
        for _ in range(args.budget):
            D = _rand_member("dkk", rng.randint(4, min(args.max_n, 10)), 2, rng)
            if D.m == 0:
                continue
            if oracle.decompose_into_cuts(D, 4) is None:
                print(f"needs>=5 cuts\tn={D.n}\tm={D.m}")
                print(format_dg(D))
                found_counterexample = True
        if not found_counterexample:
            print("all sampled D(2,2) covered by 4 cuts")
    elif p == 7:
        for _ in range(args.budget):
            D = _rand_member("dkk", rng.randint(4, args.max_n), 3, rng)
            if D.m == 0:
                continue
            opt = _oracle_opt(D)
            if opt is not None and 7 * opt < 2 * D.m:
                print(f"counterexample\tn={D.n}\tm={D.m}\topt={opt}")
                print(format_dg(D))
                found_counterexample = True
        if not found_counterexample:
            print("no counterexample to 2m/7 found")
    elif p == 8:
        k = 2
        bound = Fraction(1, 4) + Fraction(1, 8 * k + 4)
        best = Fraction(1)
        for _ in range(args.budget):
            D = _rand_member("dkk", rng.randint(4, args.max_n), k, rng)
            if D.m == 0:
                continue
            opt = _oracle_opt(D)
            if opt is None:
                continue
            r = Fraction(opt, D.m)
            best = min(best, r)
            if r < bound:
                print(f"c_max below 1/4+1/(8k+4)\tn={D.n}\tm={D.m}\topt={opt}")
                found_counterexample = True
        print(f"min c_max seen: {best.numerator}/{best.denominator}")
    else:
        raise InputError(f"unknown problem {p}")
    return EXIT_FAIL if found_counterexample else EXIT_OK


def _build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="dicuts")
    sub = ap.add_subparsers(dest="cmd", required=True)

    g = sub.add_parser("gen", help="generate an instance")
    g.add_argument("family", choices=[
        "example1", "example2", "tournament", "d11", "d11-trianglefree",
        "dkk", "acyclic-dkk", "disjoint-triangles"])
    g.add_argument("--k", type=int, default=1)
    g.add_argument("--n", type=int, default=10)
    g.add_argument("--t", type=int, default=None,
                   help="triangle count for disjoint-triangles")
    g.add_argument("--seed", type=int, default=0)
    g.add_argument("-o", "--output")
    g.set_defaults(func=_cmd_gen)

    c = sub.add_parser("check", help="class membership test")
    c.add_argument("file")
    c.add_argument("--k", type=int, required=True)
    c.add_argument("--l", type=int, required=True)
    c.set_defaults(func=_cmd_check)

    for name, fn in (("cut", _cmd_cut), ("verify", _cmd_verify)):
        s = sub.add_parser(name)
        s.add_argument("file")
        s.add_argument("--method", required=True,
                       choices=["d11", "d11c", "acyclic", "d22", "oracle"])
        s.add_argument("--k", type=int, default=None)
        if name == "cut":
            s.add_argument("--edges", action="store_true",
                           help="also print the witness partition and edges")
        s.set_defaults(func=fn)

    d = sub.add_parser("decompose")
    d.add_argument("file")
    d.add_argument("--split", nargs=2, type=int, required=True,
                   metavar=("P1", "P2"))
    d.add_argument("--balance", action="store_true")
    d.add_argument("-o", "--output", required=True)
    d.set_defaults(func=_cmd_decompose)

    pe = sub.add_parser("peel")
    pe.add_argument("file")
    pe.add_argument("--k", type=int, required=True)
    pe.add_argument("-o", "--output", required=True)
    pe.add_argument("-v", "--verbose", action="store_true")
    pe.set_defaults(func=_cmd_peel)

    e = sub.add_parser("explore")
    e.add_argument("--problem", type=int, required=True, choices=range(1, 9))
    e.add_argument("--max-n", type=int, default=10)
    e.add_argument("--seed", type=int, default=0)
    e.add_argument("--budget", type=int, default=100)
    e.set_defaults(func=_cmd_explore)
    return ap


def main(argv=None) -> int:
    args = _build_parser().parse_args(argv)
    try:
        return args.func(args)
    except (InputError, FileNotFoundError, OSError) as exc:
        print(f"input error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    except PreconditionError as exc:
        print(f"precondition failed: {exc}", file=sys.stderr)
        return EXIT_INPUT
    except ResourceLimitError as exc:
        print(f"resource guard: {exc}", file=sys.stderr)
        return EXIT_RESOURCE


if __name__ == "__main__":
    sys.exit(main())
