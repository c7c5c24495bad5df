"""Command-line front-end: a batch desk calculator and verification harness.

All output is deterministic UTF-8, one logical result per line.  Exit codes:
0 success, 1 domain error, 2 usage or parse error.
"""

from __future__ import annotations

import argparse
import sys

from . import lattice
from .errors import IntDiffOpError, OperatorSyntaxError
from .laurent import left_divide, length, right_divide
from .i1 import project_B1
from .lattice import IdealAntichain, dedekind_bounds, enumerate_ideals
from .opparser import format_operator, format_poly, parse_operator, parse_poly
from .tensor import (
    apply_n,
    gen_e,
    gen_h,
    gen_integ,
    gen_partial,
    ideal_membership,
    project_modulo_prime,
    to_i1,
)


class _ArgError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise _ArgError(message)


def _build_parser() -> _Parser:
    p = _Parser(prog="intdiffop", description="Exact integro-differential operator calculator")
    p.add_argument("--machine", action="store_true", help="machine-readable output lines")
    sub = p.add_subparsers(dest="command", required=True)

    def with_n(sp):
        sp.add_argument("-n", type=int, default=1, help="number of tensor factors")

    sp = sub.add_parser("normalize", help="print the canonical form")
    with_n(sp)
    sp.add_argument("expr")

    sp = sub.add_parser("apply", help="apply an operator to a polynomial")
    with_n(sp)
    sp.add_argument("expr")
    sp.add_argument("--to", required=True, dest="poly")

    sp = sub.add_parser("involute", help="apply the involution")
    with_n(sp)
    sp.add_argument("expr")

    sp = sub.add_parser("grade", help="extract a homogeneous component")
    with_n(sp)
    sp.add_argument("expr")
    sp.add_argument("-d", type=int, required=True, dest="degree")

    sp = sub.add_parser("project", help="quotient by a sum of height-one primes")
    with_n(sp)
    sp.add_argument("expr")
    sp.add_argument("--primes", required=True, help="comma-separated factor indices")

    sp = sub.add_parser("ideal", help="antichain-encoded ideal operations")
    sp.add_argument("op", choices=["sum", "prod", "includes", "member", "minprimes", "isprime"])
    with_n(sp)
    sp.add_argument("args", nargs="*")

    sp = sub.add_parser("dedekind", help="count the ideals over n factors")
    sp.add_argument("N", type=int)

    sp = sub.add_parser("divide", help="Euclidean division in the Laurent quotient")
    g = sp.add_mutually_exclusive_group(required=True)
    g.add_argument("--left", action="store_true")
    g.add_argument("--right", action="store_true")
    sp.add_argument("b")
    sp.add_argument("c")

    sp = sub.add_parser("check", help="verification suites")
    sp.add_argument("what", choices=["relations"])
    with_n(sp)
    return p


def _parse_index_list(text: str):
    out = []
    for chunk in text.split(","):
        chunk = chunk.strip()
        if chunk:
            out.append(int(chunk))
    return out


def _bool_text(v: bool) -> str:
    return "true" if v else "false"


def _subset_text(s) -> str:
    return "{" + ",".join(str(i) for i in sorted(s)) + "}"


def _relation_suite(n: int):
    """The defining-relation identities, checked per factor."""
    rows = []
    for i in range(1, n + 1):
        d = gen_partial(n, i)
        integ = gen_integ(n, i)
        h = gen_h(n, i)
        one = d * integ  # also the unit after the first identity holds
        rows.append((f"d{i}*int{i} = 1", d * integ == 1))
        rows.append((f"H{i}*int{i} - int{i}*H{i} = int{i}", h * integ - integ * h == integ))
        rows.append((f"H{i}*d{i} - d{i}*H{i} = -d{i}", h * d - d * h == -d))
        proj = 1 - integ * d
        rows.append((
            f"H{i}*(1-int{i}*d{i}) = (1-int{i}*d{i})*H{i} = 1-int{i}*d{i}",
            h * proj == proj and proj * h == proj,
        ))
        e00 = gen_e(n, i, 0, 0)
        rows.append((f"int{i}*d{i} = 1 - e{i}[0,0]", integ * d == 1 - e00))
    return rows


def _reorder_ideal_args(argv):
    """Move -n behind the variadic ideal positionals (argparse limitation).

    argparse matches a trailing nargs="*" positional within the first
    positional chunk, so an interleaved -n strands the arguments after it.
    """
    if "ideal" not in argv[:2]:
        return argv
    out, rest = [], []
    k = 0
    while k < len(argv):
        if argv[k] == "-n" and k + 1 < len(argv):
            out.extend(argv[k : k + 2])
            k += 2
        else:
            rest.append(argv[k])
            k += 1
    return rest + out


def run(argv) -> int:
    """Execute one command; returns the exit code."""
    parser = _build_parser()
    try:
        ns = parser.parse_args(_reorder_ideal_args(list(argv)))
    except _ArgError as exc:
        print(f"usage error: {exc}", file=sys.stderr)
        return 2
    try:
        return _dispatch(ns)
    except OperatorSyntaxError as exc:
        print(f"parse error: {exc}", file=sys.stderr)
        return 2
    except (_ArgError, ValueError) as exc:
        print(f"usage error: {exc}", file=sys.stderr)
        return 2
    except IntDiffOpError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


def _dispatch(ns) -> int:
    if ns.command == "normalize":
        print(format_operator(parse_operator(ns.expr, ns.n)))
    elif ns.command == "apply":
        a = parse_operator(ns.expr, ns.n)
        p = parse_poly(ns.poly, ns.n)
        print(format_poly(apply_n(a, p)))
    elif ns.command == "involute":
        print(format_operator(parse_operator(ns.expr, ns.n).involution()))
    elif ns.command == "grade":
        print(format_operator(parse_operator(ns.expr, ns.n).grade_component(ns.degree)))
    elif ns.command == "project":
        a = parse_operator(ns.expr, ns.n)
        print(format_operator(project_modulo_prime(a, _parse_index_list(ns.primes))))
    elif ns.command == "ideal":
        return _ideal_command(ns)
    elif ns.command == "dedekind":
        ideals = enumerate_ideals(ns.N)
        count = len(ideals)
        lower, upper = dedekind_bounds(ns.N)
        print(count)
        if not ns.machine:
            print("bounds ok" if lower <= count <= upper else "bounds violated")
        if not lower <= count <= upper:
            return 1
    elif ns.command == "divide":
        b = project_B1(to_i1(parse_operator(ns.b, 1))).to_calb1()
        c = project_B1(to_i1(parse_operator(ns.c, 1))).to_calb1()
        q, r = left_divide(b, c) if ns.left else right_divide(b, c)
        if ns.machine:
            print(q.to_text("D", "H1"))
            print(r.to_text("D", "H1"))
        else:
            print(f"q = {q.to_text('D', 'H1')}")
            print(f"r = {r.to_text('D', 'H1')}")
    elif ns.command == "check":
        rows = _relation_suite(ns.n)
        ok = True
        for name, passed in rows:
            ok = ok and passed
            if ns.machine:
                print("pass" if passed else "fail")
            else:
                print(f"{name:<55s} {'PASS' if passed else 'FAIL'}")
        if not ns.machine:
            print(f"{len(rows)} checks, {'all passed' if ok else 'FAILURES'}")
        if not ok:
            return 1
    return 0


def _ideal_command(ns) -> int:
    n = ns.n
    args = ns.args
    if ns.op in ("sum", "prod", "includes"):
        if len(args) != 2:
            raise _ArgError(f"ideal {ns.op} needs two antichain arguments")
        c1 = IdealAntichain.from_text(args[0], n)
        c2 = IdealAntichain.from_text(args[1], n)
        if ns.op == "sum":
            print(lattice.ideal_sum(c1, c2).to_text())
        elif ns.op == "prod":
            print(lattice.ideal_product(c1, c2).to_text())
        else:
            print(_bool_text(lattice.ideal_includes(c1, c2)))
    elif ns.op == "member":
        if len(args) != 2:
            raise _ArgError("ideal member needs an expression and an antichain")
        a = parse_operator(args[0], n)
        c = IdealAntichain.from_text(args[1], n)
        print(_bool_text(ideal_membership(a, c)))
    elif ns.op == "minprimes":
        if len(args) != 1:
            raise _ArgError("ideal minprimes needs one antichain argument")
        c = IdealAntichain.from_text(args[0], n)
        for s in sorted(lattice.minimal_primes_over(c), key=lambda s: sorted(s)):
            print(_subset_text(s))
    elif ns.op == "isprime":
        if len(args) != 1:
            raise _ArgError("ideal isprime needs one antichain argument")
        c = IdealAntichain.from_text(args[0], n)
        print(_bool_text(lattice.is_prime(c)))
    return 0


def main():
    sys.exit(run(sys.argv[1:]))


if __name__ == "__main__":
    main()
