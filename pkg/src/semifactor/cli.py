"""``semifactor`` command line: parse a command, run an engine, print a report.

Exit codes: 0 success, 2 parse or usage error, 3 domain error, 4 capacity error.
"""

from __future__ import annotations

import argparse
import sys

from . import monoid_semiring as ms
from . import nq, puiseux
from .errors import CapacityError, DomainError, ParseError
from .invariants import elasticity_family, elasticity_of_lengths, factorization_report
from .numbers import parse_rational
from .poly import parse_laurent, parse_poly
from .report import emit_report
from .semidomain import Ring, atoms_dividing, enumerate_divisors, enumerate_factorizations, is_atom, is_unit
from .zx_factor import DEFAULT_KRONECKER_CAP

EXIT_OK, EXIT_PARSE, EXIT_DOMAIN, EXIT_CAPACITY = 0, 2, 3, 4


# -- handlers -----------------------------------------------------------------


def _element(args):
    ring = Ring.parse(args.ring)
    if ring is Ring.NN_LAURENT:
        return ring, parse_laurent(args.element, deg_cap=max(args.deg_cap, 64))
    return ring, parse_poly(args.element, deg_cap=max(args.deg_cap, 64))


def cmd_factor(args):
    ring, f = _element(args)
    return factorization_report(ring, f, args.deg_cap)


def cmd_divisors(args):
    ring, f = _element(args)
    divs = enumerate_divisors(ring, f, args.deg_cap)
    return {"ring": ring, "input": f, "divisor_count": len(divs), "divisors": divs}


def cmd_atom(args):
    ring, f = _element(args)
    return {
        "ring": ring,
        "input": f,
        "is_unit": is_unit(ring, f),
        "is_atom": is_atom(ring, f, args.deg_cap),
        "atoms_dividing": atoms_dividing(ring, f, args.deg_cap),
    }


def cmd_lengths(args):
    ring, f = _element(args)
    zs = enumerate_factorizations(ring, f, args.deg_cap)
    return {"ring": ring, "input": f, "lengths": sorted({z.length for z in zs}), "complete": True}


def cmd_elasticity(args):
    ring, f = _element(args)
    lengths = sorted({z.length for z in enumerate_factorizations(ring, f, args.deg_cap)})
    return {"ring": ring, "input": f, "lengths": lengths, "elasticity": elasticity_of_lengths(lengths)}


def cmd_family(args):
    return elasticity_family(args.n, args.k, args.deg_cap)


def _pparams(args):
    return puiseux.PuiseuxParams(parse_rational(args.r))


def _pel(params, text, args):
    return puiseux.element(params, parse_rational(text), args.depth_cap)


def cmd_puiseux(args):
    p = _pparams(args)
    head = {"r": p.r, "n": p.n, "d": p.d, "op": args.op}
    if args.op == "member":
        q = parse_rational(args.q)
        e = puiseux.is_member(p, q, args.depth_cap)
        return head | {"input": q, "member": e is not None, "canonical": e}
    if args.op == "divides":
        a, b = _pel(p, args.a, args), _pel(p, args.b, args)
        ok = puiseux.divides(p, a, b, args.depth_cap)
        quo = puiseux.element(p, b.value - a.value, args.depth_cap) if ok else None
        return head | {"a": a, "b": b, "divides": ok, "quotient": quo}
    if args.op == "atom":
        e = _pel(p, args.q, args)
        power = e.depth if sum(e.coeffs) == 1 and e.coeffs[-1] == 1 else None
        # digit sum >= 2 splits e into two nonzero members; r^m is checked from its divisors
        atom = power is not None and puiseux.atom_test(p, power)
        return head | {"input": e, "is_atom": atom, "power": power}
    if args.op == "mcd":
        els = [_pel(p, t, args) for t in args.elements]
        res = puiseux.mcd(p, *els, depth_cap=args.depth_cap)
        return head | {
            "inputs": els,
            "mcd": res.value,
            "remainders": list(res.remainders),
            "distinguished_remainder": res.distinguished,
            "candidates_checked": res.candidates_checked,
        }
    if args.op == "chain":
        w = puiseux.accp_chain(p, args.depth)
        return head | {
            "depth": args.depth,
            "elements": list(w.elements),
            "gaps": list(w.gaps),
            "verified": w.verify(),
        }
    raise DomainError(f"unknown puiseux operation {args.op}")


def cmd_esemiring(args):
    p = _pparams(args)
    head = {"r": p.r, "op": args.op}
    if args.op == "mul":
        a, b = ms.parse_ms(p, args.a), ms.parse_ms(p, args.b)
        return head | {"a": a, "b": b, "product": ms.ms_mul(a, b)}
    if args.op == "divides":
        a, b = ms.parse_ms(p, args.a), ms.parse_ms(p, args.b)
        q = ms.ms_divides(a, b)
        return head | {"a": a, "b": b, "divides": q is not None, "quotient": q}
    f = ms.parse_ms(p, args.f)
    if args.op == "decompose":
        d, s, g = ms.ms_normal_decomposition(f, args.depth_cap)
        return head | {"input": f, "content": d, "exponent": s, "g": g}
    if args.op == "factor":
        zs, complete = ms.ms_factorizations(f, budget=args.budget, depth_cap=args.depth_cap)
        lengths = sorted({z.length for z in zs})
        # with an incomplete list the ratio only bounds the true elasticity from below
        rho_key = "elasticity" if complete else "elasticity_lower_bound"
        return head | {
            "input": f,
            "factorizations": zs,
            "lengths": lengths,
            rho_key: elasticity_of_lengths(lengths),
            "complete": complete,
        }
    raise DomainError(f"unknown esemiring operation {args.op}")


def cmd_nq(args):
    p = nq.NQParams(args.k)
    q = parse_rational(args.q)
    head = {"k": p.k, "op": args.op, "input": q}
    if args.op == "member":
        return head | {"member": nq.nq_is_member(p, q)}
    if args.op == "atom":
        return head | {"is_atom": nq.nq_is_atom(p, q)}
    if args.op == "sample":
        s = nq.nq_factorization_sample(p, q, args.count)
        return head | {"count": args.count, "is_atom": s.is_atom, "factorizations": [list(z) for z in s.factorizations]}
    if args.op == "lengths":
        lengths = nq.nq_length_set_bounded(p, q, args.max_len)
        return head | {
            "lengths": lengths,
            "elasticity_lower_bound": elasticity_of_lengths(lengths) if lengths else None,
            "partial": True,
        }
    raise DomainError(f"unknown nq operation {args.op}")


# -- parser -------------------------------------------------------------------


def _flags() -> argparse.ArgumentParser:
    # defaults are SUPPRESS so a flag given at any level is kept
    f = argparse.ArgumentParser(add_help=False)
    S = argparse.SUPPRESS
    f.add_argument("--json", action="store_true", default=S, help="emit JSON instead of text")
    f.add_argument("--deg-cap", type=int, default=S, help="largest degree handed to the factorizer (16)")
    f.add_argument("--depth-cap", type=int, default=S, help="largest Puiseux depth (64)")
    f.add_argument("--budget", type=int, default=S, help="factorization enumeration budget (10000)")
    f.add_argument("--count", type=int, default=S, help="sample size for nq sample (10)")
    return f


DEFAULTS = {
    "json": False,
    "deg_cap": DEFAULT_KRONECKER_CAP,
    "depth_cap": puiseux.DEFAULT_DEPTH_CAP,
    "budget": 10_000,
    "count": 10,
}


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        raise ParseError(message)


def build_parser() -> argparse.ArgumentParser:
    flags = _flags()
    top = _Parser(prog="semifactor", description="Factorization invariants in concrete semidomains.", parents=[flags])
    sub = top.add_subparsers(dest="verb", required=True, parser_class=_Parser)

    handlers = {
        "factor": (cmd_factor, "divisors, atoms, all factorizations, lengths and elasticity"),
        "divisors": (cmd_divisors, "all divisors up to associates"),
        "atom": (cmd_atom, "atom test"),
        "lengths": (cmd_lengths, "set of factorization lengths"),
        "elasticity": (cmd_elasticity, "max length / min length"),
    }
    for verb, (fn, help_) in handlers.items():
        sp = sub.add_parser(verb, help=help_, parents=[flags])
        sp.add_argument("--ring", default="nn-poly", choices=[r.value for r in Ring])
        sp.add_argument("element", help="polynomial such as 'x^2 + 3x + 2'")
        sp.set_defaults(func=fn)

    sp = sub.add_parser("family", help="the two-factorization family (x+n)^n (x^2-x+1) (x+1)^k", parents=[flags])
    sp.add_argument("--n", type=int, required=True)
    sp.add_argument("--k", type=int, required=True)
    sp.set_defaults(func=cmd_family)

    sp = sub.add_parser("puiseux", help="the monoid generated by powers of r", parents=[flags])
    sp.add_argument("--r", required=True, help="rational 0 < r < 1 as p/q")
    ops = sp.add_subparsers(dest="op", required=True, parser_class=_Parser)
    o = ops.add_parser("member", parents=[flags])
    o.add_argument("q")
    o = ops.add_parser("divides", parents=[flags])
    o.add_argument("a")
    o.add_argument("b")
    o = ops.add_parser("atom", parents=[flags])
    o.add_argument("q")
    o = ops.add_parser("mcd", parents=[flags])
    o.add_argument("elements", nargs="+")
    o = ops.add_parser("chain", parents=[flags])
    o.add_argument("--depth", type=int, default=5)
    sp.set_defaults(func=cmd_puiseux)

    sp = sub.add_parser("esemiring", help="the monoid semiring over that monoid", parents=[flags])
    sp.add_argument("--r", required=True)
    ops = sp.add_subparsers(dest="op", required=True, parser_class=_Parser)
    for name in ("mul", "divides"):
        o = ops.add_parser(name, parents=[flags])
        o.add_argument("a")
        o.add_argument("b")
    for name in ("decompose", "factor"):
        o = ops.add_parser(name, parents=[flags])
        o.add_argument("f", help="element such as '1 + 2*e(2/3)'")
    sp.set_defaults(func=cmd_esemiring)

    sp = sub.add_parser("nq", help="the semiring of naturals together with rationals >= k", parents=[flags])
    sp.add_argument("--k", type=int, required=True)
    ops = sp.add_subparsers(dest="op", required=True, parser_class=_Parser)
    for name in ("member", "atom", "sample", "lengths"):
        o = ops.add_parser(name, parents=[flags])
        o.add_argument("q")
        if name == "lengths":
            o.add_argument("--max-len", type=int, default=32)
    sp.set_defaults(func=cmd_nq)
    return top


def run_command(argv: list[str], out=None, err=None) -> int:
    """Run one command; the report goes to ``out`` and diagnostics to ``err``."""
    out = out if out is not None else sys.stdout
    err = err if err is not None else sys.stderr
    try:
        args = build_parser().parse_args(argv)
    except ParseError as e:
        print(f"semifactor: error: {e}", file=err)
        return EXIT_PARSE
    except SystemExit as e:  # --help
        return EXIT_OK if not e.code else EXIT_PARSE
    for key, value in DEFAULTS.items():
        if not hasattr(args, key):
            setattr(args, key, value)
    try:
        report = args.func(args)
    except ParseError as e:
        print(f"semifactor: parse error: {e}", file=err)
        return EXIT_PARSE
    except CapacityError as e:
        print(f"semifactor: capacity exceeded: {e}", file=err)
        return EXIT_CAPACITY
    except DomainError as e:
        print(f"semifactor: domain error: {e}", file=err)
        return EXIT_DOMAIN
    out.write(emit_report(report, "json" if args.json else "text"))
    return EXIT_OK


def main(argv=None) -> int:
    return run_command(sys.argv[1:] if argv is None else argv)


if __name__ == "__main__":
    sys.exit(main())
