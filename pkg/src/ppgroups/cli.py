"""Command-line front end (``ppgroups`` / ``python3 -m ppgroups``).

Exit status: 0 on success, 1 when the input is well-formed but mathematically
invalid, 2 on usage errors.
"""

from __future__ import annotations

import argparse
import sys
from concurrent.futures import ProcessPoolExecutor
from fractions import Fraction
from pathlib import Path

from . import hstep
from .errors import DomainError, WordSyntaxError
from .group import (Group, Subgroup, abelianize, equal_words, member, parse, realize,
                    relation_instances, standardize)
from .numeric import QuadExt, format_quad, parse_quad
from .piecewise import PiecewisePP, compose, parse_text, to_text
from .symdyn import EvpSeq, run_word

MAP_SYNTAX = """\
map expressions are terms joined by '*', composed as functions (rightmost acts first):
  translate:C        t -> t + C
  gamma:R[:N]        gamma step (R > 0), shifted by N
  lambda:R[:N]       lambda step (R < 0), shifted by N
  step_right:R:P     translation by R right of P
  step_left:R:P      translation by R left of P
  file:PATH          a map in the piecewise text format
  word:WORD          realization of a group word (a bare word also works)"""


def _word(text: str, group: str = "g"):
    return parse(text, Group(group))


def parse_map(expr: str) -> PiecewisePP:
    result = PiecewisePP.identity()
    for term in expr.split("*"):
        result = compose(result, _parse_term(term.strip()))
    return result


def _parse_term(term: str) -> PiecewisePP:
    head, _, rest = term.partition(":")
    args = rest.split(":") if rest else []
    if head == "translate" and len(args) == 1:
        return PiecewisePP.translation(Fraction(args[0]))
    if head in ("gamma", "lambda") and len(args) in (1, 2):
        n = int(args[1]) if len(args) == 2 else 0
        build = hstep.gamma_n if head == "gamma" else hstep.lambda_n
        return build(n, Fraction(args[0])).map
    if head in ("step_right", "step_left") and len(args) == 2:
        build = hstep.step_right if head == "step_right" else hstep.step_left
        return build(Fraction(args[0]), Fraction(args[1]))
    if head == "file" and rest:
        return parse_text(Path(rest).read_text())
    if head == "word":
        return realize(parse(rest))
    return realize(parse(term))


# -- subcommands ----------------------------------------------------------

def cmd_normalize(args):
    sf = standardize(_word(args.word, args.group))
    print(str(sf) or "1")


def cmd_eval_seq(args):
    # keep at least as many preperiod letters as the input spelled out
    written = args.seq.strip().partition("(")[0]
    out = run_word(_word(args.word).letters, EvpSeq.parse(args.seq))
    print(out.render(len(written)))


def cmd_eval_real(args):
    print(format_quad(realize(_word(args.word))(parse_quad(args.point))))


def cmd_realize(args):
    print(to_text(realize(_word(args.word))))


def cmd_abelianize(args):
    print(abelianize(_word(args.word, args.group), Group(args.group)))


def cmd_member(args):
    print("true" if member(_word(args.word, args.group), Subgroup(args.subgroup)) else "false")


def _check_instance(item):
    rid, s, t, lhs, rhs = item
    ok = equal_words(lhs, rhs)
    abel = all(abelianize(lhs, g) == abelianize(rhs, g) for g in _tables_for(lhs, rhs))
    return rid, s, t, ok, abel


def _tables_for(lhs, rhs):
    tables = [Group.G]
    if lhs.is_g0_word and rhs.is_g0_word:
        tables.append(Group.G0)
    return tables


def cmd_relcheck(args):
    items = list(relation_instances(args.max_depth))
    if args.jobs > 1:
        with ProcessPoolExecutor(args.jobs) as pool:
            results = list(pool.map(_check_instance, items, chunksize=64))
    else:
        results = [_check_instance(item) for item in items]
    failures = [(rid, s, t) for rid, s, t, ok, abel in results if not (ok and abel)]
    for rid, s, t in failures:
        print(f"FAIL relation ({rid}) s={s or '-'} t={'-' if t is None else t or '-'}")
    print(f"{len(results)} instances up to depth {args.max_depth}: "
          + ("all instances pass" if not failures else f"{len(failures)} failed"))
    return 1 if failures else 0


def cmd_hstep(args):
    if args.construction == "gamma":
        print(to_text(hstep.gamma_n(args.n, Fraction(args.r)).map))
    elif args.construction == "lambda":
        print(to_text(hstep.lambda_n(args.n, Fraction(args.r)).map))
    elif args.construction == "step":
        build = hstep.step_right if args.side == "right" else hstep.step_left
        print(to_text(build(Fraction(args.r), Fraction(args.p))))
    else:
        rec = hstep.compactify_commutator(parse_map(args.f), parse_map(args.g))
        print(f"# [r, s] = [{rec.r}, {rec.s}], gluing width {rec.width}; identities verified")
        for name in ("h1", "h2", "k1", "k2", "s1", "s2", "t1", "t2"):
            print(f"## {name}")
            print(to_text(getattr(rec, name)))


def _grid(lo: Fraction, hi: Fraction, n: int):
    if n < 2:
        return [lo]
    return [lo + (hi - lo) * Fraction(i, n - 1) for i in range(n)]


def cmd_plot(args):
    f = parse_map(args.map)
    lo, hi = Fraction(args.range[0]), Fraction(args.range[1])
    if not lo < hi:
        raise argparse.ArgumentTypeError("--range needs LO < HI")
    samples = [(t, f(QuadExt(t))) for t in _grid(lo, hi, args.samples)]
    if args.format == "csv":
        print("t_exact,t_decimal,f_exact,f_decimal")
        for t, v in samples:
            print(f"{t},{float(t):.12g},{format_quad(v)},{v.to_decimal()}")
    else:
        print(_svg(samples))


def _svg(samples, size: int = 400) -> str:
    xs = [float(t) for t, _ in samples]
    ys = [float(v) for _, v in samples]
    x0, x1 = min(xs), max(xs)
    y0, y1 = min(ys), max(ys)
    sx = (size - 20) / ((x1 - x0) or 1)
    sy = (size - 20) / ((y1 - y0) or 1)
    pts = " ".join(f"{10 + (x - x0) * sx:.3f},{size - 10 - (y - y0) * sy:.3f}"
                   for x, y in zip(xs, ys))
    return (f'<svg xmlns="http://www.w3.org/2000/svg" width="{size}" height="{size}" '
            f'viewBox="0 0 {size} {size}">\n'
            f'  <polyline fill="none" stroke="black" stroke-width="1.5" points="{pts}"/>\n'
            f'</svg>')


# -- argument parsing -----------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="ppgroups", description=__doc__.splitlines()[0],
                                epilog=MAP_SYNTAX,
                                formatter_class=argparse.RawDescriptionHelpFormatter)
    sub = p.add_subparsers(dest="command", required=True)

    def group_flag(sp, default="g"):
        sp.add_argument("--group", choices=["g0", "g"], default=default,
                        help="group the word lives in (default: %(default)s)")

    sp = sub.add_parser("normalize", help="standard form of a word")
    sp.add_argument("word")
    group_flag(sp)
    sp.set_defaults(func=cmd_normalize)

    sp = sub.add_parser("eval-seq", help="act on an eventually periodic sequence")
    sp.add_argument("word")
    sp.add_argument("seq", help="e.g. 10(01)")
    sp.set_defaults(func=cmd_eval_seq)

    sp = sub.add_parser("eval-real", help="act on a real number")
    sp.add_argument("word")
    sp.add_argument("point", help="e.g. 3/2, 1+sqrt(5), inf")
    sp.set_defaults(func=cmd_eval_real)

    sp = sub.add_parser("realize", help="piecewise projective map of a word")
    sp.add_argument("word")
    sp.set_defaults(func=cmd_realize)

    sp = sub.add_parser("abelianize", help="image in Z^3")
    sp.add_argument("word")
    group_flag(sp)
    sp.set_defaults(func=cmd_abelianize)

    sp = sub.add_parser("member", help="subgroup membership")
    sp.add_argument("word")
    sp.add_argument("subgroup", choices=[s.value for s in Subgroup])
    group_flag(sp)
    sp.set_defaults(func=cmd_member)

    sp = sub.add_parser("relcheck", help="verify every relation instance up to a depth")
    sp.add_argument("--max-depth", type=int, default=3)
    sp.add_argument("--jobs", type=int, default=1)
    sp.set_defaults(func=cmd_relcheck)

    sp = sub.add_parser("hstep", help="step maps and commutator compactification")
    hs = sp.add_subparsers(dest="construction", required=True)
    for name in ("gamma", "lambda"):
        c = hs.add_parser(name)
        c.add_argument("r")
        c.add_argument("--n", type=int, default=0, help="shift by t -> t + n")
    c = hs.add_parser("step")
    c.add_argument("side", choices=["right", "left"])
    c.add_argument("r")
    c.add_argument("p")
    c = hs.add_parser("compactify", epilog=MAP_SYNTAX,
                      formatter_class=argparse.RawDescriptionHelpFormatter)
    c.add_argument("f", help="map expression")
    c.add_argument("g", help="map expression")
    sp.set_defaults(func=cmd_hstep)

    sp = sub.add_parser("plot", help="sample a map on an exact grid", epilog=MAP_SYNTAX,
                        formatter_class=argparse.RawDescriptionHelpFormatter)
    sp.add_argument("map", help="map expression")
    sp.add_argument("--range", nargs=2, metavar=("LO", "HI"), default=["-4", "4"])
    sp.add_argument("--samples", type=int, default=81)
    sp.add_argument("--format", choices=["csv", "svg"], default="csv")
    sp.set_defaults(func=cmd_plot)
    return p


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args) or 0
    except WordSyntaxError as exc:
        print(f"ppgroups: syntax error: {exc}", file=sys.stderr)
        return 2
    except DomainError as exc:
        print(f"ppgroups: {exc}", file=sys.stderr)
        return 1
    except (ValueError, ZeroDivisionError, OSError, argparse.ArgumentTypeError) as exc:
        print(f"ppgroups: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
