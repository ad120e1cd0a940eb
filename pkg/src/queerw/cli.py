"""Command-line surface: expression parser, compute commands, suite runner.

Expression grammar (whitespace-insensitive)::

    expr   := term (('+'|'-') term)*
    term   := factor ('*' factor)*
    factor := '-' factor | power
    power  := atom ('^' INT)?
    atom   := NUMBER | NAME | NAME '(' expr (',' expr)* ')' | '(' expr ')'
    NUMBER := INT ('/' INT)?

Atoms cover rational literals, generators (e(i,j) / f(i,j) for q(n), bare
names for the fixed presets), the constructors sergeev_e(i,j,m),
sergeev_f(i,j,m), central(m) and phi(k), the unary maps pi(.), theta(.) and
top(.), and bracket(a,b) for the supercommutator.  Parse errors carry line
and column.

Structured report output is logfmt: one line per check with the fields
suite, check, status, anchor, detail; values are double-quoted whenever they
contain spaces, with backslash escapes for quotes and backslashes.  The
field separator is a single space (no tabs, no separator commas).
"""

from __future__ import annotations

import argparse
import sys
from dataclasses import dataclass
from fractions import Fraction

from .cartan import CartanElement, char_poly, h_commutator, h_multiply, \
    poly_render, render_cartan, t_matrix
from .core import GeneratorId, PRESETS, build_preset, gen_e, gen_f
from .pbw import Element, multiply, render_element, supercommutator
from .sergeev import sergeev_cache
from .verify import SUITE_NAMES, run_suite
from .whittaker import whittaker_data


class ParseError(ValueError):
    def __init__(self, message, line, col):
        super().__init__(f"{message} (line {line}, column {col})")
        self.line = line
        self.col = col


# -- AST ---------------------------------------------------------------------

@dataclass(frozen=True)
class Num:
    value: Fraction


@dataclass(frozen=True)
class Name:
    ident: str


@dataclass(frozen=True)
class Call:
    func: str
    args: tuple


@dataclass(frozen=True)
class BinOp:
    op: str
    left: object
    right: object


@dataclass(frozen=True)
class Pow:
    base: object
    exponent: int


@dataclass(frozen=True)
class Neg:
    child: object


_SYMBOLS = "+-*/^(),"


def _tokenize(src):
    tokens = []
    line, col = 1, 1
    i = 0
    while i < len(src):
        ch = src[i]
        if ch == "\n":
            line += 1
            col = 1
            i += 1
            continue
        if ch.isspace():
            col += 1
            i += 1
            continue
        if ch.isdigit():
            j = i
            while j < len(src) and src[j].isdigit():
                j += 1
            tokens.append(("INT", src[i:j], line, col))
            col += j - i
            i = j
            continue
        if ch.isalpha() or ch == "_":
            j = i
            while j < len(src) and (src[j].isalnum() or src[j] == "_"):
                j += 1
            tokens.append(("NAME", src[i:j], line, col))
            col += j - i
            i = j
            continue
        if ch in _SYMBOLS:
            tokens.append((ch, ch, line, col))
            col += 1
            i += 1
            continue
        raise ParseError(f"unexpected character {ch!r}", line, col)
    tokens.append(("EOF", "", line, col))
    return tokens


_GEN_FUNCS = {"e": 2, "f": 2}
_CONSTRUCTORS = {"sergeev_e": 3, "sergeev_f": 3, "central": 1, "phi": 1}
_UNARY = ("pi", "theta", "top")


class _Parser:
    def __init__(self, tokens, n, preset):
        self.tokens = tokens
        self.k = 0
        self.n = n
        self.preset = preset
        self.named_gens = () if preset == "q" else tuple(
            g.family for g in build_preset(preset).generators)

    def peek(self):
        return self.tokens[self.k]

    def next(self):
        tok = self.tokens[self.k]
        self.k += 1
        return tok

    def expect(self, kind):
        tok = self.next()
        if tok[0] != kind:
            raise ParseError(f"expected {kind!r}, found {tok[1]!r}",
                             tok[2], tok[3])
        return tok

    def fail(self, message):
        tok = self.peek()
        raise ParseError(message, tok[2], tok[3])

    def parse(self):
        node = self.expr()
        tok = self.peek()
        if tok[0] != "EOF":
            self.fail(f"unexpected trailing input {tok[1]!r}")
        return node

    def expr(self):
        node = self.term()
        while self.peek()[0] in ("+", "-"):
            op = self.next()[0]
            node = BinOp(op, node, self.term())
        return node

    def term(self):
        node = self.factor()
        while self.peek()[0] == "*":
            self.next()
            node = BinOp("*", node, self.factor())
        return node

    def factor(self):
        if self.peek()[0] == "-":
            self.next()
            return Neg(self.factor())
        return self.power()

    def power(self):
        node = self.atom()
        if self.peek()[0] == "^":
            self.next()
            tok = self.expect("INT")
            exponent = int(tok[1])
            return Pow(node, exponent)
        return node

    def atom(self):
        tok = self.peek()
        if tok[0] == "INT":
            self.next()
            num = int(tok[1])
            if self.peek()[0] == "/":
                self.next()
                den_tok = self.expect("INT")
                den = int(den_tok[1])
                if den == 0:
                    raise ParseError("zero denominator", den_tok[2], den_tok[3])
                return Num(Fraction(num, den))
            return Num(Fraction(num))
        if tok[0] == "(":
            self.next()
            node = self.expr()
            self.expect(")")
            return node
        if tok[0] == "NAME":
            self.next()
            name = tok[1]
            if self.peek()[0] == "(":
                return self.call(name, tok)
            if self.preset != "q" and name in self.named_gens:
                return Name(name)
            raise ParseError(f"unknown identifier {name!r}", tok[2], tok[3])
        self.fail(f"unexpected token {tok[1]!r}")

    def call(self, name, tok):
        self.expect("(")
        args = [self.expr()]
        while self.peek()[0] == ",":
            self.next()
            args.append(self.expr())
        self.expect(")")
        args = tuple(args)
        line, col = tok[2], tok[3]
        if name in _GEN_FUNCS or name in _CONSTRUCTORS:
            want = _GEN_FUNCS.get(name, _CONSTRUCTORS.get(name))
            if len(args) != want:
                raise ParseError(f"{name} takes {want} arguments", line, col)
            values = []
            for a in args:
                if not isinstance(a, Num) or a.value.denominator != 1:
                    raise ParseError(f"{name} takes integer arguments",
                                     line, col)
                values.append(int(a.value))
            if self.preset != "q":
                raise ParseError(f"{name} requires the q preset", line, col)
            if name in ("e", "f") or name.startswith("sergeev"):
                i, j = values[0], values[1]
                if not (1 <= i <= self.n and 1 <= j <= self.n):
                    raise ParseError(
                        f"index ({i},{j}) out of range for n={self.n}",
                        line, col)
            if name.startswith("sergeev") and values[2] < 1:
                raise ParseError("level must be >= 1", line, col)
            if name == "central" and values[0] < 0:
                raise ParseError("central index must be >= 0", line, col)
            if name == "phi" and values[0] < 0:
                raise ParseError("phi index must be >= 0", line, col)
            return Call(name, tuple(Num(Fraction(v)) for v in values))
        if name in _UNARY:
            if len(args) != 1:
                raise ParseError(f"{name} takes one argument", line, col)
            return Call(name, args)
        if name == "bracket":
            if len(args) != 2:
                raise ParseError("bracket takes two arguments", line, col)
            return Call(name, args)
        raise ParseError(f"unknown function {name!r}", line, col)


def parse_expression(src, n, preset="q"):
    """Parse an expression against the active preset and rank."""
    if not src or not src.strip():
        raise ParseError("empty expression", 1, 1)
    return _Parser(_tokenize(src), n, preset).parse()


def render_expression(node):
    """Valid source text for an AST; reparses to an equal tree."""
    if isinstance(node, Num):
        return str(node.value)
    if isinstance(node, Name):
        return node.ident
    if isinstance(node, Call):
        return f"{node.func}({', '.join(render_expression(a) for a in node.args)})"
    if isinstance(node, Neg):
        return f"-{render_expression(node.child)}"
    if isinstance(node, Pow):
        return f"{render_expression(node.base)}^{node.exponent}"
    if isinstance(node, BinOp):
        left = render_expression(node.left)
        right = render_expression(node.right)
        if node.op == "*":
            if isinstance(node.left, BinOp) and node.left.op in "+-":
                left = f"({left})"
            if isinstance(node.right, BinOp) and node.right.op in "+-":
                right = f"({right})"
        elif isinstance(node.right, BinOp) and node.right.op in "+-":
            right = f"({right})"
        return f"{left} {node.op} {right}"
    raise TypeError(f"not an expression node: {node!r}")


# -- evaluation ----------------------------------------------------------------

class EvalError(ValueError):
    pass


def _as_element(value, ctx):
    if isinstance(value, Fraction):
        return ctx.scalar(value)
    return value


def _as_cartan(value, n):
    if isinstance(value, Fraction):
        return CartanElement.scalar(n, value)
    return value


def evaluate(node, ctx):
    """Evaluate an AST to a Fraction, Element or CartanElement.

    pi maps into the reduction quotient; * is the plain product of
    representatives in U(g), so re-apply pi to land back in the quotient.
    """
    n = ctx.algebra.n
    if isinstance(node, Num):
        return node.value
    if isinstance(node, Name):
        return ctx.generator(GeneratorId(node.ident))
    if isinstance(node, Neg):
        value = evaluate(node.child, ctx)
        return -value
    if isinstance(node, Pow):
        base = evaluate(node.base, ctx)
        if isinstance(base, Fraction):
            return base ** node.exponent
        if isinstance(base, Element):
            out = ctx.one()
            for _ in range(node.exponent):
                out = multiply(out, base)
            return out
        out = CartanElement.one(n)
        for _ in range(node.exponent):
            out = h_multiply(out, base)
        return out
    if isinstance(node, BinOp):
        left = evaluate(node.left, ctx)
        right = evaluate(node.right, ctx)
        return _combine(node.op, left, right, ctx)
    if isinstance(node, Call):
        return _call(node, ctx)
    raise TypeError(f"not an expression node: {node!r}")


def _combine(op, left, right, ctx):
    n = ctx.algebra.n
    if isinstance(left, Fraction) and isinstance(right, Fraction):
        return {"+": left + right, "-": left - right, "*": left * right}[op]
    if isinstance(left, CartanElement) or isinstance(right, CartanElement):
        if isinstance(left, Element) or isinstance(right, Element):
            raise EvalError("cannot mix enveloping-algebra and Cartan values")
        lc, rc = _as_cartan(left, n), _as_cartan(right, n)
        if op == "+":
            return lc + rc
        if op == "-":
            return lc - rc
        return h_multiply(lc, rc)
    le, re = _as_element(left, ctx), _as_element(right, ctx)
    if op == "+":
        return le + re
    if op == "-":
        return le - re
    return multiply(le, re)


def _call(node, ctx):
    name = node.func
    n = ctx.algebra.n
    if name in ("e", "f"):
        i, j = (int(a.value) for a in node.args)
        return ctx.generator(gen_e(i, j) if name == "e" else gen_f(i, j))
    if name in ("sergeev_e", "sergeev_f"):
        i, j, m = (int(a.value) for a in node.args)
        return sergeev_cache(ctx).raw(name[-1], i, j, m)
    if name == "central":
        m = int(node.args[0].value)
        return sergeev_cache(ctx).central_raw(m)
    if name == "phi":
        k = int(node.args[0].value)
        return ctx.phi_generators(k + 1)[k]
    if name == "pi":
        value = evaluate(node.args[0], ctx)
        if isinstance(value, CartanElement):
            raise EvalError("pi applies to enveloping-algebra values")
        return ctx.reduce(_as_element(value, ctx))
    if name == "theta":
        value = evaluate(node.args[0], ctx)
        if isinstance(value, CartanElement):
            raise EvalError("theta applies to enveloping-algebra values")
        return ctx.theta(_as_element(value, ctx))
    if name == "top":
        value = evaluate(node.args[0], ctx)
        if isinstance(value, CartanElement) or isinstance(value, Fraction):
            raise EvalError("top applies to enveloping-algebra elements")
        return ctx.top_symbol(value)
    if name == "bracket":
        left = evaluate(node.args[0], ctx)
        right = evaluate(node.args[1], ctx)
        if isinstance(left, Fraction) and isinstance(right, Fraction):
            return Fraction(0)
        if isinstance(left, CartanElement) or isinstance(right, CartanElement):
            if isinstance(left, Element) or isinstance(right, Element):
                raise EvalError("cannot mix enveloping-algebra and Cartan values")
            return h_commutator(_as_cartan(left, n), _as_cartan(right, n))
        return supercommutator(_as_element(left, ctx), _as_element(right, ctx))
    raise EvalError(f"unknown function {name!r}")


def render_value(value):
    if isinstance(value, Fraction):
        return str(value)
    if isinstance(value, Element):
        return render_element(value)
    return render_cartan(value)


# -- report rendering ------------------------------------------------------------

def _logfmt_escape(value):
    text = str(value)
    if text == "":
        return '""'
    if any(c in text for c in ' "\\='):
        text = text.replace("\\", "\\\\").replace('"', '\\"')
        return f'"{text}"'
    return text


def render_report_structured(report):
    lines = []
    for chk in report.checks:
        fields = (("suite", report.suite), ("check", chk.name),
                  ("status", chk.status), ("anchor", chk.anchor),
                  ("detail", chk.detail))
        lines.append(" ".join(f"{k}={_logfmt_escape(v)}" for k, v in fields))
    return "\n".join(lines)


def render_report_text(report):
    counts = report.counts()
    head = (f"suite {report.suite} "
            f"[{'PASS' if report.passed else 'FAIL'}] "
            f"pass={counts['pass']} fail={counts['fail']} "
            f"skip={counts['skip']} time={report.wall_time:.2f}s")
    lines = [head]
    for chk in report.checks:
        mark = {"pass": "ok  ", "fail": "FAIL", "skip": "skip"}[chk.status]
        line = f"  [{mark}] {chk.name}"
        if chk.status != "pass" and chk.detail:
            line += f": {chk.detail}"
        lines.append(line)
    return "\n".join(lines)


# -- dispatch ----------------------------------------------------------------------

def _build_arg_parser():
    parser = argparse.ArgumentParser(
        prog="queerw",
        description="exact computations in finite W-algebras of q(n)")
    sub = parser.add_subparsers(dest="command", required=True)

    def add_common(p, with_preset=True):
        p.add_argument("--n", type=int, default=2,
                       help="rank of the q preset (default 2)")
        if with_preset:
            p.add_argument("--preset", choices=PRESETS, default="q")

    p_info = sub.add_parser("algebra", help="inspect a preset algebra")
    p_info.add_argument("action", choices=["info"])
    add_common(p_info)

    p_compute = sub.add_parser("compute", help="evaluate an expression")
    p_compute.add_argument("expression")
    add_common(p_compute)

    p_verify = sub.add_parser("verify", help="run verification suites")
    p_verify.add_argument("suite", help="suite name or 'all'")
    add_common(p_verify, with_preset=False)
    p_verify.add_argument("--seed", type=int, default=0)
    p_verify.add_argument("--samples", type=int, default=100)
    p_verify.add_argument("--max-level", type=int, default=None)
    p_verify.add_argument("--max-degree", type=int, default=None)
    p_verify.add_argument("--format", choices=["text", "structured"],
                          default="text")

    p_char = sub.add_parser("charpoly",
                            help="characteristic polynomial of the skew table")
    p_char.add_argument("--n", type=int, default=2)

    p_yang = sub.add_parser("yangian", help="run the level-relation suite")
    p_yang.add_argument("--n", type=int, default=2)
    p_yang.add_argument("--max-level", type=int, default=None)
    p_yang.add_argument("--format", choices=["text", "structured"],
                        default="text")
    return parser


_CTX_BY_KEY = {}


def _context(preset, n):
    key = (preset, n if preset == "q" else None)
    if key not in _CTX_BY_KEY:
        algebra = build_preset(preset, n if preset == "q" else None)
        _CTX_BY_KEY[key] = whittaker_data(algebra)
    return _CTX_BY_KEY[key]


def _cmd_algebra(args, out):
    spec = build_preset(args.preset, args.n if args.preset == "q" else None)
    ctx = _context(args.preset, args.n)
    even = sum(1 for g in spec.generators if spec.parity_of(g) == 0)
    odd = len(spec.generators) - even
    out.write(f"preset {spec.name}" +
              (f" n={spec.n}" if spec.name == "q" else "") +
              f" dim=({even}|{odd})\n")
    out.write("generator  parity  dynkin  weight  kazhdan  block\n")
    m_set = set(ctx.m_generators)
    nil_set = set(ctx.nilradical)
    for g in ctx.order.gens:
        d, w, k, p = spec.grading(g)
        block = "m" if g in m_set else ("n" if g in nil_set else "h/l")
        out.write(f"{g!r:<10} {'odd' if p else 'even':<7} {d:<7} {w:<7} "
                  f"{k:<8} {block}\n")
    chi_parts = [f"chi({g!r})={v}" for g, v in ctx.chi.items() if v != 0]
    out.write("character: " + (", ".join(chi_parts) or "0") + "\n")
    return 0


def _cmd_compute(args, out):
    ctx = _context(args.preset, args.n)
    try:
        tree = parse_expression(args.expression, args.n, args.preset)
        value = evaluate(tree, ctx)
    except (ParseError, EvalError, ValueError) as exc:
        out.write(f"error: {exc}\n")
        return 2
    out.write(render_value(value) + "\n")
    return 0


def _cmd_verify(args, out):
    names = list(SUITE_NAMES) if args.suite == "all" else [args.suite]
    failed = False
    renderer = (render_report_structured if args.format == "structured"
                else render_report_text)
    for name in names:
        try:
            report = run_suite(name, n=args.n, seed=args.seed,
                               samples=args.samples,
                               max_level=args.max_level,
                               max_degree=args.max_degree)
        except ValueError as exc:
            out.write(f"error: {exc}\n")
            return 2
        text = renderer(report)
        if text:
            out.write(text + "\n")
        failed = failed or not report.passed
    return 1 if failed else 0


def _cmd_charpoly(args, out):
    n = args.n
    if n < 1:
        out.write("error: n must be >= 1\n")
        return 2
    poly = char_poly(t_matrix(n), n)
    names = [f"x{i}" for i in range(1, n + 1)] + ["lam"]
    out.write(poly_render(poly, names) + "\n")
    return 0


def _cmd_yangian(args, out):
    ns = argparse.Namespace(suite="yangian", n=args.n, seed=0, samples=100,
                            max_level=args.max_level, max_degree=None,
                            format=args.format)
    return _cmd_verify(ns, out)


def dispatch(argv, out=None):
    """Parse argv and run a command; returns the process exit status."""
    out = out if out is not None else sys.stdout
    parser = _build_arg_parser()
    args = parser.parse_args(argv)
    if args.command == "algebra":
        return _cmd_algebra(args, out)
    if args.command == "compute":
        return _cmd_compute(args, out)
    if args.command == "verify":
        return _cmd_verify(args, out)
    if args.command == "charpoly":
        return _cmd_charpoly(args, out)
    if args.command == "yangian":
        return _cmd_yangian(args, out)
    parser.error(f"unknown command {args.command!r}")


def main():
    sys.exit(dispatch(sys.argv[1:]))


if __name__ == "__main__":
    main()
