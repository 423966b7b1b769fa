"""A small expression language over series and scalars.

Grammar, loosest binding first::

    expr    := sum (cmpop sum)?
    sum     := product (("+" | "-") product)*
    product := unary (("*" | "/") unary)*
    unary   := "-" unary | power
    power   := atom ("^" unary)?            # right associative, -2^2 == -(2^2)
    atom    := number | name | name "(" expr ("," expr)* ")" | "(" expr ")"

Names resolve to series (or numbers) supplied by the caller.  Binary
operations between series are intersection aligned.
"""

from __future__ import annotations

import math
import re
from typing import Callable, Mapping

from .arith import cumulate, diff_by, lag_by, map_cells, resolve_op, zip_op
from .errors import ParseError
from .series import Indexed

__all__ = ["evaluate", "parse", "FUNCTIONS"]

_TOKEN_RE = re.compile(r"\s*(?:(\d+\.?\d*(?:[eE][+-]?\d+)?|\.\d+(?:[eE][+-]?\d+)?)"
                       r"|([A-Za-z_][A-Za-z0-9_.]*)|(<=|>=|==|!=|\*\*|[-+*/^<>(),]))")
_CMP = ("<", "<=", ">", ">=", "==", "!=")


def _tokenize(text: str) -> list[tuple[str, str]]:
    tokens = []
    pos = 0
    text = text.rstrip()
    while pos < len(text):
        m = _TOKEN_RE.match(text, pos)
        if m is None or m.end() == pos:
            raise ParseError(f"unexpected character {text[pos:].lstrip()[:1]!r} at offset {pos}")
        num, name, op = m.groups()
        if num is not None:
            tokens.append(("num", num))
        elif name is not None:
            tokens.append(("name", name))
        else:
            tokens.append(("op", "^" if op == "**" else op))
        pos = m.end()
    tokens.append(("end", ""))
    return tokens


class _Parser:
    def __init__(self, text: str):
        self.tokens = _tokenize(text)
        self.pos = 0

    def peek(self):
        return self.tokens[self.pos]

    def take(self, kind=None, value=None):
        tok = self.tokens[self.pos]
        if (kind and tok[0] != kind) or (value and tok[1] != value):
            want = value or kind
            got = tok[1] or "end of input"
            raise ParseError(f"expected {want!r}, got {got!r}")
        self.pos += 1
        return tok

    def at_op(self, *ops):
        tok = self.peek()
        return tok[0] == "op" and tok[1] in ops

    def expr(self):
        left = self.sum()
        if self.at_op(*_CMP):
            op = self.take()[1]
            left = ("bin", op, left, self.sum())
            if self.at_op(*_CMP):
                raise ParseError("comparisons do not chain")
        return left

    def sum(self):
        left = self.product()
        while self.at_op("+", "-"):
            op = self.take()[1]
            left = ("bin", op, left, self.product())
        return left

    def product(self):
        left = self.unary()
        while self.at_op("*", "/"):
            op = self.take()[1]
            left = ("bin", op, left, self.unary())
        return left

    def unary(self):
        if self.at_op("-"):
            self.take()
            return ("neg", self.unary())
        if self.at_op("+"):
            self.take()
            return self.unary()
        return self.power()

    def power(self):
        base = self.atom()
        if self.at_op("^"):
            self.take()
            return ("bin", "^", base, self.unary())
        return base

    def atom(self):
        kind, value = self.peek()
        if kind == "num":
            self.take()
            return ("num", float(value))
        if kind == "name":
            self.take()
            if self.at_op("("):
                self.take()
                args = [self.expr()]
                while self.at_op(","):
                    self.take()
                    args.append(self.expr())
                self.take("op", ")")
                return ("call", value, args)
            return ("name", value)
        if self.at_op("("):
            self.take()
            inner = self.expr()
            self.take("op", ")")
            return inner
        raise ParseError(f"unexpected {value or 'end of input'!r}")


def parse(text: str):
    """Parse to a nested-tuple syntax tree."""
    p = _Parser(text)
    tree = p.expr()
    p.take("end")
    return tree


def _int_arg(x, what: str) -> int:
    if isinstance(x, Indexed) or x != int(x):
        raise ParseError(f"{what} must be an integer constant")
    return int(x)


def _safe(fn: Callable[[float], float]) -> Callable[[float], float]:
    def call(x):
        try:
            return float(fn(x))
        except (ValueError, ZeroDivisionError):
            return math.nan
        except OverflowError:
            return math.inf
    return call


def _unary(fn: Callable[[float], float]):
    def apply(x):
        if isinstance(x, Indexed):
            return map_cells(x, fn)
        return _safe(fn)(x)
    return apply


def _series_only(name, fn):
    def apply(x, *rest):
        if not isinstance(x, Indexed):
            raise ParseError(f"{name}() needs a series argument")
        return fn(x, *rest)
    return apply


# name -> (implementation, minimum arity, maximum arity)
FUNCTIONS: dict[str, tuple[Callable, int, int]] = {
    "log": (_unary(math.log), 1, 1),
    "exp": (_unary(math.exp), 1, 1),
    "sqrt": (_unary(math.sqrt), 1, 1),
    "abs": (_unary(abs), 1, 1),
    "diff": (_series_only("diff", lambda x, lag=1.0: diff_by(x, _int_arg(lag, "lag"))), 1, 2),
    "lag": (_series_only("lag", lambda x, k=1.0: lag_by(x, _int_arg(k, "k"))), 1, 2),
    "cumsum": (_series_only("cumsum", lambda x: cumulate(x, "sum")), 1, 1),
    "cumprod": (_series_only("cumprod", lambda x: cumulate(x, "prod")), 1, 1),
    "cummin": (_series_only("cummin", lambda x: cumulate(x, "min")), 1, 1),
    "cummax": (_series_only("cummax", lambda x: cumulate(x, "max")), 1, 1),
}


def _eval(node, env):
    tag = node[0]
    if tag == "num":
        return node[1]
    if tag == "name":
        try:
            return env[node[1]]
        except KeyError:
            raise ParseError(f"unknown name {node[1]!r}") from None
    if tag == "neg":
        return -_eval(node[1], env)
    if tag == "call":
        name, args = node[1], node[2]
        if name not in FUNCTIONS:
            raise ParseError(f"unknown function {name!r}; available: {sorted(FUNCTIONS)}")
        fn, lo, hi = FUNCTIONS[name]
        if not lo <= len(args) <= hi:
            raise ParseError(f"{name}() takes {lo}..{hi} arguments, got {len(args)}")
        return fn(*(_eval(a, env) for a in args))
    _, op, left, right = node
    a, b = _eval(left, env), _eval(right, env)
    if isinstance(a, Indexed) or isinstance(b, Indexed):
        return zip_op(a, b, op)
    return resolve_op(op)(float(a), float(b))


def evaluate(text: str, env: Mapping[str, Indexed | float]):
    """Evaluate ``text`` with names bound by ``env``."""
    return _eval(parse(text), env)
