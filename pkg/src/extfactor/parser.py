"""Problem files and polynomial expressions.

The problem grammar is line oriented: ``field:``, ``vars:``, ``order:``
and ``poly:`` directives, with ideal generators on indented lines after
``ideal:``.  ``#`` starts a comment anywhere.  Expressions use + - * / ^
with parentheses; division is only by nonzero constants.
"""

import re
from dataclasses import dataclass

from .errors import (BadModulus, FieldMismatch, InputSyntaxError,
                     UnknownVariable)
from .fields import GF, QQ, MACHINE_WORD_LIMIT, is_prime
from .multipoly import BlockOrder, ORDERS, PolyRing

_TOKEN = re.compile(r"\s*(?:(\d+)|([A-Za-z_][A-Za-z_0-9]*)|([-+*/^()]))")


def _tokenize(text, line_no=None):
    tokens = []
    pos = 0
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if not m or m.end() == pos:
            stripped = text[pos:].lstrip()
            if not stripped:
                break
            raise InputSyntaxError(f"unexpected character {stripped[0]!r}",
                                   line=line_no, column=pos + 1)
        num, name, op = m.groups()
        col = m.start(m.lastindex) + 1
        if num is not None:
            tokens.append(("num", int(num), col))
        elif name is not None:
            tokens.append(("name", name, col))
        else:
            tokens.append(("op", op, col))
        pos = m.end()
    tokens.append(("end", None, len(text) + 1))
    return tokens


class _ExprParser:
    """Recursive descent over +, -, *, /, ^ with standard precedence."""

    def __init__(self, tokens, ring, line_no=None):
        self.tokens = tokens
        self.i = 0
        self.ring = ring
        self.line_no = line_no
        self.names = {n: i for i, n in enumerate(ring.varnames)}

    def peek(self):
        return self.tokens[self.i]

    def next(self):
        tok = self.tokens[self.i]
        self.i += 1
        return tok

    def error(self, message, col):
        raise InputSyntaxError(message, line=self.line_no, column=col)

    def parse(self):
        value = self.sum()
        kind, val, col = self.peek()
        if kind != "end":
            self.error(f"unexpected {val!r}", col)
        return value

    def sum(self):
        kind, val, col = self.peek()
        if kind == "op" and val in "+-":
            self.next()
            left = self.product()
            if val == "-":
                left = -left
        else:
            left = self.product()
        while True:
            kind, val, col = self.peek()
            if kind == "op" and val in "+-":
                self.next()
                right = self.product()
                left = left + right if val == "+" else left - right
            else:
                return left

    def product(self):
        left = self.power()
        while True:
            kind, val, col = self.peek()
            if kind == "op" and val in "*/":
                self.next()
                right = self.power()
                if val == "*":
                    left = left * right
                else:
                    if not right.is_constant():
                        self.error("division only by constants", col)
                    if right.is_zero:
                        raise FieldMismatch(
                            f"division by a constant that vanishes in "
                            f"{self.ring.field} (line {self.line_no}, column {col})")
                    left = left.scale(self.ring.field.inv(right.constant_value()))
            else:
                return left

    def power(self):
        base = self.atom()
        kind, val, col = self.peek()
        if kind == "op" and val == "^":
            self.next()
            kind, exp, ecol = self.next()
            if kind != "num":
                self.error("exponent must be a nonnegative integer", ecol)
            return base ** exp
        return base

    def atom(self):
        kind, val, col = self.next()
        if kind == "num":
            return self.ring.const(self.ring.field.from_int(val))
        if kind == "name":
            idx = self.names.get(val)
            if idx is None:
                raise UnknownVariable(
                    f"unknown variable {val!r} at line {self.line_no}, column {col}")
            return self.ring.var(idx)
        if kind == "op" and val == "(":
            inner = self.sum()
            kind, val, col = self.next()
            if not (kind == "op" and val == ")"):
                self.error("expected ')'", col)
            return inner
        if kind == "op" and val in "+-":
            inner = self.atom()
            return -inner if val == "-" else inner
        self.error("expected a number, variable or '('",
                   col if kind != "end" else col)


def parse_expression(text, ring, line_no=None):
    """Parse one polynomial expression over the given ring."""
    tokens = _tokenize(text, line_no)
    return _ExprParser(tokens, ring, line_no).parse()


@dataclass
class ProblemSpec:
    field: object
    varnames: tuple
    order_name: str
    ring_x: PolyRing
    ring_xy: PolyRing
    generators: list
    target: object
    forced_r: object = None
    seed: int = None


_FIELD_RE = re.compile(r"^(Q|QQ)$|^GF\((\d+)\)$", re.IGNORECASE)
_NAME_RE = re.compile(r"^[A-Za-z_][A-Za-z_0-9]*$")

YNAME = "y"


def _parse_field(text, line_no):
    m = _FIELD_RE.match(text.strip())
    if not m:
        raise InputSyntaxError(f"unrecognized field {text.strip()!r}", line=line_no)
    if m.group(2) is None:
        return QQ
    p = int(m.group(2))
    if p >= MACHINE_WORD_LIMIT:
        raise BadModulus(f"modulus {p} exceeds the machine-word limit 2^64")
    if not is_prime(p):
        raise BadModulus(f"GF({p}): modulus is not prime")
    return GF(p)


def parse_problem(text):
    """Parse a problem file into a ProblemSpec."""
    field = None
    varnames = None
    order_name = None
    ideal_lines = []
    poly_line = None
    r_line = None
    seed = None
    in_ideal = False

    for line_no, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].rstrip()
        if not line.strip():
            continue
        indented = line[0] in " \t"
        stripped = line.strip()
        if in_ideal and indented:
            ideal_lines.append((stripped, line_no))
            continue
        in_ideal = False
        if ":" not in stripped:
            raise InputSyntaxError(f"expected 'key: value', got {stripped!r}",
                                   line=line_no)
        key, _, value = stripped.partition(":")
        key = key.strip().lower()
        value = value.strip()
        if key == "field":
            field = _parse_field(value, line_no)
        elif key == "vars":
            names = value.split()
            if not names:
                raise InputSyntaxError("empty variable list", line=line_no)
            for n in names:
                if not _NAME_RE.match(n):
                    raise InputSyntaxError(f"bad variable name {n!r}", line=line_no)
            if YNAME in names:
                raise InputSyntaxError(
                    f"{YNAME!r} is reserved for the target polynomial", line=line_no)
            if len(set(names)) != len(names):
                raise InputSyntaxError("duplicate variable names", line=line_no)
            varnames = tuple(names)
        elif key == "order":
            if value not in ORDERS:
                raise InputSyntaxError(
                    f"unknown order {value!r} (expected lex or grevlex)", line=line_no)
            order_name = value
        elif key == "ideal":
            if value:
                ideal_lines.append((value, line_no))
            in_ideal = True
        elif key == "poly":
            poly_line = (value, line_no)
        elif key == "r":
            r_line = (value, line_no)
        elif key == "seed":
            try:
                seed = int(value)
            except ValueError:
                raise InputSyntaxError(f"bad seed {value!r}", line=line_no) from None
        else:
            raise InputSyntaxError(f"unknown directive {key!r}", line=line_no)

    if field is None:
        raise InputSyntaxError("missing 'field:' directive")
    if varnames is None:
        raise InputSyntaxError("missing 'vars:' directive")
    if not ideal_lines:
        raise InputSyntaxError("missing 'ideal:' generators")
    if poly_line is None:
        raise InputSyntaxError("missing 'poly:' directive")
    if order_name is None:
        order_name = "grevlex"

    inner = ORDERS[order_name]()
    ring_x = PolyRing(field, varnames, inner)
    ring_xy = PolyRing(field, varnames + (YNAME,), BlockOrder(inner))

    generators = []
    for text_line, line_no in ideal_lines:
        g = parse_expression(text_line, ring_x, line_no)
        if g.is_zero:
            raise InputSyntaxError("zero ideal generator", line=line_no)
        generators.append(g)

    target = parse_expression(poly_line[0], ring_xy, poly_line[1])
    forced_r = None
    if r_line is not None:
        forced_r = parse_expression(r_line[0], ring_xy, r_line[1])

    return ProblemSpec(field, varnames, order_name, ring_x, ring_xy,
                       generators, target, forced_r, seed)
