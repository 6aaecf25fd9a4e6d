"""Sparse multivariate polynomials over the rationals.

A polynomial is a map from exponent tuples to nonzero ``Fraction``
coefficients. Variable names and the monomial order live on a
:class:`PolyRing`; a bare :class:`Poly` only knows its number of variables.
"""

from __future__ import annotations

import re
from fractions import Fraction
from functools import lru_cache
from typing import Iterable, Mapping, Sequence, Union

Monomial = tuple  # tuple[int, ...] of exponents
Scalar = Union[int, Fraction]

ORDER_KINDS = ("lex", "grlex", "grevlex")


class PolyError(ValueError):
    pass


class VariableMismatch(PolyError):
    pass


class ParseError(PolyError):
    def __init__(self, message: str, text: str = "", pos: int = -1):
        self.text = text
        self.pos = pos
        if pos >= 0:
            message = f"{message} at position {pos}: {text!r}"
        super().__init__(message)


def mono_mul(a: Monomial, b: Monomial) -> Monomial:
    return tuple(x + y for x, y in zip(a, b))


def mono_div(a: Monomial, b: Monomial) -> Monomial:
    return tuple(x - y for x, y in zip(a, b))


def mono_divides(a: Monomial, b: Monomial) -> bool:
    """True if ``a`` divides ``b``."""
    return all(x <= y for x, y in zip(a, b))


def mono_lcm(a: Monomial, b: Monomial) -> Monomial:
    return tuple(max(x, y) for x, y in zip(a, b))


class MonomialOrder:
    """A monomial order: lex, grlex or grevlex with a variable precedence.

    ``precedence`` lists variable positions from most to least significant;
    the default is the natural order x_0 > x_1 > ... .
    """

    def __init__(self, kind: str = "grevlex", precedence: Sequence[int] | None = None,
                 nvars: int | None = None):
        if kind not in ORDER_KINDS:
            raise PolyError(f"unknown monomial order {kind!r}")
        if precedence is None:
            if nvars is None:
                raise PolyError("need precedence or nvars")
            precedence = range(nvars)
        precedence = tuple(precedence)
        if sorted(precedence) != list(range(len(precedence))):
            raise PolyError(f"precedence {precedence} is not a permutation")
        self.kind = kind
        self.precedence = precedence
        self.key = lru_cache(maxsize=None)(self._key)

    @property
    def nvars(self) -> int:
        return len(self.precedence)

    def _key(self, m: Monomial):
        e = tuple(m[i] for i in self.precedence)
        if self.kind == "lex":
            return e
        if self.kind == "grlex":
            return (sum(e),) + e
        return (sum(e),) + tuple(-x for x in reversed(e))

    def __eq__(self, other):
        return (isinstance(other, MonomialOrder) and self.kind == other.kind
                and self.precedence == other.precedence)

    def __hash__(self):
        return hash((self.kind, self.precedence))

    def __repr__(self):
        return f"MonomialOrder({self.kind!r}, {self.precedence})"


def exact_scalar(c) -> Fraction:
    if isinstance(c, float):
        raise TypeError("floats are not accepted; use int or Fraction")
    return Fraction(c)


class Poly:
    """Immutable sparse polynomial in ``nvars`` variables with rational coefficients."""

    __slots__ = ("nvars", "terms", "_hash")

    def __init__(self, nvars: int, terms: Mapping[Monomial, Scalar] | None = None):
        self.nvars = nvars
        clean = {}
        if terms:
            for m, c in terms.items():
                if len(m) != nvars:
                    raise VariableMismatch(f"monomial {m} has wrong length for {nvars} variables")
                if c:
                    clean[tuple(m)] = exact_scalar(c)
        self.terms = clean
        self._hash = None

    @classmethod
    def _raw(cls, nvars: int, terms: dict) -> Poly:
        # terms must already be canonical: Fraction values, no zeros
        p = object.__new__(cls)
        p.nvars = nvars
        p.terms = terms
        p._hash = None
        return p

    @classmethod
    def zero(cls, nvars: int) -> Poly:
        return cls._raw(nvars, {})

    @classmethod
    def const(cls, c: Scalar, nvars: int) -> Poly:
        return cls(nvars, {(0,) * nvars: c})

    @classmethod
    def monomial(cls, exps: Sequence[int], c: Scalar = 1) -> Poly:
        return cls(len(exps), {tuple(exps): c})

    @classmethod
    def var(cls, i: int, nvars: int) -> Poly:
        e = [0] * nvars
        e[i] = 1
        return cls.monomial(e)

    # -- basic queries --
    def __bool__(self):
        return bool(self.terms)

    def is_zero(self) -> bool:
        return not self.terms

    def __len__(self):
        return len(self.terms)

    def __eq__(self, other):
        if isinstance(other, Poly):
            return self.nvars == other.nvars and self.terms == other.terms
        if isinstance(other, (int, Fraction)):
            if other == 0:
                return not self.terms
            return self.terms == {(0,) * self.nvars: Fraction(other)}
        return NotImplemented

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.nvars, frozenset(self.terms.items())))
        return self._hash

    def coeff(self, m: Monomial) -> Fraction:
        return self.terms.get(tuple(m), Fraction(0))

    def constant_term(self) -> Fraction:
        return self.coeff((0,) * self.nvars)

    def total_degree(self) -> int:
        if not self.terms:
            return -1
        return max(sum(m) for m in self.terms)

    def is_constant(self) -> bool:
        return all(not any(m) for m in self.terms)

    def homogeneous_components(self) -> dict[int, Poly]:
        parts: dict[int, dict] = {}
        for m, c in self.terms.items():
            parts.setdefault(sum(m), {})[m] = c
        return {d: Poly._raw(self.nvars, t) for d, t in parts.items()}

    def homogeneous_part(self, d: int) -> Poly:
        return Poly._raw(self.nvars, {m: c for m, c in self.terms.items() if sum(m) == d})

    # -- order-dependent --
    def leading_monomial(self, order: MonomialOrder) -> Monomial:
        return max(self.terms, key=order.key)

    def leading_term(self, order: MonomialOrder) -> tuple[Monomial, Fraction]:
        m = self.leading_monomial(order)
        return m, self.terms[m]

    def sorted_terms(self, order: MonomialOrder) -> list[tuple[Monomial, Fraction]]:
        return sorted(self.terms.items(), key=lambda t: order.key(t[0]), reverse=True)

    # -- arithmetic --
    def _check(self, other: Poly):
        if other.nvars != self.nvars:
            raise VariableMismatch(f"{self.nvars} vs {other.nvars} variables")

    def _coerce(self, other) -> Poly | None:
        if isinstance(other, Poly):
            self._check(other)
            return other
        if isinstance(other, (int, Fraction)):
            return Poly.const(other, self.nvars)
        return None

    def __add__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        if len(other.terms) > len(self.terms):
            a, b = other.terms, self.terms
        else:
            a, b = self.terms, other.terms
        out = dict(a)
        for m, c in b.items():
            v = out.get(m)
            if v is None:
                out[m] = c
            else:
                v += c
                if v:
                    out[m] = v
                else:
                    del out[m]
        return Poly._raw(self.nvars, out)

    __radd__ = __add__

    def __neg__(self):
        return Poly._raw(self.nvars, {m: -c for m, c in self.terms.items()})

    def __sub__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def scale(self, c: Scalar) -> Poly:
        c = exact_scalar(c)
        if not c:
            return Poly.zero(self.nvars)
        return Poly._raw(self.nvars, {m: v * c for m, v in self.terms.items()})

    def mul_term(self, mono: Monomial, c: Scalar = 1) -> Poly:
        """Multiply by the single term ``c * x^mono``."""
        c = exact_scalar(c)
        if not c:
            return Poly.zero(self.nvars)
        return Poly._raw(self.nvars, {mono_mul(m, mono): v * c for m, v in self.terms.items()})

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return self.scale(other)
        if not isinstance(other, Poly):
            return NotImplemented
        self._check(other)
        a, b = self.terms, other.terms
        if len(a) < len(b):
            a, b = b, a
        out: dict = {}
        for mb, cb in b.items():
            for ma, ca in a.items():
                m = tuple(x + y for x, y in zip(ma, mb))
                out[m] = out.get(m, 0) + ca * cb
        return Poly._raw(self.nvars, {m: c for m, c in out.items() if c})

    __rmul__ = __mul__

    def __pow__(self, n: int):
        if n < 0:
            raise PolyError("negative power")
        result = Poly.const(1, self.nvars)
        base = self
        while n:
            if n & 1:
                result = result * base
            n >>= 1
            if n:
                base = base * base
        return result

    def __repr__(self):
        return f"Poly({self.nvars}, {dict(sorted(self.terms.items(), reverse=True))!r})"


def poly_arith(op: str, a: Poly, b) -> Poly:
    """Dispatch ``add``/``sub``/``mul``/``scale``."""
    if op == "add":
        return a + b
    if op == "sub":
        return a - b
    if op == "mul":
        return a * b
    if op == "scale":
        return a.scale(b)
    raise PolyError(f"unknown operation {op!r}")


def is_homogeneous(p: Poly) -> tuple[int | None, bool]:
    """Return ``(degree, is_zero)``.

    ``degree`` is the common total degree of all terms, or None when the
    terms have different degrees. The zero polynomial reports ``(0, True)``.
    """
    if not p.terms:
        return 0, True
    degs = {sum(m) for m in p.terms}
    if len(degs) == 1:
        return degs.pop(), False
    return None, False


# ---------- parsing and formatting ----------

_TOKEN = re.compile(r"\s*(?:(\d+)|([A-Za-z_][A-Za-z_0-9]*)|(\S))")


def _tokenize(text: str):
    pos = 0
    out = []
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if m is None:  # trailing whitespace
            break
        if m.group(1) is not None:
            out.append(("int", m.group(1), m.start(1)))
        elif m.group(2) is not None:
            out.append(("name", m.group(2), m.start(2)))
        elif m.group(3) is not None:
            out.append(("op", m.group(3), m.start(3)))
        pos = m.end()
    out.append(("end", "", len(text)))
    return out


def parse_poly(text: str, vars: Sequence[str]) -> Poly:
    """Parse ``text`` with the grammar ``term (('+'|'-') term)*``.

    A term is ``[coeff *] factor (* factor)*`` or a bare coefficient, with
    ``coeff`` an integer or ``int/int`` and ``factor`` either ``var`` or
    ``var^posint``. A leading sign is allowed.
    """
    index = {v: i for i, v in enumerate(vars)}
    n = len(vars)
    toks = _tokenize(text)
    i = 0

    def peek():
        return toks[i]

    def fail(msg, tok):
        raise ParseError(msg, text, tok[2])

    terms: dict = {}
    sign = 1
    first = True
    while True:
        tok = peek()
        if tok[0] == "op" and tok[1] in "+-":
            sign = -1 if tok[1] == "-" else 1
            i += 1
        elif not first:
            fail("expected '+' or '-'", tok)
        first = False

        coeff = Fraction(1)
        exps = [0] * n
        tok = peek()
        seen_factor = False
        if tok[0] == "int":
            num = int(tok[1])
            i += 1
            if peek()[0] == "op" and peek()[1] == "/":
                i += 1
                den_tok = peek()
                if den_tok[0] != "int":
                    fail("expected integer denominator", den_tok)
                den = int(den_tok[1])
                if den == 0:
                    fail("zero denominator", den_tok)
                i += 1
                coeff = Fraction(num, den)
            else:
                coeff = Fraction(num)
            if peek()[0] == "op" and peek()[1] == "*":
                i += 1
                tok = peek()
                if tok[0] != "name":
                    fail("expected variable after '*'", tok)
            else:
                seen_factor = True  # bare coefficient term
        if not seen_factor:
            while True:
                tok = peek()
                if tok[0] != "name":
                    fail("expected variable or coefficient", tok)
                if tok[1] not in index:
                    fail(f"unknown variable {tok[1]!r}", tok)
                v = index[tok[1]]
                i += 1
                power = 1
                if peek()[0] == "op" and peek()[1] == "^":
                    i += 1
                    ptok = peek()
                    if ptok[0] != "int" or int(ptok[1]) == 0:
                        fail("expected positive integer exponent", ptok)
                    power = int(ptok[1])
                    i += 1
                exps[v] += power
                if peek()[0] == "op" and peek()[1] == "*":
                    i += 1
                    continue
                break
        m = tuple(exps)
        terms[m] = terms.get(m, 0) + sign * coeff
        sign = 1
        if peek()[0] == "end":
            break
    return Poly(n, terms)


def _format_coeff(c: Fraction) -> str:
    return str(c.numerator) if c.denominator == 1 else f"{c.numerator}/{c.denominator}"


def format_poly(p: Poly, vars: Sequence[str], order: MonomialOrder | None = None) -> str:
    """Canonical string: terms descending by ``order``, ``1*`` suppressed."""
    if not p.terms:
        return "0"
    if order is None:
        order = MonomialOrder("grevlex", nvars=p.nvars)
    parts = []
    for m, c in p.sorted_terms(order):
        factors = []
        for name, e in zip(vars, m):
            if e == 1:
                factors.append(name)
            elif e > 1:
                factors.append(f"{name}^{e}")
        a = abs(c)
        if not factors:
            body = _format_coeff(a)
        elif a == 1:
            body = "*".join(factors)
        else:
            body = _format_coeff(a) + "*" + "*".join(factors)
        if not parts:
            parts.append(("-" if c < 0 else "") + body)
        else:
            parts.append((" - " if c < 0 else " + ") + body)
    return "".join(parts)


class PolyRing:
    """Variable names plus a monomial order: the context for parse and format."""

    def __init__(self, vars: Sequence[str], order: str | MonomialOrder = "grevlex"):
        self.vars = tuple(vars)
        if len(set(self.vars)) != len(self.vars):
            raise PolyError(f"duplicate variable names in {self.vars}")
        if isinstance(order, str):
            order = MonomialOrder(order, nvars=len(self.vars))
        if order.nvars != len(self.vars):
            raise VariableMismatch("order and variable list disagree in length")
        self.order = order

    @property
    def nvars(self) -> int:
        return len(self.vars)

    def parse(self, text: str) -> Poly:
        return parse_poly(text, self.vars)

    def format(self, p: Poly) -> str:
        return format_poly(p, self.vars, self.order)

    def gens(self) -> list[Poly]:
        return [Poly.var(i, self.nvars) for i in range(self.nvars)]

    def zero(self) -> Poly:
        return Poly.zero(self.nvars)

    def one(self) -> Poly:
        return Poly.const(1, self.nvars)

    def __call__(self, text: str) -> Poly:
        return self.parse(text)

    def __repr__(self):
        return f"PolyRing({list(self.vars)}, {self.order.kind!r})"


def poly_sum(polys: Iterable[Poly], nvars: int) -> Poly:
    out: dict = {}
    for p in polys:
        for m, c in p.terms.items():
            out[m] = out.get(m, 0) + c
    return Poly._raw(nvars, {m: c for m, c in out.items() if c})
