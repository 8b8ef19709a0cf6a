"""Exact integer Laurent polynomials in one variable."""

from __future__ import annotations

import re

__all__ = ["LaurentPoly"]


class LaurentPoly:
    __slots__ = ("terms", "_hash")

    def __init__(self, terms=None):
        clean = {}
        for e, c in dict(terms or {}).items():
            if c:
                clean[int(e)] = int(c)
        self.terms = clean
        self._hash = None

    @classmethod
    def monomial(cls, coeff: int = 1, exp: int = 0) -> "LaurentPoly":
        return cls({exp: coeff})

    @classmethod
    def const(cls, c: int) -> "LaurentPoly":
        return cls({0: c})

    def __add__(self, other):
        other = _coerce(other)
        out = dict(self.terms)
        for e, c in other.terms.items():
            out[e] = out.get(e, 0) + c
        return LaurentPoly(out)

    __radd__ = __add__

    def __neg__(self):
        return LaurentPoly({e: -c for e, c in self.terms.items()})

    def __sub__(self, other):
        return self + (-_coerce(other))

    def __rsub__(self, other):
        return _coerce(other) - self

    def __mul__(self, other):
        other = _coerce(other)
        out: dict[int, int] = {}
        for e1, c1 in self.terms.items():
            for e2, c2 in other.terms.items():
                out[e1 + e2] = out.get(e1 + e2, 0) + c1 * c2
        return LaurentPoly(out)

    __rmul__ = __mul__

    def __pow__(self, k: int):
        if k < 0:
            if len(self.terms) != 1:
                raise ValueError("only monomials can be inverted")
            (e, c), = self.terms.items()
            if c not in (1, -1):
                raise ValueError("monomial coefficient is not a unit")
            return LaurentPoly({-e * -k: c ** -k})
        out = LaurentPoly.const(1)
        base = self
        while k:
            if k & 1:
                out = out * base
            base = base * base
            k >>= 1
        return out

    def shift(self, k: int) -> "LaurentPoly":
        return LaurentPoly({e + k: c for e, c in self.terms.items()})

    def substitute_power(self, k: int) -> "LaurentPoly":
        """p(v) -> p(v**k); ``k`` may be negative."""
        return LaurentPoly({e * k: c for e, c in self.terms.items()})

    def rescale(self, k: int) -> "LaurentPoly":
        """Divide every exponent by ``k``; all exponents must be multiples."""
        if any(e % k for e in self.terms):
            raise ValueError(f"exponents not divisible by {k}")
        return LaurentPoly({e // k: c for e, c in self.terms.items()})

    def __eq__(self, other):
        if isinstance(other, int):
            other = LaurentPoly.const(other)
        return isinstance(other, LaurentPoly) and self.terms == other.terms

    def __hash__(self):
        if self._hash is None:
            self._hash = hash(frozenset(self.terms.items()))
        return self._hash

    def is_zero(self) -> bool:
        return not self.terms

    def format(self, var: str = "t") -> str:
        """Readable form such as ``-t^-4 + t^-3 + t^-1``."""
        if not self.terms:
            return "0"
        out = []
        for e, c in sorted(self.terms.items()):
            mag = abs(c)
            if e == 0:
                body = str(mag)
            else:
                power = var if e == 1 else f"{var}^{e}"
                body = power if mag == 1 else f"{mag}*{power}"
            if not out:
                out.append(body if c > 0 else "-" + body)
            else:
                out.append(("+ " if c > 0 else "- ") + body)
        return " ".join(out)

    __str__ = format

    def __repr__(self):
        return f"LaurentPoly({self.format()})"

    @classmethod
    def parse(cls, text: str, var: str = "t") -> "LaurentPoly":
        """Inverse of ``format``; spacing is free and ``*`` is optional."""
        s = text.replace(" ", "")
        if s in ("", "0"):
            return cls()
        v = re.escape(var)
        term = re.compile(r"([+-]?)(\d*)\*?(?:(" + v + r")(?:\^\(?(-?\d+)\)?)?)?")
        terms: dict[int, int] = {}
        pos = 0
        while pos < len(s):
            m = term.match(s, pos)
            if not m or m.end() == pos or not (m.group(2) or m.group(3)):
                raise ValueError(f"cannot parse polynomial {text!r} at {s[pos:]!r}")
            c = int(m.group(2)) if m.group(2) else 1
            if m.group(1) == "-":
                c = -c
            e = (int(m.group(4)) if m.group(4) else 1) if m.group(3) else 0
            terms[e] = terms.get(e, 0) + c
            pos = m.end()
        return cls(terms)


def _coerce(x) -> LaurentPoly:
    if isinstance(x, LaurentPoly):
        return x
    if isinstance(x, int):
        return LaurentPoly.const(x)
    raise TypeError(f"cannot combine LaurentPoly with {type(x).__name__}")
