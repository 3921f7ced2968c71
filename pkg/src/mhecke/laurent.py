"""Exact arithmetic in the ring of integer Laurent polynomials Z[v, v^-1].

This is the coefficient ring for the whole package.  Values are immutable
and kept in a canonical sparse form (exponents sorted, zero coefficients
dropped), so structural equality is ring equality and elements may be used
as dictionary keys.

>>> p = LaurentInt.parse("v^2 - 1")
>>> print(p * p)
v^4 - 2*v^2 + 1
>>> print(p.bar())
v^-2 - 1
>>> LaurentInt.parse(str(p * p)) == p * p
True
"""

from __future__ import annotations

import re

__all__ = ["LaurentInt", "ZERO", "ONE", "V"]


class LaurentInt:
    """A finite sum c_k * v^k with integer coefficients, k ranging over Z.

    Construct from a mapping exponent -> coefficient; zero coefficients are
    pruned.  All operations return new values.
    """

    __slots__ = ("_terms",)

    def __init__(self, coeffs=None):
        if coeffs is None:
            coeffs = {}
        self._terms = tuple(sorted((e, c) for e, c in coeffs.items() if c))

    @classmethod
    def from_int(cls, n: int) -> "LaurentInt":
        return cls({0: n})

    @classmethod
    def v_power(cls, k: int) -> "LaurentInt":
        return cls({k: 1})

    @property
    def terms(self) -> tuple:
        """Sorted (exponent, coefficient) pairs, no zeros."""
        return self._terms

    def __bool__(self) -> bool:
        return bool(self._terms)

    def __eq__(self, other) -> bool:
        if isinstance(other, int):
            other = LaurentInt.from_int(other)
        if not isinstance(other, LaurentInt):
            return NotImplemented
        return self._terms == other._terms

    def __hash__(self) -> int:
        return hash(self._terms)

    @staticmethod
    def _coerce(other):
        if isinstance(other, int):
            return LaurentInt.from_int(other)
        if isinstance(other, LaurentInt):
            return other
        return None

    def __add__(self, other) -> "LaurentInt":
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        out = dict(self._terms)
        for e, c in other._terms:
            out[e] = out.get(e, 0) + c
        return LaurentInt(out)

    __radd__ = __add__

    def __neg__(self) -> "LaurentInt":
        return LaurentInt({e: -c for e, c in self._terms})

    def __sub__(self, other) -> "LaurentInt":
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other) -> "LaurentInt":
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return other + (-self)

    def __mul__(self, other) -> "LaurentInt":
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        out: dict = {}
        for e1, c1 in self._terms:
            for e2, c2 in other._terms:
                e = e1 + e2
                out[e] = out.get(e, 0) + c1 * c2
        return LaurentInt(out)

    __rmul__ = __mul__

    def __pow__(self, n: int) -> "LaurentInt":
        if n < 0:
            # only monomials with coefficient +-1 are units
            if len(self._terms) != 1 or self._terms[0][1] not in (1, -1):
                raise ValueError("not a unit in Z[v, v^-1]: %s" % self)
            e, c = self._terms[0]
            return LaurentInt({-e: c}) ** (-n)
        out = ONE
        for _ in range(n):
            out = out * self
        return out

    def bar(self) -> "LaurentInt":
        """The involution v -> v^-1 (negate every exponent)."""
        return LaurentInt({-e: c for e, c in self._terms})

    def exact_div(self, other: "LaurentInt") -> "LaurentInt":
        """Quotient self / other when it lies in the ring; ValueError if not.

        Long division from the top exponent; exactness fails as soon as a
        leading coefficient is not divisible or the quotient exponent falls
        below the only possible range.
        """
        other = self._coerce(other)
        if not other:
            raise ValueError("division by zero")
        if not self:
            return ZERO
        lead_e, lead_c = other._terms[-1]
        min_q = self._terms[0][0] - other._terms[0][0]
        rem = dict(self._terms)
        quo: dict = {}
        while rem:
            e = max(rem)
            c = rem[e]
            qe, qr = divmod(c, lead_c)
            if qr or e - lead_e < min_q:
                raise ValueError("not an exact quotient: (%s) / (%s)" % (self, other))
            quo[e - lead_e] = qe
            for oe, oc in other._terms:
                k = oe + e - lead_e
                r = rem.get(k, 0) - oc * qe
                if r:
                    rem[k] = r
                elif k in rem:
                    del rem[k]
        return LaurentInt(quo)

    def __str__(self) -> str:
        if not self._terms:
            return "0"
        parts = []
        for e, c in sorted(self._terms, reverse=True):
            mag = abs(c)
            if e == 0:
                body = str(mag)
            else:
                vpow = "v" if e == 1 else "v^%d" % e
                body = vpow if mag == 1 else "%d*%s" % (mag, vpow)
            parts.append(("-" if c < 0 else "+", body))
        sign, body = parts[0]
        text = ("-" if sign == "-" else "") + body
        for sign, body in parts[1:]:
            text += " %s %s" % (sign, body)
        return text

    def __repr__(self) -> str:
        return "LaurentInt.parse(%r)" % str(self)

    _TERM_RE = re.compile(
        r"""\s*(?P<sign>[+-])?\s*
            (?:(?P<coef>\d+)(?:\*(?:v(?:\^(?P<exp1>-?\d+))?)(?P<hasv1>))?
              |v(?:\^(?P<exp2>-?\d+))?(?P<hasv2>))""",
        re.VERBOSE,
    )

    @classmethod
    def parse(cls, text: str) -> "LaurentInt":
        """Inverse of str(); accepts the grammar "c*v^k + ..." (any spacing)."""
        out: dict = {}
        pos = 0
        first = True
        stripped = text.strip()
        if not stripped:
            raise ValueError("empty Laurent polynomial string")
        while pos < len(stripped):
            m = cls._TERM_RE.match(stripped, pos)
            if m is None:
                raise ValueError("bad Laurent polynomial at %r" % stripped[pos:])
            sign = m.group("sign")
            if sign is None and not first:
                raise ValueError("missing +/- between terms in %r" % text)
            s = -1 if sign == "-" else 1
            if m.group("coef") is not None:
                c = int(m.group("coef"))
                if m.group("hasv1") is not None:
                    e = int(m.group("exp1")) if m.group("exp1") else 1
                else:
                    e = 0
            else:
                c = 1
                e = int(m.group("exp2")) if m.group("exp2") else 1
            out[e] = out.get(e, 0) + s * c
            pos = m.end()
            first = False
        return cls(out)


ZERO = LaurentInt()
ONE = LaurentInt({0: 1})
V = LaurentInt({1: 1})


if __name__ == "__main__":
    import doctest

    doctest.testmod()
