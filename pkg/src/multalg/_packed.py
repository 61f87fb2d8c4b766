"""Packed-integer monomial codecs for the Groebner engine.

A monomial in n variables is encoded as a single Python int whose natural
integer comparison realizes the chosen term order.  Fields are 8 bits wide
(7 value bits + 1 guard bit), so exponents and, for grevlex, per-variable
complements must stay below 128.  Multiplication of monomials is integer
addition (up to an offset) and divisibility is a masked subtraction, which
keeps the reduction inner loop on machine ints.
"""

from __future__ import annotations

_FIELD = 8
_MAXE = 127


class GrevlexCodec:
    """Graded reverse lexicographic order.

    Layout (most significant first): total degree, then 127-e[n-1], ...,
    127-e[0].  Plain int comparison of two packed keys agrees with grevlex.
    """

    name = "grevlex"

    def __init__(self, n: int):
        self.n = n
        self.one = sum(_MAXE << (_FIELD * i) for i in range(n))
        self.guards = sum(0x80 << (_FIELD * i) for i in range(n))
        self._degshift = _FIELD * n

    def pack(self, exps) -> int:
        if any(e < 0 or e > _MAXE for e in exps):
            raise OverflowError("exponent out of packable range")
        key = sum(exps) << self._degshift
        for i, e in enumerate(exps):
            key |= (_MAXE - e) << (_FIELD * i)
        return key

    def unpack(self, key: int) -> tuple:
        return tuple(
            _MAXE - ((key >> (_FIELD * i)) & 0xFF) for i in range(self.n)
        )

    def deg(self, key: int) -> int:
        return key >> self._degshift

    def mul(self, a: int, b: int) -> int:
        return a + b - self.one

    def div(self, a: int, b: int) -> int:
        # valid only when b divides a
        return a - b + self.one

    def divides(self, b: int, a: int) -> bool:
        # complements reverse the inequality: b | a  <=>  comp(b) >= comp(a)
        return ((b | self.guards) - a) & self.guards == self.guards

    def lcm(self, a: int, b: int) -> int:
        ea, eb = self.unpack(a), self.unpack(b)
        return self.pack(tuple(max(x, y) for x, y in zip(ea, eb)))


class LexCodec:
    """Pure lexicographic order; variable 0 is most significant."""

    name = "lex"

    def __init__(self, n: int):
        self.n = n
        self.one = 0
        self.guards = sum(0x80 << (_FIELD * i) for i in range(n))

    def pack(self, exps) -> int:
        if any(e < 0 or e > _MAXE for e in exps):
            raise OverflowError("exponent out of packable range")
        key = 0
        n = self.n
        for i, e in enumerate(exps):
            key |= e << (_FIELD * (n - 1 - i))
        return key

    def unpack(self, key: int) -> tuple:
        n = self.n
        return tuple((key >> (_FIELD * (n - 1 - i))) & 0xFF for i in range(n))

    def deg(self, key: int) -> int:
        return sum(self.unpack(key))

    def mul(self, a: int, b: int) -> int:
        return a + b

    def div(self, a: int, b: int) -> int:
        return a - b

    def divides(self, b: int, a: int) -> bool:
        return ((a | self.guards) - b) & self.guards == self.guards

    def lcm(self, a: int, b: int) -> int:
        ea, eb = self.unpack(a), self.unpack(b)
        return self.pack(tuple(max(x, y) for x, y in zip(ea, eb)))


_CODECS = {"grevlex": GrevlexCodec, "lex": LexCodec}


def codec_for(order: str, n: int):
    try:
        return _CODECS[order](n)
    except KeyError:
        raise ValueError(f"unknown monomial order {order!r}") from None
