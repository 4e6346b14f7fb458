"""Gap-constrained binary strings and their enumeration.

A string is p-valid when every two of its 1s are separated by at least p
zeros.  Strings are packed into ints with coordinate 1 (the leftmost
character) at the most significant of the n bits, so on equal lengths
numeric order coincides with lexicographic order.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import SizeLimitError
from .sequences import binomial

DEFAULT_ENUM_CAP = 30


@dataclass(frozen=True, order=True)
class PString:
    """A fixed-length binary string; bits packs u_1 ... u_n MSB-first."""

    n: int
    bits: int

    def __post_init__(self) -> None:
        if self.n < 0:
            raise ValueError(f"length must be non-negative, got {self.n}")
        if not 0 <= self.bits < (1 << self.n):
            raise ValueError(f"bits 0x{self.bits:x} out of range for length {self.n}")

    @classmethod
    def from01(cls, text: str) -> "PString":
        return cls(len(text), int(text, 2) if text else 0)

    def to01(self) -> str:
        return format(self.bits, f"0{self.n}b") if self.n else ""

    def __repr__(self) -> str:
        return f"PString({self.to01()!r})"

    @property
    def weight(self) -> int:
        return self.bits.bit_count()

    def bit(self, i: int) -> int:
        """Coordinate u_i, 1-indexed from the left."""
        self._check_coord(i)
        return (self.bits >> (self.n - i)) & 1

    def flip(self, i: int) -> "PString":
        """The string differing from this one exactly at coordinate i."""
        self._check_coord(i)
        return PString(self.n, self.bits ^ (1 << (self.n - i)))

    def ones(self) -> tuple[int, ...]:
        """The coordinates carrying a 1, ascending and 1-based."""
        return tuple(i for i in range(1, self.n + 1) if (self.bits >> (self.n - i)) & 1)

    def concat(self, other: "PString") -> "PString":
        return PString(self.n + other.n, (self.bits << other.n) | other.bits)

    def _check_coord(self, i: int) -> None:
        if not 1 <= i <= self.n:
            raise ValueError(f"coordinate {i} outside [1, {self.n}]")


def _check_params(p: int, n: int) -> None:
    if p < 0:
        raise ValueError(f"p must be non-negative, got {p}")
    if n < 0:
        raise ValueError(f"n must be non-negative, got {n}")


def is_pvalid(u: PString, p: int) -> bool:
    """True when every two 1s of u are separated by at least p zeros."""
    if p < 0:
        raise ValueError(f"p must be non-negative, got {p}")
    bits = u.bits
    return all(not (bits & (bits >> d)) for d in range(1, p + 1))


def _pvalid_bits(p: int, n: int) -> list[int]:
    # Lexicographic by construction: a leading 0 keeps the packed value,
    # a leading 1 forces at least p zeros (or the rest of the string).
    levels: list[list[int]] = [[0]]
    for m in range(1, n + 1):
        block = list(levels[m - 1])
        if m >= p + 1:
            top = 1 << (m - 1)
            block.extend(top | rest for rest in levels[m - p - 1])
        else:
            block.append(1 << (m - 1))
        levels.append(block)
    return levels[n]


def enumerate_pstrings(p: int, n: int, cap: int = DEFAULT_ENUM_CAP) -> list[PString]:
    """All p-valid strings of length n in lexicographic order.

    The list has pfib(p, n+p+1) entries; n = 0 yields the empty string and
    p = 0 yields every binary string.
    """
    _check_params(p, n)
    if n > cap:
        raise SizeLimitError(f"n = {n} exceeds the enumeration cap {cap}")
    return [PString(n, bits) for bits in _pvalid_bits(p, n)]


def max_weight(p: int, n: int) -> int:
    """Largest Hamming weight a p-valid string of length n can have."""
    _check_params(p, n)
    return (n + p) // (p + 1)


def count_by_weight(p: int, n: int, w: int) -> int:
    """Number of p-valid strings of length n with Hamming weight w.

    Equals binomial(n - w*p + p, w); the binomial convention makes it 0
    beyond the maximum weight.
    """
    _check_params(p, n)
    if w < 0:
        return 0
    return binomial(n - w * p + p, w)


def star_collapse(u: PString, p: int) -> PString:
    """Collapse every 1 0^p block of u 0^p to a star, encoded as a 1 bit.

    For a p-valid u of length n and weight w the result has length
    n + p - w*p and weight w (weight 0 maps to the all-zero string of
    length n + p).  The map is injective on the p-valid strings of a fixed
    length, and its image on each weight class is the full set of weight-w
    strings of the collapsed length.
    """
    if p < 1:
        raise ValueError(f"p must be positive, got {p}")
    if not is_pvalid(u, p):
        raise ValueError(f"{u!r} is not {p}-valid")
    bits = 0
    length = 0
    text = u.to01() + "0" * p
    pos = 0
    while pos < len(text):
        if text[pos] == "1":
            bits = (bits << 1) | 1
            pos += p + 1  # the p zeros after a 1 are guaranteed by validity
        else:
            bits <<= 1
            pos += 1
        length += 1
    return PString(length, bits)


def greedy_factor(s: PString, p: int) -> list[PString]:
    """Factor s over the two-token alphabet {0, 1 0^p}, left to right.

    A 1 can only start a 1 0^p token and a 0 only a 0 token, so any
    factorization is forced; raises ValueError when none exists.
    """
    if p < 0:
        raise ValueError(f"p must be non-negative, got {p}")
    text = s.to01()
    zero = PString(1, 0)
    block = PString(p + 1, 1 << p)
    tokens: list[PString] = []
    pos = 0
    while pos < len(text):
        if text[pos] == "1":
            if text[pos + 1 : pos + p + 1] != "0" * p:
                raise ValueError(f"{s!r} is not a concatenation of 0 and 1 0^{p}")
            tokens.append(block)
            pos += p + 1
        else:
            tokens.append(zero)
            pos += 1
    return tokens


def enumerate_reduced(p: int, n: int, cap: int = DEFAULT_ENUM_CAP) -> list[PString]:
    """The p-valid strings of length n not ending in 1 0^r with r < p.

    For n >= p these are exactly v 0^p with v p-valid of length n - p, and
    for n < p only the all-zero string qualifies; either way the count is
    pfib(p, n+1).  Output is lexicographic.
    """
    if p < 1:
        raise ValueError(f"p must be positive, got {p}")
    if n < 0:
        raise ValueError(f"n must be non-negative, got {n}")
    if n > cap:
        raise SizeLimitError(f"n = {n} exceeds the enumeration cap {cap}")
    if n < p:
        return [PString(n, 0)]
    return [PString(n, bits << p) for bits in _pvalid_bits(p, n - p)]
