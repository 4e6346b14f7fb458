"""Exact integer polynomials and the closed-form counting polynomials.

Univariate polynomials are dense coefficient tuples; bivariate ones are
sparse term tuples.  Degrees stay tiny while coefficients grow huge, so
everything is exact int arithmetic.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Mapping, Union

from .sequences import binomial
from .strings import count_by_weight, max_weight

NEG_INF = float("-inf")


def _as_poly(value: object) -> "Polynomial | None":
    if isinstance(value, Polynomial):
        return value
    if isinstance(value, int):
        return Polynomial.const(value)
    return None


@dataclass(frozen=True)
class Polynomial:
    """Dense integer polynomial; coeffs[k] multiplies x^k, no trailing zeros."""

    coeffs: tuple[int, ...] = ()

    def __post_init__(self) -> None:
        if self.coeffs and self.coeffs[-1] == 0:
            raise ValueError("trailing zero coefficient; use from_coeffs")

    @staticmethod
    def from_coeffs(values: Iterable[int]) -> "Polynomial":
        coeffs = list(values)
        while coeffs and coeffs[-1] == 0:
            coeffs.pop()
        return Polynomial(tuple(coeffs))

    @staticmethod
    def const(c: int) -> "Polynomial":
        return Polynomial((c,)) if c else Polynomial()

    @staticmethod
    def zero() -> "Polynomial":
        return Polynomial()

    @staticmethod
    def one() -> "Polynomial":
        return Polynomial((1,))

    @staticmethod
    def x() -> "Polynomial":
        return Polynomial((0, 1))

    def degree(self) -> "int | float":
        """Degree, with -inf for the zero polynomial."""
        return len(self.coeffs) - 1 if self.coeffs else NEG_INF

    def coeff(self, k: int) -> int:
        return self.coeffs[k] if 0 <= k < len(self.coeffs) else 0

    def is_zero(self) -> bool:
        return not self.coeffs

    def __add__(self, other: object) -> "Polynomial":
        rhs = _as_poly(other)
        if rhs is None:
            return NotImplemented
        a, b = self.coeffs, rhs.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, v in enumerate(b):
            out[i] += v
        return Polynomial.from_coeffs(out)

    __radd__ = __add__

    def __neg__(self) -> "Polynomial":
        return Polynomial(tuple(-c for c in self.coeffs))

    def __sub__(self, other: object) -> "Polynomial":
        rhs = _as_poly(other)
        if rhs is None:
            return NotImplemented
        return self + (-rhs)

    def __rsub__(self, other: object) -> "Polynomial":
        rhs = _as_poly(other)
        if rhs is None:
            return NotImplemented
        return rhs + (-self)

    def __mul__(self, other: object) -> "Polynomial":
        rhs = _as_poly(other)
        if rhs is None:
            return NotImplemented
        if not self.coeffs or not rhs.coeffs:
            return Polynomial()
        out = [0] * (len(self.coeffs) + len(rhs.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a:
                for j, b in enumerate(rhs.coeffs):
                    out[i + j] += a * b
        return Polynomial.from_coeffs(out)

    __rmul__ = __mul__

    def __pow__(self, exponent: int) -> "Polynomial":
        if exponent < 0:
            raise ValueError(f"exponent must be non-negative, got {exponent}")
        out = Polynomial.one()
        for _ in range(exponent):  # plain iterated product, no binomial shortcut
            out = out * self
        return out

    def __call__(self, value: int) -> int:
        acc = 0
        for c in reversed(self.coeffs):
            acc = acc * value + c
        return acc

    def shift_x(self, c: int) -> "Polynomial":
        """Exact composition with x -> x + c."""
        base = Polynomial((c, 1))
        acc = Polynomial.zero()
        for coefficient in reversed(self.coeffs):
            acc = acc * base + Polynomial.const(coefficient)
        return acc

    def compose_bivar(self, image: "BivarPoly") -> "BivarPoly":
        """Exact composition substituting the bivariate image for x."""
        acc = BivarPoly.zero()
        for coefficient in reversed(self.coeffs):
            acc = acc * image + BivarPoly.const(coefficient)
        return acc

    def render(self, var: str = "x") -> str:
        """Canonical ascending-degree text, e.g. ``5 + 5*x + x^2``."""
        return _format_terms(
            [(c, _power_text(var, k)) for k, c in enumerate(self.coeffs)]
        )

    def to_json(self) -> dict:
        """Ascending coefficients, serialized as decimal strings."""
        return {"coeffs": [str(c) for c in self.coeffs]}

    @staticmethod
    def from_json(doc: Mapping) -> "Polynomial":
        return Polynomial.from_coeffs(int(c) for c in doc["coeffs"])


def _power_text(var: str, k: int) -> str:
    if k == 0:
        return ""
    if k == 1:
        return var
    return f"{var}^{k}"


def _format_terms(terms: list[tuple[int, str]]) -> str:
    pieces: list[str] = []
    for c, mono in terms:
        if c == 0:
            continue
        mag = abs(c)
        if not mono:
            body = str(mag)
        elif mag == 1:
            body = mono
        else:
            body = f"{mag}*{mono}"
        if not pieces:
            pieces.append(body if c > 0 else f"-{body}")
        else:
            pieces.append(f"+ {body}" if c > 0 else f"- {body}")
    return " ".join(pieces) if pieces else "0"


@dataclass(frozen=True)
class BivarPoly:
    """Sparse integer polynomial in x and q; terms are (xdeg, qdeg, coeff)."""

    terms: tuple[tuple[int, int, int], ...] = ()

    def __post_init__(self) -> None:
        if any(c == 0 for _, _, c in self.terms):
            raise ValueError("zero term stored; use from_dict")
        if list(self.terms) != sorted(self.terms):
            raise ValueError("terms out of canonical order; use from_dict")

    @staticmethod
    def from_dict(data: Mapping[tuple[int, int], int]) -> "BivarPoly":
        items = tuple(sorted((k, d, c) for (k, d), c in data.items() if c))
        return BivarPoly(items)

    def as_dict(self) -> dict[tuple[int, int], int]:
        return {(k, d): c for k, d, c in self.terms}

    @staticmethod
    def const(c: int) -> "BivarPoly":
        return BivarPoly(((0, 0, c),)) if c else BivarPoly()

    @staticmethod
    def zero() -> "BivarPoly":
        return BivarPoly()

    @staticmethod
    def one() -> "BivarPoly":
        return BivarPoly(((0, 0, 1),))

    @staticmethod
    def x() -> "BivarPoly":
        return BivarPoly(((1, 0, 1),))

    @staticmethod
    def q() -> "BivarPoly":
        return BivarPoly(((0, 1, 1),))

    def coeff(self, k: int, d: int) -> int:
        for xk, qd, c in self.terms:
            if xk == k and qd == d:
                return c
        return 0

    def is_zero(self) -> bool:
        return not self.terms

    def _binary(self, other: object) -> "BivarPoly | None":
        if isinstance(other, BivarPoly):
            return other
        if isinstance(other, int):
            return BivarPoly.const(other)
        return None

    def __add__(self, other: object) -> "BivarPoly":
        rhs = self._binary(other)
        if rhs is None:
            return NotImplemented
        acc = self.as_dict()
        for (k, d), c in rhs.as_dict().items():
            acc[(k, d)] = acc.get((k, d), 0) + c
        return BivarPoly.from_dict(acc)

    __radd__ = __add__

    def __neg__(self) -> "BivarPoly":
        return BivarPoly(tuple((k, d, -c) for k, d, c in self.terms))

    def __sub__(self, other: object) -> "BivarPoly":
        rhs = self._binary(other)
        if rhs is None:
            return NotImplemented
        return self + (-rhs)

    def __rsub__(self, other: object) -> "BivarPoly":
        rhs = self._binary(other)
        if rhs is None:
            return NotImplemented
        return rhs + (-self)

    def __mul__(self, other: object) -> "BivarPoly":
        rhs = self._binary(other)
        if rhs is None:
            return NotImplemented
        acc: dict[tuple[int, int], int] = {}
        for k1, d1, c1 in self.terms:
            for k2, d2, c2 in rhs.terms:
                key = (k1 + k2, d1 + d2)
                acc[key] = acc.get(key, 0) + c1 * c2
        return BivarPoly.from_dict(acc)

    __rmul__ = __mul__

    def __pow__(self, exponent: int) -> "BivarPoly":
        if exponent < 0:
            raise ValueError(f"exponent must be non-negative, got {exponent}")
        out = BivarPoly.one()
        for _ in range(exponent):
            out = out * self
        return out

    def __call__(self, x: int, q: int) -> int:
        return sum(c * x**k * q**d for k, d, c in self.terms)

    def swap(self) -> "BivarPoly":
        """Exchange the roles of x and q."""
        return BivarPoly.from_dict({(d, k): c for k, d, c in self.terms})

    def subst_q(self, value: int) -> Polynomial:
        """Set q to an integer, leaving a univariate polynomial in x."""
        acc: dict[int, int] = {}
        for k, d, c in self.terms:
            acc[k] = acc.get(k, 0) + c * value**d
        size = max(acc, default=-1) + 1
        return Polynomial.from_coeffs(acc.get(k, 0) for k in range(size))

    def render(self) -> str:
        """Canonical text ordered by total degree, e.g. ``1 + 3*q + 3*x``."""
        ordered = sorted(self.terms, key=lambda t: (t[0] + t[1], t[0]))
        terms = []
        for k, d, c in ordered:
            mono = "*".join(
                part
                for part in (_power_text("x", k), _power_text("q", d))
                if part
            )
            terms.append((c, mono))
        return _format_terms(terms)

    def to_json(self) -> list[dict]:
        """Terms as {k, d, value} rows, every number a decimal string."""
        return [
            {"k": str(k), "d": str(d), "value": str(c)} for k, d, c in self.terms
        ]

    @staticmethod
    def from_json(rows: Iterable[Mapping]) -> "BivarPoly":
        return BivarPoly.from_dict(
            {(int(row["k"]), int(row["d"])): int(row["value"]) for row in rows}
        )


def substitute(
    f: Polynomial, shift: Union[int, BivarPoly]
) -> Union[Polynomial, BivarPoly]:
    """Compose f with x -> x + c for an int shift, or x -> g for a bivariate g."""
    if isinstance(shift, BivarPoly):
        return f.compose_bivar(shift)
    return f.shift_x(shift)


def cube_poly_closed(p: int, n: int) -> Polynomial:
    """Induced-cube counting polynomial, via the (1+x)^a expansion.

    Expansion is by iterated multiplication on purpose: the binomial double
    sum in cube_count_closed is an independent route to the same numbers.
    """
    acc = Polynomial.zero()
    power = Polynomial.one()
    base = Polynomial((1, 1))
    for a in range(max_weight(p, n) + 1):
        acc = acc + binomial(n - a * p + p, a) * power
        power = power * base
    return acc


def cube_count_closed(p: int, n: int, k: int) -> int:
    """Number of induced k-cubes, via the binomial double sum."""
    if k < 0:
        return 0
    return sum(
        binomial(n - i * p + p, i) * binomial(i, k)
        for i in range(k, max_weight(p, n) + 1)
    )


def weight_poly(p: int, n: int) -> Polynomial:
    """Vertex counts by Hamming weight as a polynomial in x."""
    return Polynomial.from_coeffs(
        count_by_weight(p, n, w) for w in range(max_weight(p, n) + 1)
    )


def dist_cube_poly_closed(p: int, n: int) -> BivarPoly:
    """Bivariate cube counts, x marking dimension and q bottom distance."""
    acc = BivarPoly.zero()
    power = BivarPoly.one()
    base = BivarPoly.from_dict({(1, 0): 1, (0, 1): 1})
    for a in range(max_weight(p, n) + 1):
        acc = acc + binomial(n - a * p + p, a) * power
        power = power * base
    return acc


def dist_cube_count_closed(p: int, n: int, k: int, d: int) -> int:
    """Number of induced k-cubes with bottom at distance d of the origin."""
    if k < 0 or d < 0:
        return 0
    return binomial(n - (k + d) * p + p, k + d) * binomial(k + d, k)
