"""Truncated formal power series in t over an exact coefficient ring.

Coefficients may be ints, Polynomials, or BivarPolys; a ring is described
by its zero and one together with an int embedding.  One engine therefore
serves every generating function checked here.  Arithmetic is exact and
never consults orders beyond the truncation.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Any, Callable, Sequence

from .cubes import enumerate_cubes
from .graph import build
from .polynomials import BivarPoly, Polynomial, cube_count_closed
from .sequences import binomial, pfib
from .strings import max_weight

DEFAULT_ORDER = 20


@dataclass(frozen=True)
class CoefficientRing:
    zero: Any
    one: Any
    from_int: Callable[[int], Any]


INTS = CoefficientRing(0, 1, int)
POLYS = CoefficientRing(Polynomial.zero(), Polynomial.one(), Polynomial.const)
BIVAR = CoefficientRing(BivarPoly.zero(), BivarPoly.one(), BivarPoly.const)


@dataclass(frozen=True)
class TruncatedSeries:
    """Power series in t with exactly order+1 stored coefficients."""

    ring: CoefficientRing
    coeffs: tuple[Any, ...]

    @property
    def order(self) -> int:
        return len(self.coeffs) - 1

    @staticmethod
    def from_coeffs(
        ring: CoefficientRing, values: Sequence[Any], order: int
    ) -> "TruncatedSeries":
        vals = list(values)[: order + 1]
        vals.extend([ring.zero] * (order + 1 - len(vals)))
        return TruncatedSeries(ring, tuple(vals))

    @staticmethod
    def zero(ring: CoefficientRing, order: int) -> "TruncatedSeries":
        return TruncatedSeries.from_coeffs(ring, [], order)

    @staticmethod
    def one(ring: CoefficientRing, order: int) -> "TruncatedSeries":
        return TruncatedSeries.from_coeffs(ring, [ring.one], order)

    def coeff(self, k: int) -> Any:
        if not 0 <= k <= self.order:
            raise ValueError(f"order {k} outside the truncation [0, {self.order}]")
        return self.coeffs[k]

    def _check_compatible(self, other: "TruncatedSeries") -> None:
        if self.ring != other.ring:
            raise ValueError("series over different coefficient rings")
        if self.order != other.order:
            raise ValueError(
                f"truncation orders differ: {self.order} vs {other.order}"
            )

    def __add__(self, other: "TruncatedSeries") -> "TruncatedSeries":
        if not isinstance(other, TruncatedSeries):
            return NotImplemented
        self._check_compatible(other)
        return TruncatedSeries(
            self.ring, tuple(a + b for a, b in zip(self.coeffs, other.coeffs))
        )

    def __neg__(self) -> "TruncatedSeries":
        return TruncatedSeries(self.ring, tuple(-a for a in self.coeffs))

    def __sub__(self, other: "TruncatedSeries") -> "TruncatedSeries":
        if not isinstance(other, TruncatedSeries):
            return NotImplemented
        return self + (-other)

    def __mul__(self, other: "TruncatedSeries") -> "TruncatedSeries":
        if not isinstance(other, TruncatedSeries):
            return NotImplemented
        self._check_compatible(other)
        out = [self.ring.zero] * (self.order + 1)
        for i, a in enumerate(self.coeffs):
            if a == self.ring.zero:
                continue
            for j in range(self.order + 1 - i):
                b = other.coeffs[j]
                if b != self.ring.zero:
                    out[i + j] = out[i + j] + a * b
        return TruncatedSeries(self.ring, tuple(out))

    def __pow__(self, exponent: int) -> "TruncatedSeries":
        if exponent < 0:
            raise ValueError(f"exponent must be non-negative, got {exponent}")
        out = TruncatedSeries.one(self.ring, self.order)
        for _ in range(exponent):
            out = out * self
        return out

    def shift(self, e: int) -> "TruncatedSeries":
        """Multiply by t^e at the same truncation order."""
        if e < 0:
            raise ValueError(f"shift must be non-negative, got {e}")
        vals = (self.ring.zero,) * e + self.coeffs[: self.order + 1 - e]
        return TruncatedSeries(self.ring, vals)

    def inverse(self) -> "TruncatedSeries":
        """Multiplicative inverse via the standard recurrence.

        Requires the constant coefficient to be the ring unit.
        """
        if self.coeffs[0] != self.ring.one:
            raise ValueError("series inverse needs constant coefficient one")
        inv: list[Any] = [self.ring.one]
        for m in range(1, self.order + 1):
            acc = self.ring.zero
            for i in range(1, m + 1):
                acc = acc + self.coeffs[i] * inv[m - i]
            inv.append(-acc)
        return TruncatedSeries(self.ring, tuple(inv))


def series_add(a: TruncatedSeries, b: TruncatedSeries) -> TruncatedSeries:
    return a + b


def series_mul(a: TruncatedSeries, b: TruncatedSeries) -> TruncatedSeries:
    return a * b


def series_inverse(a: TruncatedSeries) -> TruncatedSeries:
    return a.inverse()


def pfib_series(p: int, order: int = DEFAULT_ORDER) -> TruncatedSeries:
    """The series whose t^n coefficient is F^p_n."""
    return TruncatedSeries.from_coeffs(
        INTS, [pfib(p, i) for i in range(order + 1)], order
    )


def gap_denominator(
    ring: CoefficientRing, marker: Any, p: int, order: int
) -> TruncatedSeries:
    """The series 1 - t - marker * t^{p+1}, truncated at order."""
    vals = [ring.zero] * (order + 1)
    vals[0] = ring.one
    if order >= 1:
        vals[1] = vals[1] - ring.one
    if p + 1 <= order:
        vals[p + 1] = vals[p + 1] - marker
    return TruncatedSeries(ring, tuple(vals))


def _marked_rational(
    ring: CoefficientRing, marker: Any, p: int, order: int
) -> TruncatedSeries:
    # (1 + marker*t + ... + marker*t^p) / (1 - t - marker*t^{p+1})
    numerator = TruncatedSeries.from_coeffs(
        ring, [ring.one] + [marker] * p, order
    )
    return numerator * gap_denominator(ring, marker, p, order).inverse()


GF_KINDS: dict[str, tuple[CoefficientRing, Any]] = {
    "cube": (POLYS, Polynomial((1, 1))),
    "weight": (POLYS, Polynomial.x()),
    "distance": (BIVAR, BivarPoly.from_dict({(1, 0): 1, (0, 1): 1})),
}


def rational_gf(p: int, kind: str, order: int = DEFAULT_ORDER) -> TruncatedSeries:
    """One of the three rational generating functions, truncated at order.

    The t^n coefficient is the cube polynomial, the weight enumerator, or
    the bivariate distance refinement of the (p, n) graph, depending on
    which marker sits on the lowered coordinate.
    """
    if p < 0:
        raise ValueError(f"p must be non-negative, got {p}")
    try:
        ring, marker = GF_KINDS[kind]
    except KeyError:
        raise ValueError(f"unknown generating function kind {kind!r}") from None
    return _marked_rational(ring, marker, p, order)


def verify_weight_gf_expansion(p: int, order: int = DEFAULT_ORDER) -> bool:
    """Cross-check the marked rational series against two other forms.

    With y the marker variable, S = (1 + y*t + ... + y*t^p)/(1 - t - y*t^{p+1})
    must satisfy t^p * S = 1/(1 - t - y*t^{p+1}) - (1 + t + ... + t^{p-1}),
    and its t^n coefficient must expand to sum_a binom(n - a*p + p, a) y^a.
    Both sides are computed independently, coefficient by coefficient.
    """
    if p < 0:
        raise ValueError(f"p must be non-negative, got {p}")
    y = Polynomial.x()
    marked = _marked_rational(POLYS, y, p, order)
    reciprocal = gap_denominator(POLYS, y, p, order + p).inverse()
    for m in range(p):
        if reciprocal.coeff(m) != Polynomial.one():
            return False
    for m in range(order + 1):
        if marked.coeff(m) != reciprocal.coeff(m + p):
            return False
    for m in range(order + 1):
        expansion = Polynomial.from_coeffs(
            binomial(m - a * p + p, a) for a in range(max_weight(p, m) + 1)
        )
        if marked.coeff(m) != expansion:
            return False
    return True


def verify_cube_count_gf(
    p: int, k: int, order: int = DEFAULT_ORDER, graph_cap: int = 10
) -> bool:
    """Coefficient check of the fixed-k cube-count generating function.

    For k >= 1 the series is t^(kp-p+k) / (1 - t - t^{p+1})^(k+1); its t^n
    coefficient must match the closed-form count for n <= order and the
    exhaustive count for n <= graph_cap.  For k = 0 the exponent would be
    negative, so the reciprocal is read shifted by p instead, which must
    reproduce the vertex counts F^p_{n+p+1}.
    """
    if k < 0:
        raise ValueError(f"k must be non-negative, got {k}")
    oracle_limit = min(order, graph_cap)
    if k == 0:
        reciprocal = gap_denominator(INTS, 1, p, order + p).inverse()
        for n in range(order + 1):
            value = reciprocal.coeff(n + p)
            if value != pfib(p, n + p + 1):
                return False
            if value != cube_count_closed(p, n, 0):
                return False
        for n in range(oracle_limit + 1):
            if reciprocal.coeff(n + p) != build(p, n).vertex_count:
                return False
        return True
    exponent = k * p - p + k
    powered = gap_denominator(INTS, 1, p, order).inverse() ** (k + 1)
    series = powered.shift(exponent) if exponent <= order else TruncatedSeries.zero(
        INTS, order
    )
    for n in range(order + 1):
        if series.coeff(n) != cube_count_closed(p, n, k):
            return False
    for n in range(oracle_limit + 1):
        if series.coeff(n) != len(enumerate_cubes(build(p, n), k)):
            return False
    return True
