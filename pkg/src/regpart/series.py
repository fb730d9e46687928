"""Exact truncated power series over the integers.

A TruncatedSeries holds coefficients c_0..c_N of a formal power series mod
q^(N+1); all arithmetic is exact (Python integers).  The module also builds
the sparse infinite products that generate every counting sequence used by
the identity checks.  Truncation is applied factor by factor: the factor in
q^k only touches degrees >= k, so stopping the product at k = N is exact.
"""

from dataclasses import dataclass, field
from typing import Callable, Optional

__all__ = [
    "TruncatedSeries",
    "FactorSpec",
    "series_mul",
    "series_reciprocal",
    "product",
    "gf_b",
    "gf_signed_b",
    "gf_d",
    "gf_c",
    "gf_delta",
    "gf",
    "GF_KINDS",
]


@dataclass(frozen=True)
class TruncatedSeries:
    """Formal power series mod q^(order+1) with exact integer coefficients."""

    coeffs: tuple[int, ...]

    def __post_init__(self):
        if not self.coeffs:
            raise ValueError("a series needs at least the constant coefficient")
        object.__setattr__(self, "coeffs", tuple(int(c) for c in self.coeffs))

    @property
    def order(self) -> int:
        return len(self.coeffs) - 1

    def __getitem__(self, n: int) -> int:
        return self.coeffs[n]

    @classmethod
    def one(cls, order: int) -> "TruncatedSeries":
        return cls((1,) + (0,) * order)

    def mul(self, other: "TruncatedSeries") -> "TruncatedSeries":
        """Cauchy product truncated at the (shared) order."""
        if self.order != other.order:
            raise ValueError(f"order mismatch: {self.order} vs {other.order}")
        a, b = self.coeffs, other.coeffs
        top = self.order
        out = [0] * (top + 1)
        for i, ai in enumerate(a):
            if ai:
                for j in range(top - i + 1):
                    out[i + j] += ai * b[j]
        return TruncatedSeries(tuple(out))

    __mul__ = mul

    def reciprocal(self) -> "TruncatedSeries":
        """Series b with self * b = 1 to the same order.

        Uses the standard coefficient recurrence; requires a constant term of
        +1 or -1 so that everything stays in the integers.
        """
        c0 = self.coeffs[0]
        if c0 not in (1, -1):
            raise ValueError("reciprocal needs constant term +1 or -1")
        a = self.coeffs
        top = self.order
        b = [c0] + [0] * top
        for i in range(1, top + 1):
            s = 0
            for j in range(1, i + 1):
                if a[j]:
                    s += a[j] * b[i - j]
            b[i] = -c0 * s
        return TruncatedSeries(tuple(b))


def series_mul(a: TruncatedSeries, b: TruncatedSeries) -> TruncatedSeries:
    return a.mul(b)


def series_reciprocal(a: TruncatedSeries) -> TruncatedSeries:
    return a.reciprocal()


def _always(_k: int) -> bool:
    return True


@dataclass(frozen=True)
class FactorSpec:
    """One sparse factor family for :func:`product`.

    For every k >= 1 passing the ``exponents`` predicate the product gains one
    factor in q^k: ``(1 - q^k)``, ``(1 + q^k)``, or the signed block
    ``1 + (-q^k) + (-q^k)^2 + ... + (-q^k)^r``.
    """

    kind: str  # "one-minus" | "one-plus" | "geometric-block"
    exponents: Callable[[int], bool] = field(default=_always)
    block: Optional[int] = None  # r, for geometric-block only

    def __post_init__(self):
        if self.kind not in ("one-minus", "one-plus", "geometric-block"):
            raise ValueError(f"unknown factor kind {self.kind!r}")
        if self.kind == "geometric-block":
            if self.block is None or self.block < 1:
                raise ValueError("geometric-block needs block r >= 1")
        elif self.block is not None:
            raise ValueError("block only applies to geometric-block")

    @classmethod
    def one_minus(cls, exponents: Callable[[int], bool] = _always) -> "FactorSpec":
        return cls("one-minus", exponents)

    @classmethod
    def one_plus(cls, exponents: Callable[[int], bool] = _always) -> "FactorSpec":
        return cls("one-plus", exponents)

    @classmethod
    def geometric_block(cls, r: int, exponents: Callable[[int], bool] = _always) -> "FactorSpec":
        return cls("geometric-block", exponents, r)


def product(spec: FactorSpec, order: int) -> TruncatedSeries:
    """Expand spec's product over k = 1..order, truncated at the given order."""
    if order < 0:
        raise ValueError("order must be nonnegative")
    c = [0] * (order + 1)
    c[0] = 1
    pred = spec.exponents
    if spec.kind == "one-minus":
        for k in range(1, order + 1):
            if pred(k):
                for i in range(order, k - 1, -1):
                    c[i] -= c[i - k]
    elif spec.kind == "one-plus":
        for k in range(1, order + 1):
            if pred(k):
                for i in range(order, k - 1, -1):
                    c[i] += c[i - k]
    else:
        r = spec.block
        for k in range(1, order + 1):
            if pred(k):
                nxt = c[:]
                for m in range(1, r + 1):
                    shift = m * k
                    if shift > order:
                        break
                    sign = -1 if m % 2 else 1
                    for i in range(shift, order + 1):
                        if c[i - shift]:
                            nxt[i] += sign * c[i - shift]
                c = nxt
    return TruncatedSeries(tuple(c))


def _check_ell(ell: int) -> None:
    if ell < 2:
        raise ValueError("ell must be an integer > 1")


def gf_b(ell: int, order: int) -> TruncatedSeries:
    """Counts of ell-regular partitions: the product of 1/(1 - q^k) over all
    k not divisible by ell."""
    _check_ell(ell)
    return product(FactorSpec.one_minus(lambda k: k % ell != 0), order).reciprocal()


def gf_signed_b(ell: int, order: int) -> TruncatedSeries:
    """Even-length minus odd-length counts of ell-regular partitions.

    Standard sign-weighted product used as an independent oracle: marking
    each part with -1 turns 1/(1 - q^k) into 1/(1 + q^k), so the coefficient
    of q^n is the signed count.
    """
    _check_ell(ell)
    return product(FactorSpec.one_plus(lambda k: k % ell != 0), order).reciprocal()


def gf_d(ell: int, order: int) -> TruncatedSeries:
    """Counts of partitions into distinct parts with residue mod ell in
    {0} or odd (even ell): the product of (1 + q^k) over that residue set."""
    if ell < 2 or ell % 2:
        raise ValueError("the d family needs even ell > 1")
    return product(
        FactorSpec.one_plus(lambda k: k % ell == 0 or (k % ell) % 2 == 1), order
    )


def gf_c(ell: int, order: int) -> TruncatedSeries:
    """Counts of partitions into distinct odd parts not divisible by ell:
    the product of (1 + q^k) over odd k with ell not dividing k."""
    _check_ell(ell)
    return product(
        FactorSpec.one_plus(lambda k: k % 2 == 1 and k % ell != 0), order
    )


def gf_delta(r: int, order: int) -> TruncatedSeries:
    """Even-length minus odd-length counts of partitions with every
    multiplicity <= r.

    Standard sign-weighted product used as an independent oracle: each part k
    contributes the signed block 1 + (-q^k) + ... + (-q^k)^r.
    """
    if r < 1:
        raise ValueError("r must be >= 1")
    return product(FactorSpec.geometric_block(r), order)


GF_KINDS = ("b", "signed-b", "d", "c", "delta")


def gf(kind: str, order: int, *, ell: Optional[int] = None, r: Optional[int] = None) -> TruncatedSeries:
    """Dispatch on a series kind name: "b", "signed-b", "d", "c" take ell;
    "delta" takes r."""
    if kind not in GF_KINDS:
        raise ValueError(f"kind must be one of {GF_KINDS}")
    if kind == "delta":
        if r is None:
            raise ValueError("kind 'delta' needs r")
        return gf_delta(r, order)
    if ell is None:
        raise ValueError(f"kind {kind!r} needs ell")
    if kind == "b":
        return gf_b(ell, order)
    if kind == "signed-b":
        return gf_signed_b(ell, order)
    if kind == "d":
        return gf_d(ell, order)
    return gf_c(ell, order)
