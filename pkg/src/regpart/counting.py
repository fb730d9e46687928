"""Counting functions for the partition families, identity verifiers, and the
involution pairing table.

Every statistic can be computed by exhaustive enumeration and by a
generating-function coefficient; the two signed counts with classical closed
forms (pentagonal and triangular) also support the formula method.  The
verifiers report per-n rows instead of raising: a falsified row is the most
valuable output the checker can produce.
"""

from dataclasses import dataclass
from math import isqrt
from typing import Optional

from .maps import psi, psi_stats
from .partition import (
    EllRegular,
    MaxMultiplicity,
    Partition,
    SetC,
    SetD,
    count_partitions,
    count_partitions_by_length_parity,
    enumerate_partitions,
)
from .series import gf_b, gf_c, gf_d, gf_delta, gf_signed_b

__all__ = [
    "STAT_NAMES",
    "METHOD_NAMES",
    "THEOREM_TAGS",
    "IdentityRow",
    "IdentityReport",
    "PairTable",
    "count",
    "count_range",
    "pentagonal_delta1",
    "triangular_delta3",
    "verify_identity",
    "verify_parity",
    "pair_table",
]

STAT_NAMES = ("b", "be", "bo", "d", "c", "qre", "qro", "delta")
METHOD_NAMES = ("enum", "series", "formula")
THEOREM_TAGS = ("t1", "t2", "t3", "euler", "hickerson")

_ELL_STATS = ("b", "be", "bo", "d", "c")


@dataclass(frozen=True)
class IdentityRow:
    n: int
    lhs: int
    rhs: int
    ok: bool


@dataclass(frozen=True)
class IdentityReport:
    """Per-n comparison rows for one identity; passes iff every row passes."""

    tag: str
    param: int
    max_n: int
    rows: tuple[IdentityRow, ...]

    @property
    def all_pass(self) -> bool:
        return all(row.ok for row in self.rows)

    @property
    def failures(self) -> tuple[IdentityRow, ...]:
        return tuple(row for row in self.rows if not row.ok)


@dataclass(frozen=True)
class PairTable:
    """Involution pairs plus fixed points covering the regular partitions of n."""

    ell: int
    n: int
    pairs: tuple[tuple[Partition, Partition], ...]
    fixed_points: tuple[Partition, ...]


def _sign(n: int) -> int:
    # (-1)^n from the parity bit, never by exponentiation
    return -1 if n % 2 else 1


def pentagonal_delta1(n: int) -> int:
    """Signed distinct-part count: (-1)^j when n = j(3j+-1)/2, else 0.

    Decides membership exactly: 24n + 1 must be an odd square (6j -+ 1)^2.
    """
    if n < 0:
        raise ValueError("n must be nonnegative")
    s = isqrt(24 * n + 1)
    if s * s != 24 * n + 1:
        return 0
    if (s + 1) % 6 == 0:
        j = (s + 1) // 6
    elif (s - 1) % 6 == 0:
        j = (s - 1) // 6
    else:
        return 0
    return -1 if j % 2 else 1


def triangular_delta3(n: int) -> int:
    """Signed multiplicity-at-most-3 count: (-1)^n when n = j(j+1)/2, else 0."""
    if n < 0:
        raise ValueError("n must be nonnegative")
    s = isqrt(8 * n + 1)
    if s * s != 8 * n + 1:
        return 0
    return _sign(n)


def _validate_stat_params(stat: str, ell: Optional[int], r: Optional[int]) -> None:
    if stat not in STAT_NAMES:
        raise ValueError(f"stat must be one of {STAT_NAMES}")
    if stat in _ELL_STATS:
        if ell is None:
            raise ValueError(f"stat {stat!r} needs ell")
        if ell < 2:
            raise ValueError("ell must be an integer > 1")
        if stat == "d" and ell % 2:
            raise ValueError("the d family needs even ell")
        if stat == "c" and ell % 2 == 0:
            raise ValueError("the c family needs odd ell")
    else:
        if r is None:
            raise ValueError(f"stat {stat!r} needs r")
        if r < 1:
            raise ValueError("r must be >= 1")


def _series_values(stat: str, order: int, ell: Optional[int], r: Optional[int]) -> list[int]:
    """Coefficient table for n = 0..order via the generating functions."""
    if stat == "b":
        return list(gf_b(ell, order).coeffs)
    if stat == "d":
        return list(gf_d(ell, order).coeffs)
    if stat == "c":
        return list(gf_c(ell, order).coeffs)
    if stat in ("be", "bo"):
        tot = gf_b(ell, order).coeffs
        sgn = gf_signed_b(ell, order).coeffs
        if stat == "be":
            return [(t + s) // 2 for t, s in zip(tot, sgn)]
        return [(t - s) // 2 for t, s in zip(tot, sgn)]
    if stat == "delta":
        return list(gf_delta(r, order).coeffs)
    # qre / qro: the total count of bounded-multiplicity partitions equals the
    # (r+1)-regular count (their products are the same series), so the parity
    # split comes from the total and the signed delta series.
    tot = gf_b(r + 1, order).coeffs
    sgn = gf_delta(r, order).coeffs
    if stat == "qre":
        return [(t + s) // 2 for t, s in zip(tot, sgn)]
    return [(t - s) // 2 for t, s in zip(tot, sgn)]


def _enum_value(stat: str, n: int, ell: Optional[int], r: Optional[int]) -> int:
    if stat in ("b", "be", "bo"):
        even, odd = count_partitions_by_length_parity(n, EllRegular(ell))
        return {"b": even + odd, "be": even, "bo": odd}[stat]
    if stat == "d":
        return count_partitions(n, SetD(ell))
    if stat == "c":
        return count_partitions(n, SetC(ell))
    even, odd = count_partitions_by_length_parity(n, MaxMultiplicity(r))
    return {"qre": even, "qro": odd, "delta": even - odd}[stat]


def _formula_value(stat: str, n: int, r: Optional[int]) -> int:
    if stat != "delta" or r not in (1, 3):
        raise ValueError("closed forms exist only for delta with r = 1 or r = 3")
    return pentagonal_delta1(n) if r == 1 else triangular_delta3(n)


def count(stat: str, n: int, *, ell: Optional[int] = None, r: Optional[int] = None,
          method: str = "enum") -> int:
    """One counting value.

    stat: "b" / "be" / "bo" count ell-regular partitions (all, even length,
    odd length); "d" and "c" count the distinct-part families; "qre" / "qro"
    count bounded-multiplicity partitions by length parity and "delta" their
    signed difference.  The ell statistics take ell, the rest take r.
    """
    if method not in METHOD_NAMES:
        raise ValueError(f"method must be one of {METHOD_NAMES}")
    if n < 0:
        raise ValueError("n must be nonnegative")
    _validate_stat_params(stat, ell, r)
    if method == "enum":
        return _enum_value(stat, n, ell, r)
    if method == "series":
        return _series_values(stat, n, ell, r)[n]
    return _formula_value(stat, n, r)


def count_range(stat: str, max_n: int, *, ell: Optional[int] = None,
                r: Optional[int] = None, method: str = "enum") -> list[int]:
    """Values for n = 0..max_n; the series path expands one product."""
    if method not in METHOD_NAMES:
        raise ValueError(f"method must be one of {METHOD_NAMES}")
    if max_n < 0:
        raise ValueError("max_n must be nonnegative")
    _validate_stat_params(stat, ell, r)
    if method == "series":
        return _series_values(stat, max_n, ell, r)
    if method == "formula":
        return [_formula_value(stat, n, r) for n in range(max_n + 1)]
    return [_enum_value(stat, n, ell, r) for n in range(max_n + 1)]


def _verify_t1_t2(tag: str, ell: int, max_n: int) -> IdentityReport:
    if tag == "t1":
        if ell < 2 or ell % 2:
            raise ValueError("t1 needs even ell > 1")
        family, family_gf = SetD(ell), gf_d(ell, max_n)
    else:
        if ell < 3 or ell % 2 == 0:
            raise ValueError("t2 needs odd ell > 1")
        family, family_gf = SetC(ell), gf_c(ell, max_n)
    rows = []
    for n in range(1, max_n + 1):
        even, odd = count_partitions_by_length_parity(n, EllRegular(ell))
        lhs = even - odd
        fam = count_partitions(n, family)
        rhs = _sign(n) * fam
        ok = lhs == rhs and fam == family_gf[n]
        rows.append(IdentityRow(n, lhs, rhs, ok))
    return IdentityReport(tag, ell, max_n, tuple(rows))


def _verify_t3(r: int, max_n: int) -> IdentityReport:
    if r < 2 or r % 2:
        raise ValueError("t3 needs positive even r")
    c_gf = gf_c(r + 1, max_n)
    rows = []
    for n in range(1, max_n + 1):
        even, odd = count_partitions_by_length_parity(n, MaxMultiplicity(r))
        lhs = even - odd
        fam = count_partitions(n, SetC(r + 1))
        rhs = _sign(n) * fam
        ok = lhs == rhs and fam == c_gf[n]
        rows.append(IdentityRow(n, lhs, rhs, ok))
    return IdentityReport("t3", r, max_n, tuple(rows))


def _verify_closed_form(tag: str, max_n: int) -> IdentityReport:
    r = 1 if tag == "euler" else 3
    closed = pentagonal_delta1 if tag == "euler" else triangular_delta3
    delta_gf = gf_delta(r, max_n)
    rows = []
    for n in range(1, max_n + 1):
        even, odd = count_partitions_by_length_parity(n, MaxMultiplicity(r))
        lhs = even - odd
        rhs = closed(n)
        ok = lhs == rhs and lhs == delta_gf[n]
        rows.append(IdentityRow(n, lhs, rhs, ok))
    return IdentityReport(tag, r, max_n, tuple(rows))


def verify_identity(tag: str, param: Optional[int] = None, max_n: int = 40) -> IdentityReport:
    """Check one identity for every 1 <= n <= max_n and report per-n rows.

    t1 (even ell): signed ell-regular count equals (-1)^n times the d count.
    t2 (odd ell): the same with the c count.
    t3 (even r): the signed bounded-multiplicity count equals (-1)^n times
    the c count at ell = r+1.  euler / hickerson: the signed counts at r = 1
    and r = 3 match their closed forms (param may be omitted).

    The left side comes from enumeration; the right side is cross-checked by
    enumeration or closed form and by the series coefficient.  Nothing is
    raised for a failing row; the report carries the verdicts.
    """
    if tag not in THEOREM_TAGS:
        raise ValueError(f"tag must be one of {THEOREM_TAGS}")
    if max_n < 1:
        raise ValueError("max_n must be >= 1")
    if tag in ("t1", "t2"):
        if param is None:
            raise ValueError(f"{tag} needs ell")
        return _verify_t1_t2(tag, param, max_n)
    if tag == "t3":
        if param is None:
            raise ValueError("t3 needs r")
        return _verify_t3(param, max_n)
    canonical = 1 if tag == "euler" else 3
    if param is not None and param != canonical:
        raise ValueError(f"{tag} is the r = {canonical} case; omit param or pass {canonical}")
    return _verify_closed_form(tag, max_n)


def verify_parity(ell: int, max_n: int = 60) -> IdentityReport:
    """Check that the regular count and its distinct-family partner (d for
    even ell, c for odd ell) have the same parity for every n <= max_n.

    Counts come from the series path; the method-agreement suite pins the
    series against enumeration at this scale.
    """
    if ell < 2:
        raise ValueError("ell must be an integer > 1")
    if max_n < 1:
        raise ValueError("max_n must be >= 1")
    total = gf_b(ell, max_n)
    partner = gf_d(ell, max_n) if ell % 2 == 0 else gf_c(ell, max_n)
    rows = []
    for n in range(1, max_n + 1):
        lhs, rhs = total[n], partner[n]
        rows.append(IdentityRow(n, lhs, rhs, (lhs - rhs) % 2 == 0))
    return IdentityReport("parity", ell, max_n, tuple(rows))


def pair_table(ell: int, n: int) -> PairTable:
    """Split the ell-regular partitions of n into involution pairs plus fixed
    points.

    Each pair appears once, oriented odd-length member first (the orientation
    printed tables use; the involution flips parity, so exactly one member
    has odd length).  Pairs are listed by first encounter in enumeration
    order, fixed points in enumeration order.
    """
    if ell < 2:
        raise ValueError("ell must be an integer > 1")
    if n < 0:
        raise ValueError("n must be nonnegative")
    pairs: list[tuple[Partition, Partition]] = []
    fixed: list[Partition] = []
    seen: set[Partition] = set()
    for lam in enumerate_partitions(n, EllRegular(ell)):
        if lam in seen:
            continue
        e, t = psi_stats(lam, ell)
        if e == 0 and t == 0:
            fixed.append(lam)
            continue
        mu, _ = psi(lam, ell)
        seen.add(mu)
        pairs.append((lam, mu) if lam.length % 2 else (mu, lam))
    return PairTable(ell, n, tuple(pairs), tuple(fixed))
