"""Integer partitions as canonical part -> multiplicity maps, with constrained
exhaustive enumeration.

A partition is stored as (part, multiplicity) pairs with parts strictly
decreasing, so equality of the pair tuples is equality of partitions.
Enumeration order is reverse-lexicographic on the flattened part sequence,
e.g. for n = 4: (4), (3,1), (2,2), (2,1,1), (1,1,1,1).
"""

import re
from bisect import bisect_right
from dataclasses import dataclass
from math import inf
from typing import Iterable, Iterator, Mapping, Union

__all__ = [
    "ParseError",
    "DomainError",
    "Partition",
    "EMPTY",
    "parse_partition",
    "format_partition",
    "Constraint",
    "All",
    "EllRegular",
    "MaxMultiplicity",
    "DistinctWithAllowedResidues",
    "DistinctOddNotDivisible",
    "SetA",
    "SetD",
    "SetC",
    "satisfies",
    "enumerate_partitions",
    "count_partitions",
    "count_partitions_by_length_parity",
]


class ParseError(ValueError):
    """Malformed partition literal."""


class DomainError(ValueError):
    """Input lies outside an operation's domain."""


class Partition:
    """An integer partition, immutable and hashable.

    The canonical form is a tuple of (part, multiplicity) pairs with parts
    strictly decreasing and every multiplicity >= 1.  ``weight`` is the
    partitioned integer, ``length`` the number of parts counted with
    multiplicity.
    """

    __slots__ = ("_pairs", "_weight", "_length", "_hash")

    def __init__(self, parts: Union[Mapping[int, int], Iterable[tuple[int, int]]] = ()):
        counts: dict[int, int] = {}
        items = parts.items() if isinstance(parts, Mapping) else parts
        for v, m in items:
            if not isinstance(v, int) or not isinstance(m, int):
                raise ValueError("parts and multiplicities must be integers")
            if v < 1:
                raise ValueError(f"part must be >= 1, got {v}")
            if m < 1:
                raise ValueError(f"multiplicity must be >= 1, got {m}")
            counts[v] = counts.get(v, 0) + m
        self._pairs = tuple(sorted(counts.items(), reverse=True))
        self._init_sums()

    def _init_sums(self) -> None:
        w = 0
        length = 0
        for v, m in self._pairs:
            w += v * m
            length += m
        self._weight = w
        self._length = length
        self._hash = None

    @classmethod
    def _trusted(cls, pairs: tuple[tuple[int, int], ...]) -> "Partition":
        # pairs must already be canonical: strictly decreasing, mults >= 1
        self = object.__new__(cls)
        self._pairs = pairs
        self._init_sums()
        return self

    @classmethod
    def from_parts(cls, parts: Iterable[int]) -> "Partition":
        """Build from a flat iterable of parts, e.g. ``[5, 3, 3, 1]``."""
        counts: dict[int, int] = {}
        for v in parts:
            counts[v] = counts.get(v, 0) + 1
        return cls(counts)

    @property
    def pairs(self) -> tuple[tuple[int, int], ...]:
        return self._pairs

    @property
    def weight(self) -> int:
        return self._weight

    @property
    def length(self) -> int:
        return self._length

    def multiplicity(self, part: int) -> int:
        for v, m in self._pairs:
            if v == part:
                return m
            if v < part:
                return 0
        return 0

    def flatten(self) -> tuple[int, ...]:
        """Flat part sequence, largest first: ``(5, 3, 3, 1)``."""
        out: list[int] = []
        for v, m in self._pairs:
            out.extend((v,) * m)
        return tuple(out)

    def __eq__(self, other: object):
        if not isinstance(other, Partition):
            return NotImplemented
        return self._pairs == other._pairs

    def __hash__(self) -> int:
        h = self._hash
        if h is None:
            h = self._hash = hash(self._pairs)
        return h

    def __repr__(self) -> str:
        return f"Partition({format_partition(self)!r})"

    def __str__(self) -> str:
        return format_partition(self)


EMPTY = Partition()

_TERM_RE = re.compile(r"([0-9]+)(?:\^([0-9]+))?\Z")


def parse_partition(text: str) -> Partition:
    """Parse a partition literal such as ``"5,4,3^2,2^2,1"``.

    Grammar: ``partition := "()" | term ("," term)*`` with
    ``term := INT ("^" INT)?``; parts must be strictly decreasing and a
    missing exponent means multiplicity 1.  ``"()"`` is the empty partition.
    """
    if text == "()":
        return EMPTY
    if not text:
        raise ParseError("empty literal (the empty partition is written '()')")
    pairs: list[tuple[int, int]] = []
    prev = None
    for term in text.split(","):
        match = _TERM_RE.match(term)
        if match is None:
            raise ParseError(f"bad term {term!r}")
        part = int(match.group(1))
        mult = int(match.group(2)) if match.group(2) is not None else 1
        if part == 0:
            raise ParseError("zero part")
        if mult == 0:
            raise ParseError("zero multiplicity")
        if prev is not None and part >= prev:
            raise ParseError("parts must be strictly decreasing")
        prev = part
        pairs.append((part, mult))
    return Partition._trusted(tuple(pairs))


def format_partition(p: Partition) -> str:
    """Canonical literal: multiplicity 1 omits the exponent; empty is ``"()"``."""
    if not p.pairs:
        return "()"
    return ",".join(f"{v}^{m}" if m > 1 else str(v) for v, m in p.pairs)


class Constraint:
    """Membership filter for a partition family.

    Subclasses override ``part_ok`` and ``_part_rule``.  ``_part_rule(part)``
    returns ``(stride, cap)``: the allowed multiplicities of ``part`` are the
    positive multiples of ``stride`` up to ``cap`` (``cap is None`` means
    unbounded).  Everything else (membership tests, enumeration, counting)
    derives from these two rules.
    """

    def part_ok(self, part: int) -> bool:
        return True

    def _part_rule(self, part: int) -> tuple[int, Union[int, None]]:
        return (1, None)

    def mult_ok(self, part: int, mult: int) -> bool:
        stride, cap = self._part_rule(part)
        return mult % stride == 0 and (cap is None or mult <= cap)

    def satisfies(self, p: Partition) -> bool:
        return all(self.part_ok(v) and self.mult_ok(v, m) for v, m in p.pairs)


@dataclass(frozen=True)
class All(Constraint):
    """Every partition."""


@dataclass(frozen=True)
class EllRegular(Constraint):
    """No part divisible by ell."""

    ell: int

    def __post_init__(self):
        if self.ell < 2:
            raise ValueError("EllRegular needs ell >= 2")

    def part_ok(self, part: int) -> bool:
        return part % self.ell != 0


@dataclass(frozen=True)
class MaxMultiplicity(Constraint):
    """Each part occurs at most r times."""

    r: int

    def __post_init__(self):
        if self.r < 1:
            raise ValueError("MaxMultiplicity needs r >= 1")

    def _part_rule(self, part: int) -> tuple[int, Union[int, None]]:
        return (1, self.r)


@dataclass(frozen=True)
class DistinctWithAllowedResidues(Constraint):
    """Distinct parts whose residues mod ell lie in a fixed set."""

    ell: int
    residues: frozenset[int]

    def __post_init__(self):
        if self.ell < 1:
            raise ValueError("modulus must be >= 1")
        object.__setattr__(self, "residues", frozenset(self.residues))
        if any(res < 0 or res >= self.ell for res in self.residues):
            raise ValueError("residues must lie in [0, ell)")

    def part_ok(self, part: int) -> bool:
        return part % self.ell in self.residues

    def _part_rule(self, part: int) -> tuple[int, Union[int, None]]:
        return (1, 1)


@dataclass(frozen=True)
class DistinctOddNotDivisible(Constraint):
    """Distinct odd parts, none divisible by ell."""

    ell: int

    def __post_init__(self):
        if self.ell < 2:
            raise ValueError("DistinctOddNotDivisible needs ell > 1")

    def part_ok(self, part: int) -> bool:
        return part % 2 == 1 and part % self.ell != 0

    def _part_rule(self, part: int) -> tuple[int, Union[int, None]]:
        return (1, 1)


@dataclass(frozen=True)
class SetA(Constraint):
    """Fixed points of the even-case involution (even ell only).

    For ell = 0 (mod 4): distinct odd parts, plus parts = ell/2 (mod ell)
    with even multiplicity.  For ell = 2 (mod 4): odd parts only, where
    parts = ell/2 (mod ell) may repeat freely and all other parts are
    distinct.
    """

    ell: int

    def __post_init__(self):
        if self.ell < 2 or self.ell % 2:
            raise ValueError("SetA needs even ell > 1")

    def part_ok(self, part: int) -> bool:
        if self.ell % 4 == 0:
            return part % 2 == 1 or part % self.ell == self.ell // 2
        return part % 2 == 1

    def _part_rule(self, part: int) -> tuple[int, Union[int, None]]:
        if part % self.ell == self.ell // 2:
            return (2, None) if self.ell % 4 == 0 else (1, None)
        return (1, 1)


@dataclass(frozen=True)
class SetD(Constraint):
    """Distinct parts with residue mod ell in {0} or odd (even ell only)."""

    ell: int

    def __post_init__(self):
        if self.ell < 2 or self.ell % 2:
            raise ValueError("SetD needs even ell > 1")

    def part_ok(self, part: int) -> bool:
        rem = part % self.ell
        return rem == 0 or rem % 2 == 1

    def _part_rule(self, part: int) -> tuple[int, Union[int, None]]:
        return (1, 1)


@dataclass(frozen=True)
class SetC(Constraint):
    """Distinct odd parts, none divisible by ell."""

    ell: int

    def __post_init__(self):
        if self.ell < 2:
            raise ValueError("SetC needs ell > 1")

    def part_ok(self, part: int) -> bool:
        return part % 2 == 1 and part % self.ell != 0

    def _part_rule(self, part: int) -> tuple[int, Union[int, None]]:
        return (1, 1)


ALL = All()


def satisfies(p: Partition, constraint: Constraint) -> bool:
    """Exact membership test of p in the family described by constraint."""
    return constraint.satisfies(p)


def _compiled(n: int, constraint: Constraint):
    """Precompute the per-part tables that drive the search tree.

    Returns (asc, strides, caps, budget) where asc holds the admissible part
    values ascending and budget[j] bounds the weight obtainable from
    asc[:j] (inf once any part below j is unbounded)."""
    asc = [v for v in range(1, n + 1) if constraint.part_ok(v)]
    strides: list[int] = []
    caps: list[Union[int, None]] = []
    budget: list = [0]
    total: Union[int, float] = 0
    for v in asc:
        stride, cap = constraint._part_rule(v)
        strides.append(stride)
        caps.append(cap)
        if total is not inf:
            if cap is None:
                total = inf
            else:
                total += v * (cap - cap % stride)
        budget.append(total)
    return asc, strides, caps, budget


def enumerate_partitions(n: int, constraint: Constraint = ALL) -> Iterator[Partition]:
    """Yield every satisfying partition of n exactly once.

    Order is reverse-lexicographic on the flattened part sequence, which makes
    command-line output and golden tests stable.  n = 0 yields the empty
    partition (it belongs to every family here).
    """
    if n < 0:
        raise ValueError("n must be nonnegative")
    if n == 0:
        yield EMPTY
        return
    asc, strides, caps, budget = _compiled(n, constraint)

    def rec(rem: int, hi: int, acc: tuple) -> Iterator[tuple]:
        j = bisect_right(asc, rem, 0, hi)
        while j:
            j -= 1
            v = asc[j]
            top = rem // v
            cap = caps[j]
            if cap is not None and cap < top:
                top = cap
            stride = strides[j]
            top -= top % stride
            bj = budget[j]
            m = top
            while m:
                rest = rem - v * m
                if rest == 0:
                    yield (*acc, (v, m))
                elif rest <= bj:
                    yield from rec(rest, j, (*acc, (v, m)))
                else:
                    break
                m -= stride

    for pairs in rec(n, len(asc), ()):
        yield Partition._trusted(pairs)


def count_partitions_by_length_parity(n: int, constraint: Constraint = ALL) -> tuple[int, int]:
    """Exhaustively count satisfying partitions of n, split by length parity.

    Walks the identical search tree as :func:`enumerate_partitions`, visiting
    one leaf per partition, but skips materializing the stream; this is still
    enumeration, just without the object overhead.  Returns
    (even-length count, odd-length count).
    """
    if n < 0:
        raise ValueError("n must be nonnegative")
    if n == 0:
        return (1, 0)
    asc, strides, caps, budget = _compiled(n, constraint)
    counts = [0, 0]

    def rec(rem: int, hi: int, par: int) -> None:
        j = bisect_right(asc, rem, 0, hi)
        while j:
            j -= 1
            v = asc[j]
            top = rem // v
            cap = caps[j]
            if cap is not None and cap < top:
                top = cap
            stride = strides[j]
            top -= top % stride
            bj = budget[j]
            m = top
            while m:
                rest = rem - v * m
                if rest == 0:
                    counts[(par + m) & 1] += 1
                elif rest <= bj:
                    rec(rest, j, (par + m) & 1)
                else:
                    break
                m -= stride

    rec(n, len(asc), 0)
    return (counts[0], counts[1])


def count_partitions(n: int, constraint: Constraint = ALL) -> int:
    """Number of satisfying partitions of n, by exhaustive enumeration."""
    even, odd = count_partitions_by_length_parity(n, constraint)
    return even + odd
