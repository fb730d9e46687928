"""Constructive maps on partitions.

Two involutions (psi_even, psi_odd) act on regular partitions, preserve the
weight, and flip the parity of the length; each is driven by a pair of
statistics, a largest even part and a largest repeated part.  Two bijections
work by repeated merging or splitting: sigma turns the involution's fixed
points into distinct-part partitions, and glaisher_phi maps bounded
multiplicity partitions onto regular ones.  Every multi-step map returns a
MapTrace recording its intermediate partitions.

Step scheduling: by default each trace step is one simultaneous round, acting
once on every applicable part value; that is the schedule whose intermediate
partitions match the usual printed chains.  The final partition does not
depend on the schedule (confluence), which can be checked against the
single-step "largest" / "smallest" strategies.
"""

from dataclasses import dataclass
from enum import Enum

from .partition import (
    DomainError,
    EllRegular,
    MaxMultiplicity,
    Partition,
    SetA,
    SetD,
)

__all__ = [
    "Action",
    "CaseLabel",
    "TraceStep",
    "MapTrace",
    "stat_e_even",
    "stat_t_even",
    "stat_e_odd",
    "stat_t_odd",
    "psi_stats",
    "psi_even",
    "psi_odd",
    "psi",
    "sigma",
    "sigma_inv",
    "glaisher_phi",
    "glaisher_phi_inv",
    "STRATEGIES",
]

STRATEGIES = ("rounds", "largest", "smallest")


class Action(Enum):
    MERGE = "merge"
    SPLIT = "split"


class CaseLabel(Enum):
    """Which branch an involution application took."""

    MERGE_CASE = "MergeCase"
    SPLIT_CASE = "SplitCase"


@dataclass(frozen=True)
class TraceStep:
    action: Action
    parts: tuple[int, ...]  # part values acted on, largest first
    result: Partition


@dataclass(frozen=True)
class MapTrace:
    """Step-by-step record of a map run; every step preserves the weight."""

    initial: Partition
    steps: tuple[TraceStep, ...]

    @property
    def final(self) -> Partition:
        return self.steps[-1].result if self.steps else self.initial

    def chain(self) -> tuple[Partition, ...]:
        """The initial partition followed by each step's result."""
        return (self.initial, *(s.result for s in self.steps))


def _require_regular(p: Partition, ell: int) -> None:
    for v, _ in p.pairs:
        if v % ell == 0:
            raise DomainError(f"partition has a part divisible by {ell}")


def _require_even_ell(ell: int) -> None:
    if ell < 2 or ell % 2:
        raise ValueError("ell must be an even integer > 1")


def _require_odd_ell(ell: int) -> None:
    if ell < 3 or ell % 2 == 0:
        raise ValueError("ell must be an odd integer > 1")


def stat_e_even(p: Partition, ell: int) -> int:
    """Largest even part with odd multiplicity, or 0 if there is none."""
    _require_even_ell(ell)
    _require_regular(p, ell)
    return max((v for v, m in p.pairs if v % 2 == 0 and m % 2 == 1), default=0)


def stat_t_even(p: Partition, ell: int) -> int:
    """Largest repeated part not congruent to ell/2 mod ell, or 0 if none."""
    _require_even_ell(ell)
    _require_regular(p, ell)
    half = ell // 2
    return max((v for v, m in p.pairs if m >= 2 and v % ell != half), default=0)


def stat_e_odd(p: Partition, ell: int) -> int:
    """Largest even part of multiplicity exactly 1, or 0 if there is none.

    The 0 convention covers both "no even part" and "even parts exist but all
    repeat"; the involution suite validates the latter case exhaustively.
    """
    _require_odd_ell(ell)
    _require_regular(p, ell)
    return max((v for v, m in p.pairs if v % 2 == 0 and m == 1), default=0)


def stat_t_odd(p: Partition, ell: int) -> int:
    """Largest repeated part, or 0 when all parts are distinct."""
    _require_odd_ell(ell)
    _require_regular(p, ell)
    return max((v for v, m in p.pairs if m >= 2), default=0)


def psi_stats(p: Partition, ell: int) -> tuple[int, int]:
    """The (e, t) statistic pair for the involution at this ell."""
    if ell % 2 == 0:
        return stat_e_even(p, ell), stat_t_even(p, ell)
    return stat_e_odd(p, ell), stat_t_odd(p, ell)


def _take(counts: dict, v: int, k: int) -> None:
    m = counts[v] - k
    if m:
        counts[v] = m
    else:
        del counts[v]


def _put(counts: dict, v: int, k: int) -> None:
    counts[v] = counts.get(v, 0) + k


def _psi_apply(p: Partition, e: int, t: int) -> tuple[Partition, CaseLabel]:
    counts = dict(p.pairs)
    if 2 * t > e:
        _take(counts, t, 2)
        _put(counts, 2 * t, 1)
        return Partition(counts), CaseLabel.MERGE_CASE
    # ties split: 2t <= e, and e != 0 here because the domain excludes e = t = 0
    _take(counts, e, 1)
    _put(counts, e // 2, 2)
    return Partition(counts), CaseLabel.SPLIT_CASE


def psi_even(p: Partition, ell: int) -> tuple[Partition, CaseLabel]:
    """Involution step on an ell-regular partition, even ell.

    Merges two copies of the t statistic into one part of double size when
    2t > e, otherwise splits the e statistic into two halves.  The result is
    ell-regular, has the same weight, and its length parity is flipped.
    Raises DomainError when both statistics vanish (a fixed point, outside
    the involution's domain).
    """
    e = stat_e_even(p, ell)
    t = stat_t_even(p, ell)
    if e == 0 and t == 0:
        raise DomainError("not in domain B': both involution statistics are zero")
    return _psi_apply(p, e, t)


def psi_odd(p: Partition, ell: int) -> tuple[Partition, CaseLabel]:
    """Involution step on an ell-regular partition, odd ell.

    Same merge/split rule as the even case, driven by the odd-case
    statistics (largest once-occurring even part, largest repeated part).
    """
    e = stat_e_odd(p, ell)
    t = stat_t_odd(p, ell)
    if e == 0 and t == 0:
        raise DomainError("not in domain B': both involution statistics are zero")
    return _psi_apply(p, e, t)


def psi(p: Partition, ell: int) -> tuple[Partition, CaseLabel]:
    """Parity dispatcher: psi_even for even ell, psi_odd for odd ell."""
    if ell % 2 == 0:
        return psi_even(p, ell)
    return psi_odd(p, ell)


def _check_strategy(strategy: str) -> None:
    if strategy not in STRATEGIES:
        raise ValueError(f"strategy must be one of {STRATEGIES}")


def _merge_groups(p: Partition, k: int, strategy: str) -> MapTrace:
    """Repeatedly replace k equal parts v by one part k*v until no part has
    multiplicity >= k."""
    counts = dict(p.pairs)
    steps: list[TraceStep] = []
    if strategy == "rounds":
        while True:
            acted = sorted((v for v, m in counts.items() if m >= k), reverse=True)
            if not acted:
                break
            nxt: dict[int, int] = {}
            for v, m in counts.items():
                if m >= k:
                    groups, rest = divmod(m, k)
                    if rest:
                        nxt[v] = nxt.get(v, 0) + rest
                    nxt[k * v] = nxt.get(k * v, 0) + groups
                else:
                    nxt[v] = nxt.get(v, 0) + m
            counts = nxt
            steps.append(TraceStep(Action.MERGE, tuple(acted), Partition(counts)))
    else:
        pick = max if strategy == "largest" else min
        while True:
            eligible = [v for v, m in counts.items() if m >= k]
            if not eligible:
                break
            v = pick(eligible)
            _take(counts, v, k)
            _put(counts, k * v, 1)
            steps.append(TraceStep(Action.MERGE, (v,), Partition(counts)))
    return MapTrace(p, tuple(steps))


def _split_multiples(p: Partition, k: int, divisor: int, strategy: str) -> MapTrace:
    """Repeatedly replace a part v divisible by divisor with k parts v/k until
    no part is divisible."""
    counts = dict(p.pairs)
    steps: list[TraceStep] = []
    if strategy == "rounds":
        while True:
            acted = sorted((v for v in counts if v % divisor == 0), reverse=True)
            if not acted:
                break
            nxt: dict[int, int] = {}
            for v, m in counts.items():
                if v % divisor == 0:
                    nxt[v // k] = nxt.get(v // k, 0) + m * k
                else:
                    nxt[v] = nxt.get(v, 0) + m
            counts = nxt
            steps.append(TraceStep(Action.SPLIT, tuple(acted), Partition(counts)))
    else:
        pick = max if strategy == "largest" else min
        while True:
            eligible = [v for v in counts if v % divisor == 0]
            if not eligible:
                break
            v = pick(eligible)
            _take(counts, v, 1)
            _put(counts, v // k, k)
            steps.append(TraceStep(Action.SPLIT, (v,), Partition(counts)))
    return MapTrace(p, tuple(steps))


def _as_result(trace: MapTrace) -> tuple[Partition, MapTrace]:
    return trace.final, trace


def sigma(p: Partition, ell: int, *, strategy: str = "rounds") -> tuple[Partition, MapTrace]:
    """Merge pairs of equal parts until all parts are distinct.

    Domain: the fixed-point family SetA(ell); the image lies in SetD(ell).
    """
    _require_even_ell(ell)
    _check_strategy(strategy)
    if not SetA(ell).satisfies(p):
        raise DomainError("sigma domain error: partition is not in the fixed-point family A")
    return _as_result(_merge_groups(p, 2, strategy))


def sigma_inv(p: Partition, ell: int, *, strategy: str = "rounds") -> tuple[Partition, MapTrace]:
    """Split parts divisible by ell into two halves until none remains.

    Domain: SetD(ell); the image lies in SetA(ell), and sigma inverts it.
    """
    _require_even_ell(ell)
    _check_strategy(strategy)
    if not SetD(ell).satisfies(p):
        raise DomainError("sigma_inv domain error: partition is not in the distinct-residue family D")
    return _as_result(_split_multiples(p, 2, ell, strategy))


def glaisher_phi(p: Partition, r: int, *, strategy: str = "rounds") -> tuple[Partition, MapTrace]:
    """Split every part divisible by r+1 into r+1 equal parts, repeatedly.

    Domain: partitions with each part occurring at most r times; the image is
    (r+1)-regular of the same weight.  Each split replaces one part by an odd
    number of parts when r is even, so the length parity is preserved there.
    """
    if r < 1:
        raise ValueError("r must be >= 1")
    _check_strategy(strategy)
    if not MaxMultiplicity(r).satisfies(p):
        raise DomainError(f"glaisher_phi domain error: some multiplicity exceeds {r}")
    return _as_result(_split_multiples(p, r + 1, r + 1, strategy))


def glaisher_phi_inv(p: Partition, r: int, *, strategy: str = "rounds") -> tuple[Partition, MapTrace]:
    """Merge r+1 copies of a part into one part of (r+1)-fold size, repeatedly.

    Domain: (r+1)-regular partitions; inverse of glaisher_phi.
    """
    if r < 1:
        raise ValueError("r must be >= 1")
    _check_strategy(strategy)
    if not EllRegular(r + 1).satisfies(p):
        raise DomainError(f"glaisher_phi_inv domain error: some part is divisible by {r + 1}")
    return _as_result(_merge_groups(p, r + 1, strategy))
