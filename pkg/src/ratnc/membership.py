"""Intrinsic membership test for NC(a,b), block order, rank condition, merges.

``is_member`` decides membership from the pair alone (rank total, small Q
ranks, Q = krew(P), and the rank condition on every rotation).  The path
oracle ``pi_map(pair_to_path(pq)) == pq`` is kept separate as
:func:`oracle_member` so that tests can compare the two.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Optional

from .errors import NotCover, NotMember, PartitionError, RatNCError, UnresolvedBlock, WouldCross
from .partitions import (
    LabeledNCPair,
    SetPartition,
    is_noncrossing,
    kreweras,
    pair_to_path,
    pi_map,
)
from .paths import DyckPath


@dataclass(frozen=True)
class BlockRef:
    side: str  # "P" or "Q"
    key: object  # min element for P, block tuple for Q

    @classmethod
    def p(cls, block_or_min) -> "BlockRef":
        key = block_or_min if isinstance(block_or_min, int) else min(block_or_min)
        return cls("P", key)

    @classmethod
    def q(cls, block) -> "BlockRef":
        return cls("Q", tuple(sorted(block)))

    def resolve(self, pq: LabeledNCPair) -> tuple:
        """Return ``(block, rank)`` in ``pq``."""
        if self.side == "P":
            for B, r in pq.P:
                if B[0] == self.key:
                    return B, r
        elif self.side == "Q":
            for B, r in pq.Q:
                if B == self.key:
                    return B, r
        raise UnresolvedBlock(f"{self.side}-block {self.key} not found in {pq}")


@dataclass(frozen=True)
class RankConditionReport:
    block: BlockRef
    lower: Fraction
    upper: Fraction
    achieved: int

    @property
    def holds(self) -> bool:
        return self.lower <= self.achieved <= self.upper


@dataclass(frozen=True)
class Verdict:
    member: bool
    witness: Optional[DyckPath] = None
    condition: Optional[int] = None  # first violated condition, 1-4
    rotation: Optional[int] = None
    block: Optional[tuple] = None
    detail: str = ""

    def __bool__(self):
        return self.member

    def to_dict(self) -> dict:
        d = {"member": self.member}
        if self.member:
            d["witness"] = list(self.witness.runs)
        else:
            d.update(condition=self.condition, rotation=self.rotation,
                     block=list(self.block) if self.block else None, detail=self.detail)
        return d


def _leq(side_lo, Blo, side_hi, Bhi) -> bool:
    if side_lo == "P" and side_hi == "P":
        return Bhi[0] <= Blo[0] and Blo[-1] <= Bhi[-1]
    if side_lo == "Q" and side_hi == "P":
        return Bhi[0] <= Blo[-1] <= Bhi[-1]
    if side_lo == "Q" and side_hi == "Q":
        return Blo == Bhi
    return False


def block_leq(lower: BlockRef, upper: BlockRef, pq: LabeledNCPair) -> bool:
    B1, _ = lower.resolve(pq)
    B2, _ = upper.resolve(pq)
    return _leq(lower.side, B1, upper.side, B2)


def _achieved(pq: LabeledNCPair, B: tuple) -> int:
    lo, hi = B[0], B[-1]
    tot = sum(r for C, r in pq.P if lo <= C[0] and C[-1] <= hi)
    tot += sum(r for C, r in pq.Q if lo <= C[-1] <= hi)
    return tot


def rank_condition(ref: BlockRef, pq: LabeledNCPair) -> RankConditionReport:
    if ref.side != "P":
        raise PartitionError("the rank condition applies to P-blocks")
    B, _ = ref.resolve(pq)
    slope = Fraction(pq.a, pq.b)
    lower = (B[-1] - B[0] + 1) * slope
    return RankConditionReport(ref, lower, lower + slope, _achieved(pq, B))


def _rank_condition_failure(pq: LabeledNCPair) -> Optional[tuple]:
    a, b = pq.a, pq.b
    for B, _ in pq.P:
        width = B[-1] - B[0] + 1
        got = _achieved(pq, B)
        # width*a/b <= got <= (width+1)*a/b, exactly
        if not (width * a <= got * b <= (width + 1) * a):
            return B
    return None


def is_member(pq: LabeledNCPair) -> Verdict:
    a, b = pq.a, pq.b
    if pq.total_rank() != a:
        return Verdict(False, condition=1, detail=f"ranks sum to {pq.total_rank()}, not {a}")
    for B, r in pq.Q:
        if r * b >= a:
            return Verdict(False, condition=2, block=B, detail=f"Q-block rank {r} >= a/b")
    P = pq.p_partition
    if not is_noncrossing(P):
        return Verdict(False, condition=3, detail="P is crossing")
    if kreweras(P) != pq.q_partition:
        return Verdict(False, condition=3, detail="Q is not the Kreweras complement of P")
    for m in range(1, b):
        bad = _rank_condition_failure(pq.rotated(m))
        if bad is not None:
            return Verdict(False, condition=4, rotation=m, block=bad,
                           detail=f"rank condition fails for block {bad} of rot^{m}")
    return Verdict(True, witness=pair_to_path(pq))


def oracle_member(pq: LabeledNCPair) -> bool:
    """Membership decided by building the candidate path and mapping it back."""
    try:
        return pi_map(pair_to_path(pq)) == pq
    except RatNCError:
        return False


def _require(pq):
    if not is_member(pq):
        raise NotMember(str(pq))


def merge_p_blocks(pq: LabeledNCPair, B1: BlockRef, B2: BlockRef, check: bool = True) -> LabeledNCPair:
    """Union two P-blocks, add their ranks, and recompute Q as krew of the new P.

    A new Q-block keeps the rank of the old Q-block sharing its maximum and gets
    rank 0 otherwise.
    """
    if check:
        _require(pq)
    X, rx = B1.resolve(pq)
    Y, ry = B2.resolve(pq)
    if X == Y:
        raise PartitionError("cannot merge a block with itself")
    merged = tuple(sorted(X + Y))
    newP = [(C, r) for C, r in pq.P if C not in (X, Y)] + [(merged, rx + ry)]
    P2 = SetPartition(pq.n, [C for C, _ in newP])
    if not is_noncrossing(P2):
        raise WouldCross(f"merging {X} and {Y} creates a crossing")
    by_max = {C[-1]: r for C, r in pq.Q}
    newQ = [(C, by_max.get(C[-1], 0)) for C in kreweras(P2).blocks]
    out = LabeledNCPair(pq.pair, tuple(newP), tuple(newQ))
    if check:
        _require(out)
    return out


def covers(pq: LabeledNCPair, upper: BlockRef, lower: BlockRef) -> bool:
    """``upper`` covers ``lower``: lower < upper with nothing strictly between."""
    U, _ = upper.resolve(pq)
    L, _ = lower.resolve(pq)
    if not _leq(lower.side, L, upper.side, U) or (lower.side == upper.side and L == U):
        return False
    for C, _ in pq.P:
        if C in (U, L):
            continue
        if _leq(lower.side, L, "P", C) and _leq("P", C, upper.side, U):
            return False
    return True


def absorb_q_block(pq: LabeledNCPair, B: BlockRef, Bq: BlockRef, check: bool = True,
                   require_cover: bool = True) -> LabeledNCPair:
    """Move the rank of a Q-block onto a P-block above it; the Q-block drops to rank 0.

    The P-block must cover the Q-block.  With ``require_cover=False`` any
    ``Bq <= B`` is accepted, and the result is checked for membership instead.
    """
    if check:
        _require(pq)
    P_block, _ = B.resolve(pq)
    Q_block, rq = Bq.resolve(pq)
    if require_cover:
        if not covers(pq, B, Bq):
            raise NotCover(f"{P_block} does not cover {Q_block}")
    elif not _leq("Q", Q_block, "P", P_block):
        raise NotCover(f"{Q_block} is not below {P_block}")
    newP = tuple((C, r + rq if C == P_block else r) for C, r in pq.P)
    newQ = tuple((C, 0 if C == Q_block else r) for C, r in pq.Q)
    out = LabeledNCPair(pq.pair, newP, newQ)
    if check or not require_cover:
        _require(out)
    return out
