"""Set partitions of [n], Kreweras complements, and rank-labeled pairs.

The labeled pair attached to a Dyck path is built directly from its lasers by
:func:`pi_map`; :func:`pair_to_path` inverts it through the rank sequence.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from typing import Iterable, Iterator, Mapping

from .errors import HeightMismatch, NotMember, NotNoncrossing, PartitionError
from .paths import DEFAULT_PATH_CAP, CoprimePair, DyckPath, as_pair, enumerate_paths, laser_set


def _canon(blocks: Iterable[Iterable[int]]) -> tuple:
    return tuple(sorted((tuple(sorted(B)) for B in blocks), key=lambda B: B[0]))


@dataclass(frozen=True)
class SetPartition:
    n: int
    blocks: tuple

    def __post_init__(self):
        blocks = _canon(self.blocks)
        object.__setattr__(self, "blocks", blocks)
        seen = [x for B in blocks for x in B]
        if any(len(B) == 0 for B in blocks) or sorted(seen) != list(range(1, self.n + 1)):
            raise PartitionError(f"blocks {blocks} do not partition [{self.n}]")

    @classmethod
    def of(cls, blocks, n: int | None = None) -> "SetPartition":
        blocks = [tuple(B) for B in blocks]
        if n is None:
            n = max((max(B) for B in blocks), default=0)
        return cls(n, blocks)

    def block_of(self, i: int) -> tuple:
        for B in self.blocks:
            if i in B:
                return B
        raise KeyError(i)

    def rotate(self, t: int = 1) -> "SetPartition":
        n = self.n
        return SetPartition(n, [[(x - 1 + t) % n + 1 for x in B] for B in self.blocks])

    def relabel(self, perm: Mapping[int, int]) -> "SetPartition":
        return SetPartition(self.n, [[perm[x] for x in B] for B in self.blocks])

    def __len__(self):
        return len(self.blocks)

    def __str__(self):
        return "{" + ", ".join("{" + ",".join(map(str, B)) + "}" for B in self.blocks) + "}"


def all_set_partitions(n: int) -> Iterator[SetPartition]:
    """Every set partition of [n] (restricted growth strings)."""
    def rec(i, blocks):
        if i > n:
            yield SetPartition(n, [list(B) for B in blocks])
            return
        for B in blocks:
            B.append(i)
            yield from rec(i + 1, blocks)
            B.pop()
        blocks.append([i])
        yield from rec(i + 1, blocks)
        blocks.pop()

    yield from rec(1, [])


def noncrossing_partitions(n: int) -> list:
    return [P for P in all_set_partitions(n) if is_noncrossing(P)]


def _blocks_cross(B, C) -> bool:
    # crossing iff the restriction of B u C to the circle alternates B,C,B,C
    marks = sorted([(x, 0) for x in B] + [(x, 1) for x in C])
    changes = sum(1 for u, v in zip(marks, marks[1:]) if u[1] != v[1])
    return changes >= 3


def is_noncrossing(P: SetPartition) -> bool:
    bl = P.blocks
    return not any(_blocks_cross(bl[i], bl[j]) for i in range(len(bl)) for j in range(i + 1, len(bl)))


def _chord_separated(B, C) -> bool:
    """Some chord a<c of B is crossed by a chord of C (elements may be shared)."""
    for x in range(len(B)):
        for y in range(x + 1, len(B)):
            lo, hi = B[x], B[y]
            inside = any(lo < z < hi for z in C)
            outside = any(z < lo or z > hi for z in C)
            if inside and outside:
                return True
    return False


def mutually_noncrossing(P1: SetPartition, P2: SetPartition) -> bool:
    if P1.n != P2.n:
        raise PartitionError("partitions live on different ground sets")
    return not any(_chord_separated(B, C) for B in P1.blocks for C in P2.blocks)


def kreweras(P: SetPartition) -> SetPartition:
    """Coarsest partition of the primed points i' (between i and i+1) noncrossing with P.

    Computed as the cycles of sigma_P^{-1} o c, where sigma_P cycles each block
    in increasing order and c is the long cycle i -> i+1.
    """
    if not is_noncrossing(P):
        raise NotNoncrossing(str(P))
    n = P.n
    inv = {}
    for B in P.blocks:
        for k, x in enumerate(B):
            inv[B[(k + 1) % len(B)]] = x
    perm = {i: inv[i % n + 1] for i in range(1, n + 1)}
    seen, blocks = set(), []
    for i in range(1, n + 1):
        if i in seen:
            continue
        cyc, j = [], i
        while j not in seen:
            seen.add(j)
            cyc.append(j)
            j = perm[j]
        blocks.append(cyc)
    return SetPartition(n, blocks)


# -- labeled pairs -----------------------------------------------------------

@dataclass(frozen=True)
class LabeledNCPair:
    """A pair (P, Q) of rank-labeled partitions of [b-1].

    ``P`` and ``Q`` are tuples of ``(block, rank)`` in canonical order.  The
    constructor only checks structure (blocks partition [b-1], ranks are
    nonnegative integers); membership in NC(a,b) is decided by
    :func:`ratnc.membership.is_member`.
    """

    pair: CoprimePair
    P: tuple
    Q: tuple

    def __post_init__(self):
        for side in ("P", "Q"):
            raw = [(tuple(sorted(B)), r) for B, r in getattr(self, side)]
            raw.sort(key=lambda t: t[0][0] if t[0] else 0)
            for B, r in raw:
                if not isinstance(r, int) or r < 0:
                    raise PartitionError(f"rank {r!r} of block {B} is not a nonnegative integer")
            SetPartition(self.pair.b - 1, [B for B, _ in raw])
            object.__setattr__(self, side, tuple(raw))

    @classmethod
    def build(cls, pair, P, Q) -> "LabeledNCPair":
        """``P``/``Q`` given as mappings block -> rank or iterables of (block, rank)."""
        pair = as_pair(pair)
        P = P.items() if isinstance(P, Mapping) else P
        Q = Q.items() if isinstance(Q, Mapping) else Q
        return cls(pair, tuple((tuple(B), r) for B, r in P), tuple((tuple(B), r) for B, r in Q))

    @property
    def a(self) -> int:
        return self.pair.a

    @property
    def b(self) -> int:
        return self.pair.b

    @property
    def n(self) -> int:
        return self.pair.b - 1

    @property
    def p_partition(self) -> SetPartition:
        return SetPartition(self.n, [B for B, _ in self.P])

    @property
    def q_partition(self) -> SetPartition:
        return SetPartition(self.n, [B for B, _ in self.Q])

    def p_rank(self, block) -> int:
        return dict(self.P)[tuple(sorted(block))]

    def q_rank(self, block) -> int:
        return dict(self.Q)[tuple(sorted(block))]

    def total_rank(self) -> int:
        return sum(r for _, r in self.P) + sum(r for _, r in self.Q)

    def positive_ranks(self) -> list:
        return [r for _, r in self.P + self.Q if r > 0]

    def relabel(self, p_map: Mapping[int, int], q_map: Mapping[int, int]) -> "LabeledNCPair":
        return LabeledNCPair(
            self.pair,
            tuple((tuple(p_map[x] for x in B), r) for B, r in self.P),
            tuple((tuple(q_map[x] for x in B), r) for B, r in self.Q),
        )

    def rotated(self, t: int = 1) -> "LabeledNCPair":
        """Apply i -> i + t (mod b-1) to both partitions, keeping ranks."""
        n = self.n
        m = {x: (x - 1 + t) % n + 1 for x in range(1, n + 1)}
        return self.relabel(m, m)

    def to_dict(self) -> dict:
        return {
            "a": self.a,
            "b": self.b,
            "P": [{"block": list(B), "rank": r} for B, r in self.P],
            "Q": [{"block": list(B), "rank": r} for B, r in self.Q],
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), separators=(",", ":"))

    @classmethod
    def from_dict(cls, d: Mapping) -> "LabeledNCPair":
        pair = CoprimePair(int(d["a"]), int(d["b"]))
        P = tuple((tuple(e["block"]), int(e["rank"])) for e in d["P"])
        Q = tuple((tuple(e["block"]), int(e["rank"])) for e in d["Q"])
        return cls(pair, P, Q)

    @classmethod
    def from_json(cls, text: str) -> "LabeledNCPair":
        return cls.from_dict(json.loads(text))

    def __str__(self):
        fmt = lambda side: "{" + ", ".join(
            "{" + ",".join(map(str, B)) + "}:" + str(r) for B, r in side) + "}"
        return f"P={fmt(self.P)} Q={fmt(self.Q)}"


@dataclass(frozen=True)
class RankSequence:
    S_P: tuple
    S_Q: tuple
    R: tuple


def pi_map(path: DyckPath) -> LabeledNCPair:
    """The labeled pair (P, Q) cut out by the lasers of ``path``."""
    pair, runs, n = path.pair, path.runs, path.b - 1
    lasers = laser_set(path)
    # a laser (k, t) with t > k separates the labels k+1..t from the rest
    cuts = [(k + 1, t) for k, t in lasers if t > k]
    groups: dict = {}
    for i in range(1, n + 1):
        key = frozenset(c for c in cuts if c[0] <= i <= c[1])
        groups.setdefault(key, []).append(i)
    P = tuple((tuple(B), runs[B[0] - 1]) for B in groups.values())

    hits: dict = {}
    for k, t in lasers:
        hits.setdefault(t, set()).add(k)
    Q = []
    for t in range(1, n + 1):
        if pair.is_q_rise(runs[t]):
            Q.append((tuple(hits.get(t, set()) | {t}), runs[t]))
    return LabeledNCPair(pair, P, tuple(Q))


def rank_sequences(pq: LabeledNCPair) -> RankSequence:
    n = pq.n
    S_P = [0] * n
    S_Q = [0] * n
    for B, r in pq.P:
        S_P[B[0] - 1] = r
    for B, r in pq.Q:
        S_Q[B[-1] - 1] = r
    R = [S_P[0]] + [max(S_P[k], S_Q[k - 1]) for k in range(1, n)] + [S_Q[n - 1]]
    return RankSequence(tuple(S_P), tuple(S_Q), tuple(R))


def pair_to_path(pq: LabeledNCPair) -> DyckPath:
    """Candidate path N^{p_1} E N^{max(p_2,q_1)} E ... N^{q_{b-1}} E.

    Accepts pairs that violate the NC(a,b) invariants; raises
    :class:`HeightMismatch` when the candidate does not reach height a and
    :class:`~ratnc.errors.BelowDiagonal` when it is not a Dyck path.
    """
    R = rank_sequences(pq).R
    if pq.total_rank() != pq.a or sum(R) != pq.a:
        raise HeightMismatch(f"ranks give height {sum(R)} (total rank {pq.total_rank()}), expected {pq.a}")
    return DyckPath(pq.pair, R)


def enumerate_nc(pair, cap: int = DEFAULT_PATH_CAP) -> list:
    """NC(a,b) in the order of the underlying path enumeration."""
    return [pi_map(D) for D in enumerate_paths(pair, cap)]


def _require_member(pq: LabeledNCPair) -> None:
    from .membership import is_member

    if not is_member(pq):
        raise NotMember(str(pq))


def rotate_pair(pq: LabeledNCPair, t: int = 1, check: bool = True) -> LabeledNCPair:
    if check:
        _require_member(pq)
    return pq.rotated(t)


def reflect_pair(pq: LabeledNCPair, check: bool = True) -> LabeledNCPair:
    """i -> b-i on P; i -> b-1-i (fixing b-1) on Q; ranks carried along."""
    if check:
        _require_member(pq)
    n = pq.n
    rfn = {i: n + 1 - i for i in range(1, n + 1)}
    rfn2 = {i: (n - i if i < n else n) for i in range(1, n + 1)}
    return pq.relabel(rfn, rfn2)
