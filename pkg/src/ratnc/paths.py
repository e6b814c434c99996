"""Rational Dyck paths stored as vertical-run vectors.

A path from ``(0, 0)`` to ``(b, a)`` is encoded by ``runs = (n_1, ..., n_b)``
where ``n_k`` is the number of north steps taken at x-coordinate ``k - 1``,
immediately before the ``k``-th east step.  All slope comparisons are done by
integer cross-multiplication.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Iterable, Iterator, Sequence

from .errors import (
    BadLength,
    BadSum,
    BelowDiagonal,
    NoNorthStep,
    NotCoprime,
    PathError,
    ResourceLimit,
)

DEFAULT_PATH_CAP = 10**7


@dataclass(frozen=True, order=True)
class CoprimePair:
    a: int
    b: int

    def __post_init__(self):
        if not (isinstance(self.a, int) and isinstance(self.b, int)):
            raise PathError("a and b must be integers")
        if self.a < 1 or self.b < 1:
            raise PathError(f"a and b must be positive, got ({self.a}, {self.b})")
        if math.gcd(self.a, self.b) != 1:
            raise NotCoprime(f"gcd({self.a}, {self.b}) = {math.gcd(self.a, self.b)}")
        if self.b < 2:
            raise PathError("b must be at least 2 so that the label set [b-1] is nonempty")

    @property
    def labels(self) -> range:
        return range(1, self.b)

    def is_p_rise(self, length: int) -> bool:
        """Run longer than a/b."""
        return length * self.b > self.a

    def is_q_rise(self, length: int) -> bool:
        """Run shorter than a/b (zero included)."""
        return length * self.b < self.a


def as_pair(a, b=None) -> CoprimePair:
    if isinstance(a, CoprimePair):
        return a
    if b is None:
        a, b = a
    return CoprimePair(a, b)


def catalan(a: int, b: int) -> int:
    """Rational Catalan number C(a+b, a) / (a+b)."""
    n, r = divmod(math.comb(a + b, a), a + b)
    assert r == 0
    return n


def _check_runs(runs: Sequence[int], pair: CoprimePair) -> None:
    a, b = pair.a, pair.b
    if len(runs) != b:
        raise BadLength(f"expected {b} runs, got {len(runs)}")
    if any((not isinstance(n, int)) or n < 0 for n in runs):
        raise PathError("run lengths must be nonnegative integers")
    if sum(runs) != a:
        raise BadSum(f"runs sum to {sum(runs)}, expected {a}")
    height = 0
    for k in range(1, b):
        height += runs[k - 1]
        # height must exceed a*k/b; equality impossible by coprimality
        if height * b <= a * k:
            raise BelowDiagonal(k)


@dataclass(frozen=True)
class DyckPath:
    pair: CoprimePair
    runs: tuple

    def __post_init__(self):
        object.__setattr__(self, "runs", tuple(self.runs))
        _check_runs(self.runs, self.pair)

    @property
    def a(self) -> int:
        return self.pair.a

    @property
    def b(self) -> int:
        return self.pair.b

    def bottom(self, x: int) -> int:
        """Height of the lowest point of the path at x-coordinate ``x``."""
        return sum(self.runs[:x])

    def top(self, x: int) -> int:
        """Height of the east step leaving x-coordinate ``x``."""
        return sum(self.runs[: x + 1])

    def ne_string(self) -> str:
        return "".join("N" * n + "E" for n in self.runs)

    def __str__(self) -> str:
        return ",".join(map(str, self.runs))


@dataclass(frozen=True, order=True)
class Laser:
    source: int
    target: int

    def as_tuple(self) -> tuple:
        return (self.source, self.target)


@dataclass(frozen=True)
class WeightedPath:
    points: tuple  # ((x, y), weight) in path order

    @property
    def argmin(self) -> int:
        return min(range(len(self.points)), key=lambda k: self.points[k][1])

    @property
    def min_point(self) -> tuple:
        return self.points[self.argmin]


# -- construction / parsing --------------------------------------------------

def validate(runs: Sequence[int], pair) -> DyckPath:
    return DyckPath(as_pair(pair), tuple(runs))


def runs_from_ne(s: str) -> tuple:
    s = s.strip().upper()
    if not s or set(s) - {"N", "E"}:
        raise PathError(f"not an NE-string: {s!r}")
    if not s.endswith("E"):
        raise PathError("a Dyck path must end with an east step")
    runs, cur = [], 0
    for ch in s:
        if ch == "N":
            cur += 1
        else:
            runs.append(cur)
            cur = 0
    return tuple(runs)


def from_ne(s: str, pair=None) -> DyckPath:
    runs = runs_from_ne(s)
    if pair is None:
        pair = CoprimePair(sum(runs), len(runs))
    return validate(runs, pair)


def parse_path(text: str, pair) -> DyckPath:
    """Read either a run vector ``"3,1,2,1"`` or an NE-string ``"NNNENENNENE"``."""
    text = text.strip()
    if text and set(text.upper()) <= {"N", "E"}:
        return from_ne(text, pair)
    try:
        runs = tuple(int(t) for t in text.replace(" ", "").split(","))
    except ValueError:
        raise PathError(f"cannot parse path {text!r}") from None
    return validate(runs, pair)


# -- enumeration -------------------------------------------------------------

def enumerate_paths(pair, cap: int = DEFAULT_PATH_CAP) -> list:
    """All (a,b)-Dyck paths, lexicographic in the run vector."""
    pair = as_pair(pair)
    total = catalan(pair.a, pair.b)
    if total > cap:
        raise ResourceLimit(f"Cat({pair.a},{pair.b}) = {total} exceeds cap {cap}")
    return [DyckPath(pair, runs) for runs in iter_runs(pair)]


def iter_runs(pair) -> Iterator[tuple]:
    pair = as_pair(pair)
    a, b = pair.a, pair.b
    # smallest admissible prefix height after k east steps
    floor_h = [0] + [a * k // b + 1 for k in range(1, b)]
    runs = [0] * b

    def rec(k: int, h: int):
        # choose runs[k] (0-based), prefix after it must be >= floor_h[k+1]
        if k == b - 1:
            runs[k] = a - h
            yield tuple(runs)
            return
        for n in range(max(0, floor_h[k + 1] - h), a - h + 1):
            runs[k] = n
            yield from rec(k + 1, h + n)

    yield from rec(0, 0)


# -- lasers ------------------------------------------------------------------

def fire_laser(path: DyckPath, i: int) -> Laser:
    """Fire the slope-a/b laser from label ``i`` (the point ``(i, bottom(i))``)."""
    a, b = path.a, path.b
    if not 1 <= i <= b - 1:
        raise PathError(f"label {i} outside [1, {b - 1}]")
    if path.runs[i] == 0:
        raise NoNorthStep(f"label {i} is not at the bottom of a north step")
    h = path.bottom(i)
    top = h
    for x0 in range(i, b):
        top += path.runs[x0]
        # laser height at x0+1 is h + a(x0+1-i)/b
        if b * h + a * (x0 + 1 - i) > b * top:
            return Laser(i, x0)
    raise AssertionError("laser never terminated")  # unreachable for valid paths


def laser_set(path: DyckPath) -> frozenset:
    return frozenset(
        fire_laser(path, i).as_tuple() for i in range(1, path.b) if path.runs[i] > 0
    )


def laser_hits_interior(path: DyckPath, laser: Laser) -> bool:
    """Exact check that the laser meets its target step strictly between lattice points."""
    a, b = path.a, path.b
    i, x0 = laser.source, laser.target
    h = path.bottom(i)
    top = path.top(x0)
    at_west = b * h + a * (x0 - i)
    at_east = b * h + a * (x0 + 1 - i)
    return at_west < b * top < at_east


# -- transforms --------------------------------------------------------------

def transpose(path: DyckPath) -> DyckPath:
    """Reflect in y = -x and translate back: reverse the word and swap N/E."""
    swapped = "".join("E" if c == "N" else "N" for c in reversed(path.ne_string()))
    return from_ne(swapped, CoprimePair(path.b, path.a))


def _nonempty_runs(path: DyckPath) -> list:
    """Decompose as N^{i_1} E^{j_1} ... N^{i_m} E^{j_m} with every exponent positive."""
    blocks = []
    for n in path.runs:
        if n > 0 or not blocks:
            blocks.append([n, 1])
        else:
            blocks[-1][1] += 1
    return blocks


def _word(parts: Iterable[tuple]) -> str:
    return "".join(("N" if s == "N" else "E") * k for s, k in parts)


def rot_prime(path: DyckPath) -> DyckPath:
    """The path rotation whose effect on labeled pairs is ``i -> i - 1 (mod b-1)``."""
    blocks = _nonempty_runs(path)
    m = len(blocks)
    if m == 1:
        return path
    i1, j1 = blocks[0]
    if j1 > 1:
        new = [[i, j] for i, j in blocks]
        new[0][1] -= 1
        new[-1][1] += 1
        parts = [p for i, j in new for p in (("N", i), ("E", j))]
        return from_ne(_word(parts), path.pair)

    # j_1 == 1: fire from the westernmost valley (1, i_1)
    target = fire_laser(path, 1).target
    x = 0
    for k, (_, jk) in enumerate(blocks):
        if x <= target < x + jk:
            break
        x += jk
    else:  # pragma: no cover
        raise AssertionError("laser target outside the path")
    r = target - x + 1
    ik, jk = blocks[k]
    parts = []
    for i, j in blocks[1:k]:
        parts += [("N", i), ("E", j)]
    tail = [p for i, j in blocks[k + 1:] for p in (("N", i), ("E", j))]
    if r == 1:
        parts += [("N", i1), ("E", jk)] + tail + [("N", ik), ("E", 1)]
    else:
        parts += [("N", ik), ("E", r - 1), ("N", i1), ("E", jk - r + 1)] + tail
        parts.append(("E", 1))
    return from_ne(_word(parts), path.pair)


def rot_path(path: DyckPath, times: int = 1) -> DyckPath:
    """Inverse of :func:`rot_prime`: ``rot_prime`` applied ``b - 2`` times per step."""
    n = path.b - 1
    steps = (-times) % n
    for _ in range(steps):
        path = rot_prime(path)
    return path


# -- weights -----------------------------------------------------------------

def weight_labels(runs: Sequence[int], a: int, b: int) -> WeightedPath:
    """Weight every lattice point: +b per north step, -a per east step, origin 0.

    ``runs`` describes any NE path ending with an east step (not necessarily Dyck).
    """
    pts = [((0, 0), 0)]
    x = y = w = 0
    for n in runs:
        for _ in range(n):
            y += 1
            w += b
            pts.append(((x, y), w))
        x += 1
        w -= a
        pts.append(((x, y), w))
    return WeightedPath(tuple(pts))
