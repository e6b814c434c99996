"""Noncrossing parking functions and the S_a x Z_{b-1} character.

A parking function is a member of NC(a,b) together with a labeling that hands
each block a set of |rank| labels from [a].  Equivalently it is a Dyck path
whose north steps carry the labels 1..a, increasing up each vertical run.
"""

from __future__ import annotations

import math
import re
from dataclasses import dataclass
from itertools import combinations, permutations, product
from typing import Iterator, Sequence

from .errors import NotParkingFunction, ResourceLimit
from .partitions import LabeledNCPair, SetPartition, all_set_partitions, enumerate_nc, pi_map
from .paths import DyckPath, as_pair

PARK_CAP = 10**6


# -- permutations ------------------------------------------------------------

@dataclass(frozen=True)
class Permutation:
    images: tuple  # images[i-1] = w(i)

    def __post_init__(self):
        imgs = tuple(int(x) for x in self.images)
        object.__setattr__(self, "images", imgs)
        if sorted(imgs) != list(range(1, len(imgs) + 1)):
            raise ValueError(f"{imgs} is not a permutation in one-line notation")

    @classmethod
    def identity(cls, a: int) -> "Permutation":
        return cls(tuple(range(1, a + 1)))

    @classmethod
    def from_cycles(cls, cycles: Sequence[Sequence[int]], a: int) -> "Permutation":
        img = list(range(1, a + 1))
        seen = set()
        for cyc in cycles:
            for k, x in enumerate(cyc):
                if x in seen or not 1 <= x <= a:
                    raise ValueError(f"bad cycle entry {x}")
                seen.add(x)
                img[x - 1] = cyc[(k + 1) % len(cyc)]
        return cls(tuple(img))

    @classmethod
    def parse(cls, text: str, a: int | None = None) -> "Permutation":
        """One-line ``"2,3,1"`` or cycle notation ``"(1,2,3)(4)"``; fixed points may be omitted."""
        text = text.strip()
        if text.startswith("("):
            cycles = [[int(x) for x in re.split(r"[,\s]+", c.strip()) if x]
                      for c in re.findall(r"\(([^)]*)\)", text)]
            size = a if a is not None else max((max(c) for c in cycles if c), default=0)
            return cls.from_cycles([c for c in cycles if c], size)
        w = cls(tuple(int(x) for x in re.split(r"[,\s]+", text) if x))
        if a is not None and len(w) != a:
            raise ValueError(f"permutation has size {len(w)}, expected {a}")
        return w

    def __len__(self):
        return len(self.images)

    def __call__(self, i: int) -> int:
        return self.images[i - 1]

    def compose(self, other: "Permutation") -> "Permutation":
        """(self o other)(i) = self(other(i))."""
        return Permutation(tuple(self(other(i)) for i in range(1, len(self) + 1)))

    def inverse(self) -> "Permutation":
        inv = [0] * len(self)
        for i, x in enumerate(self.images, 1):
            inv[x - 1] = i
        return Permutation(tuple(inv))

    def cycles(self) -> list:
        seen, out = set(), []
        for i in range(1, len(self) + 1):
            if i in seen:
                continue
            cyc, j = [], i
            while j not in seen:
                seen.add(j)
                cyc.append(j)
                j = self(j)
            out.append(tuple(cyc))
        return out

    def cycle_type(self) -> tuple:
        return tuple(sorted((len(c) for c in self.cycles()), reverse=True))

    def __str__(self):
        return "".join("(" + ",".join(map(str, c)) + ")" for c in self.cycles())


def all_permutations(a: int) -> list:
    return [Permutation(p) for p in permutations(range(1, a + 1))]


# -- parking functions -------------------------------------------------------

@dataclass(frozen=True)
class NCParkingFunction:
    """``labels[k]`` is f of the k-th block of ``base.P + base.Q``."""

    base: LabeledNCPair
    labels: tuple

    def __post_init__(self):
        labels = tuple(frozenset(x) for x in self.labels)
        object.__setattr__(self, "labels", labels)
        blocks = self.base.P + self.base.Q
        if len(labels) != len(blocks):
            raise ValueError("one label set per block is required")
        for (B, r), f in zip(blocks, labels):
            if len(f) != r:
                raise ValueError(f"block {B} has rank {r} but {len(f)} labels")
        allv = sorted(x for f in labels for x in f)
        if allv != list(range(1, self.base.a + 1)):
            raise ValueError("label sets must partition [a]")

    def f(self, side: str, block) -> frozenset:
        block = tuple(sorted(block))
        blocks = self.base.P if side == "P" else self.base.Q
        offset = 0 if side == "P" else len(self.base.P)
        for k, (B, _) in enumerate(blocks):
            if B == block:
                return self.labels[offset + k]
        raise KeyError(block)

    def items(self) -> list:
        """[(side, block, labels)] in canonical block order."""
        out = [("P", B, f) for (B, _), f in zip(self.base.P, self.labels)]
        out += [("Q", B, f) for (B, _), f in zip(self.base.Q, self.labels[len(self.base.P):])]
        return out

    def __str__(self):
        parts = [f"{side}{{{','.join(map(str, B))}}}->{{{','.join(map(str, sorted(f)))}}}"
                 for side, B, f in self.items() if f]
        return " ".join(parts)


def _distribute(labels: frozenset, sizes: Sequence[int]) -> Iterator[tuple]:
    if not sizes:
        yield ()
        return
    for first in combinations(sorted(labels), sizes[0]):
        rest = labels - set(first)
        for tail in _distribute(rest, sizes[1:]):
            yield (frozenset(first),) + tail


def enumerate_park(pair, cap: int = PARK_CAP) -> list:
    pair = as_pair(pair)
    total = pair.b ** (pair.a - 1)
    if total > cap:
        raise ResourceLimit(f"|Park^NC({pair.a},{pair.b})| = {total} exceeds cap {cap}")
    out = []
    for pq in enumerate_nc(pair):
        sizes = [r for _, r in pq.P + pq.Q]
        for labels in _distribute(frozenset(range(1, pair.a + 1)), sizes):
            out.append(NCParkingFunction(pq, labels))
    return out


def act(w: Permutation, t: int, pf: NCParkingFunction) -> NCParkingFunction:
    """(w, g^t): relabel by w and rotate the blocks by i -> i + t, carrying labels along."""
    n = pf.base.n
    new_base = pf.base.rotated(t)
    rot = lambda B: tuple(sorted((x - 1 + t) % n + 1 for x in B))
    moved = {(side, rot(B)): frozenset(w(x) for x in f) for side, B, f in pf.items()}
    labels = [moved[("P", B)] for B, _ in new_base.P] + [moved[("Q", B)] for B, _ in new_base.Q]
    return NCParkingFunction(new_base, tuple(labels))


# -- rational slope parking functions ----------------------------------------

def is_rational_pf(p: Sequence[int], a: int, b: int) -> bool:
    if len(p) != a or any(not isinstance(x, int) or x < 1 for x in p):
        return False
    # sorted p'_i <= (b/a)(i-1) + 1, cross-multiplied
    return all(a * (x - 1) <= b * i for i, x in enumerate(sorted(p)))


def phi(pf: NCParkingFunction) -> tuple:
    out = [0] * pf.base.a
    for side, B, f in pf.items():
        v = B[0] if side == "P" else B[-1] + 1
        for x in f:
            out[x - 1] = v
    return tuple(out)


def phi_inverse(p: Sequence[int], pair) -> NCParkingFunction:
    """Rebuild the labeled path: run at x-coordinate i-1 holds the labels j with p_j = i."""
    pair = as_pair(pair)
    p = tuple(p)
    if not is_rational_pf(p, pair.a, pair.b):
        raise NotParkingFunction(f"{p} is not an ({pair.a},{pair.b}) parking function")
    runs = [0] * pair.b
    for x in p:
        runs[x - 1] += 1
    base = pi_map(DyckPath(pair, tuple(runs)))
    labels = [frozenset(j for j, x in enumerate(p, 1) if x == B[0]) for B, _ in base.P]
    labels += [frozenset(j for j, x in enumerate(p, 1) if x == B[-1] + 1) if r else frozenset()
               for B, r in base.Q]
    return NCParkingFunction(base, tuple(labels))


def permute_vector(w: Permutation, p: Sequence[int]) -> tuple:
    """Component action matching relabeling: the entry at position i moves to position w(i)."""
    out = [0] * len(p)
    for i, x in enumerate(p, 1):
        out[w(i) - 1] = x
    return tuple(out)


# -- characters --------------------------------------------------------------

def root_order(d: int, b: int) -> int:
    """Order q of zeta^d for zeta a primitive (b-1)-th root of unity."""
    n = b - 1
    return n // math.gcd(d % n, n) if d % n else 1


def mult_root(w: Permutation, d: int, b: int) -> int:
    """Multiplicity of zeta^d as an eigenvalue of w on the reflection representation."""
    q = root_order(d, b)
    cyc = w.cycles()
    if q == 1:
        return len(cyc) - 1
    return sum(1 for c in cyc if len(c) % q == 0)


def character_formula(w: Permutation, d: int, pair) -> int:
    pair = as_pair(pair)
    return pair.b ** mult_root(w, d, pair.b)


def character_brute(w: Permutation, d: int, pair, pfs: list | None = None) -> int:
    if pfs is None:
        pfs = enumerate_park(pair)
    return sum(1 for pf in pfs if act(w, d, pf) == pf)


def character(w: Permutation, d: int, pair, mode: str = "formula") -> int:
    if mode == "formula":
        return character_formula(w, d, pair)
    if mode == "brute":
        return character_brute(w, d, pair)
    raise ValueError(f"unknown mode {mode!r}")


# -- equivariant functions and admissible partitions -------------------------

def _g_power(x: int, d: int, b: int) -> int:
    return 0 if x == 0 else (x - 1 + d) % (b - 1) + 1


def is_equivariant(e: Sequence[int], w: Permutation, d: int, b: int) -> bool:
    return all(e[w(j) - 1] == _g_power(e[j - 1], d, b) for j in range(1, len(e) + 1))


def equivariant_functions(w: Permutation, d: int, pair) -> list:
    """All e: [a] -> {0..b-1} with e(w(j)) = g^d e(j), built cycle by cycle."""
    pair = as_pair(pair)
    b = pair.b
    choices = []
    for cyc in w.cycles():
        opts = []
        for start in range(b):
            vals, v = [], start
            for _ in cyc:
                vals.append(v)
                v = _g_power(v, d, b)
            if v == start:  # consistent after one full turn of the cycle
                opts.append(dict(zip(cyc, vals)))
        choices.append(opts)
    total = math.prod(len(o) for o in choices)
    if total > PARK_CAP:
        raise ResourceLimit(f"{total} equivariant functions exceed cap {PARK_CAP}")
    out = []
    for pick in product(*choices):
        e = [0] * len(w)
        for part in pick:
            for j, v in part.items():
                e[j - 1] = v
        out.append(tuple(e))
    return sorted(out)


def r_q(w: Permutation, q: int) -> int:
    return sum(1 for c in w.cycles() if len(c) % q == 0)


def value_partition(e: Sequence[int]) -> SetPartition:
    groups: dict = {}
    for j, v in enumerate(e, 1):
        groups.setdefault(v, []).append(j)
    return SetPartition(len(e), list(groups.values()))


def fibers(pf: NCParkingFunction) -> SetPartition:
    return SetPartition(pf.base.a, [sorted(f) for f in pf.labels if f])


@dataclass(frozen=True)
class AdmissiblePartition:
    sigma: SetPartition
    w: Permutation
    q: int

    @property
    def t(self) -> int:
        """Number of w-orbits of blocks of size q."""
        return sum(1 for orb in _block_orbits(self.sigma, self.w) if len(orb) == self.q)

    def weight(self, b: int) -> int:
        """(b-1)(b-1-q)...(b-1-(t-1)q)."""
        return math.prod(b - 1 - k * self.q for k in range(self.t))


def _image(w: Permutation, B) -> tuple:
    return tuple(sorted(w(x) for x in B))


def _block_orbits(sigma: SetPartition, w: Permutation) -> list:
    seen, out = set(), []
    for B in sigma.blocks:
        if B in seen:
            continue
        orb, C = [], B
        while C not in orb:
            orb.append(C)
            C = _image(w, C)
        seen.update(orb)
        out.append(orb)
    return out


def is_admissible(sigma: SetPartition, w: Permutation, q: int) -> bool:
    blocks = set(sigma.blocks)
    if any(_image(w, B) not in blocks for B in blocks):
        return False
    orbs = _block_orbits(sigma, w)
    if sum(1 for o in orbs if len(o) == 1) > 1:
        return False
    return all(len(o) in (1, q) for o in orbs)


def admissible_partitions(w: Permutation, q: int) -> list:
    return [AdmissiblePartition(s, w, q) for s in all_set_partitions(len(w)) if is_admissible(s, w, q)]


def admissible_sum(w: Permutation, q: int, b: int) -> int:
    return sum(ap.weight(b) for ap in admissible_partitions(w, q))
