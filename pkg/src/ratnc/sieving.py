"""Rotation-fixed pairs, d-modified rank sequences, and cyclic sieving checks.

A pair in NC(a,b) fixed by rot^d (d a proper divisor of b-1) is encoded by a
length-d sequence pair (S_P^d, S_Q^d).  The inverse direction rotates the
sequences to a noble representative, builds its path with :func:`L_map`,
reads off the pair with ``pi_map`` and rotates back.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from functools import partial
from itertools import product
from typing import Optional, Sequence

from ._parallel import pmap
from .errors import BadDivisor, BadProfile, NotDInvariant, NotVeryGood, PathError, WrongShape
from .membership import is_member
from .partitions import LabeledNCPair, SetPartition, enumerate_nc, kreweras, pi_map
from .paths import DEFAULT_PATH_CAP, CoprimePair, DyckPath, as_pair, catalan, fire_laser, weight_labels
from .qpoly import QPolynomial, eval_at_root, q_catalan, q_kreweras, q_narayana

CENTRAL, WRAPPING, PLAIN = "central", "wrapping", "plain"


# -- fixed points and block classification -----------------------------------

def is_d_invariant(pq: LabeledNCPair, d: int) -> bool:
    return pq.rotated(d) == pq


def fixed_points(pair, d: int, cap: int = DEFAULT_PATH_CAP) -> list:
    """Brute force: filter the full enumeration by rot^d-invariance."""
    return [pq for pq in enumerate_nc(pair, cap) if is_d_invariant(pq, d)]


def _check_divisor(pair: CoprimePair, d: int, allow_full: bool = False) -> None:
    n = pair.b - 1
    hi = n if allow_full else n - 1
    if not (1 <= d <= hi and n % d == 0):
        raise BadDivisor(f"d={d} is not a proper divisor of b-1={n}")


def _orbit(block: tuple, d: int, n: int) -> list:
    out, cur = [], tuple(sorted(block))
    while cur not in out:
        out.append(cur)
        cur = tuple(sorted((x - 1 + d) % n + 1 for x in cur))
    return out


def classify_block(pq: LabeledNCPair, block, d: int) -> str:
    block = tuple(sorted(block))
    if block not in [B for B, _ in pq.P + pq.Q]:
        raise PathError(f"{block} is not a block of {pq}")
    if not is_d_invariant(pq, d):
        raise NotDInvariant(f"pair is not fixed by rot^{d}")
    orb = _orbit(block, d, pq.n)
    if len(orb) == 1:
        return CENTRAL
    lo, hi = block[0], block[-1]
    if all(lo <= x <= hi for C in orb for x in C):
        return WRAPPING
    return PLAIN


# -- d-modified sequences ----------------------------------------------------

@dataclass(frozen=True)
class DModSequences:
    a: int
    b: int
    d: int
    p: tuple
    q: tuple

    def __post_init__(self):
        object.__setattr__(self, "p", tuple(self.p))
        object.__setattr__(self, "q", tuple(self.q))
        _check_divisor(CoprimePair(self.a, self.b), self.d)
        if len(self.p) != self.d or len(self.q) != self.d:
            raise BadDivisor(f"sequences must have length d={self.d}")
        if min(self.p + self.q) < 0:
            raise ValueError("sequence entries must be nonnegative")

    @property
    def reps(self) -> int:
        """(b-1)/d, the number of copies of a rot^d orbit."""
        return (self.b - 1) // self.d

    @property
    def s(self) -> int:
        return sum(self.p) + sum(self.q)

    @property
    def c(self) -> int:
        return self.a - self.s * self.reps

    def combined(self) -> tuple:
        """s_i = max(p_i, q_{i-1}) with q_0 = q_d."""
        d = self.d
        return tuple(max(self.p[i], self.q[(i - 1) % d]) for i in range(d))

    def rotate(self, t: int = 1) -> "DModSequences":
        """Cyclic shift i -> i + t on both sequences."""
        d = self.d
        return DModSequences(self.a, self.b, d,
                             tuple(self.p[(i - t) % d] for i in range(d)),
                             tuple(self.q[(i - t) % d] for i in range(d)))


def gamma(s: Sequence[int], a: int, b: int) -> DModSequences:
    """Split a combined sequence by comparing entries with a/b."""
    d = len(s)
    p = tuple(x if x * b > a else 0 for x in s)
    q = tuple(s[(i + 1) % d] if s[(i + 1) % d] * b < a else 0 for i in range(d))
    return DModSequences(a, b, d, p, q)


def d_mod_sequences(pq: LabeledNCPair, d: int) -> DModSequences:
    _check_divisor(pq.pair, d)
    if not is_d_invariant(pq, d):
        raise NotDInvariant(f"pair is not fixed by rot^{d}")
    n = pq.n
    p, q = [0] * d, [0] * d
    for B, r in pq.P:
        if B[0] <= d and classify_block(pq, B, d) == PLAIN:
            p[B[0] - 1] = r
    for B, r in pq.Q:
        i = B[-1] - (n - d)
        if i >= 1 and classify_block(pq, B, d) == PLAIN:
            q[i - 1] = r
    return DModSequences(pq.a, pq.b, d, tuple(p), tuple(q))


def is_good(seq: DModSequences) -> bool:
    a, b, d = seq.a, seq.b, seq.d
    if any(x != 0 and x * b < a for x in seq.p):
        return False
    if any(x * b > a for x in seq.q):
        return False
    if seq.s * (b - 1) > a * d:
        return False
    return not any(seq.p[(i + 1) % d] and seq.q[i] for i in range(d))


def is_very_good(seq: DModSequences) -> bool:
    if not is_good(seq):
        return False
    a, b, c = seq.a, seq.b, seq.c
    if c == 0:
        return True
    if c * b > a:
        return seq.p[0] == 0
    return seq.q[-1] == 0


def L_map(seq: DModSequences) -> tuple:
    """Run vector of the lattice path assembled from a very good pair (not necessarily Dyck)."""
    if not is_very_good(seq):
        raise NotVeryGood(f"{seq.p}, {seq.q} is not very good")
    s, k, c = seq.combined(), seq.reps, seq.c
    if c == 0:
        if seq.p[0] == 0:
            return (s[1:] + s[:1]) * k + (0,)
        return s * k + (0,)
    if c * seq.b > seq.a:
        return (c,) + (s[1:] + s[:1]) * k
    return s * k + (c,)


def is_noble(seq: DModSequences) -> bool:
    if not is_very_good(seq):
        return False
    try:
        DyckPath(CoprimePair(seq.a, seq.b), L_map(seq))
    except PathError:
        return False
    return True


def noble_rotation(seq: DModSequences) -> int:
    """A shift t with ``seq.rotate(t)`` noble, located at the minimum of the doubled weighted path."""
    s, d, a, b = seq.combined(), seq.d, seq.a, seq.b
    if not any(s):
        return 0
    wp = weight_labels(s + s, a, b)
    (x, _), _ = wp.min_point
    i = 0 if x == 2 * d else x % d  # 0-based index of the run above the minimum
    start = (i - 1) % d if seq.c * b > a else i
    return (-start) % d


def noble_conjugate(seq: DModSequences) -> DModSequences:
    return seq.rotate(noble_rotation(seq))


def enumerate_good_pairs(pair, d: int) -> list:
    pair = as_pair(pair)
    _check_divisor(pair, d)
    a, b = pair.a, pair.b
    bound = a * d // (b - 1)
    p_vals = [0] + [x for x in range(1, bound + 1) if x * b > a]
    q_vals = [x for x in range(0, bound + 1) if x * b < a]
    out = []
    for p in product(p_vals, repeat=d):
        if sum(p) > bound:
            continue
        for q in product(q_vals, repeat=d):
            seq = DModSequences(a, b, d, p, q)
            if is_good(seq):
                out.append(seq)
    return out


def sd_forward(pq: LabeledNCPair, d: int) -> DModSequences:
    return d_mod_sequences(pq, d)


def sd_inverse(seq: DModSequences) -> LabeledNCPair:
    t = noble_rotation(seq)
    path = DyckPath(CoprimePair(seq.a, seq.b), L_map(seq.rotate(t)))
    return pi_map(path).rotated(-t)


# -- counting ----------------------------------------------------------------

@dataclass(frozen=True)
class CountResult:
    formula: int
    brute: int

    @property
    def match(self) -> bool:
        return self.formula == self.brute

    def __str__(self):
        return f"formula={self.formula} brute={self.brute} match={'true' if self.match else 'false'}"


def fixed_count_formula(a: int, b: int, d: int) -> int:
    if d == b - 1:
        return catalan(a, b)
    return math.comb(a * d // (b - 1) + d, d)


def count_fixed(pair, d: int, cap: int = DEFAULT_PATH_CAP) -> CountResult:
    pair = as_pair(pair)
    _check_divisor(pair, d, allow_full=True)
    return CountResult(fixed_count_formula(pair.a, pair.b, d), len(fixed_points(pair, d, cap)))


def orbit_profile(pq: LabeledNCPair, d: int) -> tuple:
    """(has central block, ranks of noncentral rot^d-orbits of positive-rank blocks)."""
    n = pq.n
    central, seen, ranks = False, set(), []
    for B, r in pq.P + pq.Q:
        if r == 0:
            continue
        orb = _orbit(B, d, n)
        if len(orb) == 1:
            central = True
            continue
        key = min(orb)
        side = "P" if (B, r) in pq.P else "Q"
        if (side, key) not in seen:
            seen.add((side, key))
            ranks.append(r)
    return central, tuple(sorted(ranks))


def _binom(n: int, k: int) -> int:
    return math.comb(n, k) if n >= 0 and k >= 0 else 0


def central_count_formula(a: int, b: int, d: int, p: int, central: bool) -> int:
    """Closed forms for rot^d-fixed pairs with p noncentral orbits, split by a central block."""
    m = a * d // (b - 1)
    if central:
        return math.comb(d, p) * _binom(m - 1, p)
    if a % ((b - 1) // d):
        return 0
    return math.comb(d, p) * _binom(m - 1, p - 1)


def central_count_adjusted(a: int, b: int, d: int, p: int) -> int:
    """Central-block count that also holds when (b-1)/d does not divide a.

    Only when the division is exact does the central block use up one unit of
    the ad/(b-1) budget; otherwise the full floor is available.
    """
    m = a * d // (b - 1)
    return math.comb(d, p) * _binom(m - (a % ((b - 1) // d) == 0), p)


def count_fixed_refined(pair, d: int, p: int, central: bool, cap: int = DEFAULT_PATH_CAP,
                        adjusted: bool = False) -> CountResult:
    pair = as_pair(pair)
    _check_divisor(pair, d, allow_full=True)
    if p < 0 or (pair.b - 1) // d * p > pair.a:
        raise BadProfile(f"p={p} out of range")
    brute = sum(1 for pq in fixed_points(pair, d, cap)
                if orbit_profile(pq, d)[0] == central and len(orbit_profile(pq, d)[1]) == p)
    if adjusted and central:
        formula = central_count_adjusted(pair.a, pair.b, d, p)
    else:
        formula = central_count_formula(pair.a, pair.b, d, p, central)
    return CountResult(formula, brute)


def multinomial_formula(d: int, m: Sequence[int]) -> int:
    rest = d - sum(m)
    if rest < 0:
        return 0
    out = math.factorial(d) // math.factorial(rest)
    for x in m:
        out //= math.factorial(x)
    return out


def count_fixed_by_profile(pair, d: int, m: Sequence[int], cap: int = DEFAULT_PATH_CAP) -> CountResult:
    """Fixed pairs with m[i-1] noncentral rot^d-orbits of blocks of rank i."""
    pair = as_pair(pair)
    _check_divisor(pair, d, allow_full=True)
    m = tuple(m)
    if len(m) != pair.a or min(m) < 0 or (pair.b - 1) // d * sum((i + 1) * x for i, x in enumerate(m)) > pair.a:
        raise BadProfile(f"{m} is not an admissible orbit profile")
    target = tuple(sorted(r for i, x in enumerate(m) for r in [i + 1] * x))
    brute = sum(1 for pq in fixed_points(pair, d, cap) if orbit_profile(pq, d)[1] == target)
    return CountResult(multinomial_formula(d, m), brute)


# -- cyclic sieving ----------------------------------------------------------

@dataclass(frozen=True)
class CSPRow:
    d: int
    formula_value: int
    brute_count: int

    @property
    def match(self) -> bool:
        return self.formula_value == self.brute_count


@dataclass(frozen=True)
class CSPReport:
    a: int
    b: int
    flavor: str
    rows: tuple

    @property
    def ok(self) -> bool:
        return all(r.match for r in self.rows)

    def to_tsv(self) -> str:
        lines = ["d\tformula_value\tbrute_count\tmatch"]
        lines += [f"{r.d}\t{r.formula_value}\t{r.brute_count}\t{'true' if r.match else 'false'}"
                  for r in self.rows]
        return "\n".join(lines) + "\n"


def rank_profile(pq: LabeledNCPair) -> tuple:
    r = [0] * pq.a
    for x in pq.positive_ranks():
        r[x - 1] += 1
    return tuple(r)


def _flavor_poly(pair: CoprimePair, flavor: str, k: Optional[int], r: Optional[Sequence[int]]):
    a, b = pair.a, pair.b
    if flavor == "catalan":
        return q_catalan(a, b), (lambda pq: True)
    if flavor == "narayana":
        if not 1 <= k <= a:
            raise BadProfile(f"k={k} outside [1, {a}]")
        return q_narayana(a, b, k), (lambda pq: len(pq.positive_ranks()) == k)
    if flavor == "kreweras":
        r = tuple(r)
        try:
            X = q_kreweras(a, b, r)
        except ValueError as e:
            raise BadProfile(str(e)) from None
        return X, (lambda pq: rank_profile(pq) == r)
    raise ValueError(f"unknown flavor {flavor!r}")


def _csp_row(d: int, X: QPolynomial, members: list, n: int) -> CSPRow:
    brute = sum(1 for pq in members if is_d_invariant(pq, d))
    return CSPRow(d, eval_at_root(X, n, d), brute)


def verify_csp(pair, flavor: str = "catalan", k: Optional[int] = None,
               r: Optional[Sequence[int]] = None, cap: int = DEFAULT_PATH_CAP) -> CSPReport:
    pair = as_pair(pair)
    X, keep = _flavor_poly(pair, flavor, k, r)
    members = [pq for pq in enumerate_nc(pair, cap) if keep(pq)]
    n = pair.b - 1
    rows = pmap(partial(_csp_row, X=X, members=members, n=n), range(n))
    label = flavor if flavor == "catalan" else (f"narayana({k})" if flavor == "narayana" else f"kreweras({','.join(map(str, r))})")
    return CSPReport(pair.a, pair.b, label, tuple(rows))


# -- (1,2)-configurations -----------------------------------------------------

@dataclass(frozen=True)
class Config12:
    n: int
    balls: frozenset
    arcs: frozenset  # pairs (i, j) with i < j

    def __post_init__(self):
        object.__setattr__(self, "balls", frozenset(self.balls))
        object.__setattr__(self, "arcs", frozenset(tuple(sorted(x)) for x in self.arcs))
        used = list(self.balls) + [x for arc in self.arcs for x in arc]
        if len(used) != len(set(used)) or any(not 1 <= x <= self.n - 1 for x in used):
            raise ValueError("balls and arcs must be pairwise disjoint subsets of [n-1]")
        if any(i1 < j1 < i2 < j2 for i1, i2 in self.arcs for j1, j2 in self.arcs):
            raise ValueError("arcs cross")

    def rotate(self, t: int = 1) -> "Config12":
        m = self.n - 1
        f = lambda x: (x - 1 + t) % m + 1
        return Config12(self.n, {f(x) for x in self.balls}, {(f(i), f(j)) for i, j in self.arcs})

    def to_dict(self) -> dict:
        return {"n": self.n, "balls": sorted(self.balls), "arcs": [list(x) for x in sorted(self.arcs)]}


def _require_shape(pair: CoprimePair) -> int:
    if pair.a != pair.b + 1:
        raise WrongShape(f"({pair.a},{pair.b}) is not of the form (n+1, n)")
    return pair.b


def to_config12(path: DyckPath) -> Config12:
    """Ball at i for a laser (i, i), arc {i, j} for a laser (i, j) with j != i."""
    n = _require_shape(path.pair)
    balls, arcs = set(), set()
    for i in range(1, n):
        if path.runs[i] == 0:
            continue
        j = fire_laser(path, i).target
        if i == j:
            balls.add(i)
        else:
            arcs.add((i, j))
    return Config12(n, balls, arcs)


def config12_from_pair(pq: LabeledNCPair) -> Config12:
    """Arc min(B)-1 -> max(B) per P-block (n-1 replaces 0), ball per rank-1 Q-block."""
    n = _require_shape(pq.pair)
    arcs = set()
    for B, _ in pq.P:
        lo = B[0] - 1 if B[0] > 1 else n - 1
        if lo != B[-1]:
            arcs.add((lo, B[-1]))
    balls = {B[0] for B, r in pq.Q if r > 0}
    return Config12(n, balls, arcs)


def from_config12(cfg: Config12) -> DyckPath:
    """Inverse of :func:`to_config12`.

    The lasers give Q (sources grouped by target), P is recovered from Q by
    inverting the Kreweras complement, and the P-ranks are the unique
    composition that makes the pair a member.
    """
    n = cfg.n
    pair = CoprimePair(n + 1, n)
    groups = {t: {t} for t in range(1, n)}
    for i, j in cfg.arcs:
        groups[j].add(i)
        groups.pop(i, None)
    Q = SetPartition(n - 1, list(groups.values()))
    # krew(krew(P)) = rot^{-1}(P), so P = rot(krew(Q))
    P = kreweras(Q).rotate(1)
    q_ranks = [(B, 1 if B[-1] in cfg.balls else 0) for B in Q.blocks]
    free = pair.a - len(cfg.balls)
    hits = []
    for ranks in _compositions(free, len(P.blocks), minimum=2):
        pq = LabeledNCPair(pair, tuple(zip(P.blocks, ranks)), tuple(q_ranks))
        if is_member(pq):
            hits.append(pq)
    if len(hits) != 1:
        raise ValueError(f"configuration {cfg.to_dict()} has {len(hits)} preimages")
    return is_member(hits[0]).witness


def _compositions(total: int, parts: int, minimum: int = 0):
    if parts == 0:
        if total == 0:
            yield ()
        return
    for x in range(minimum, total - minimum * (parts - 1) + 1):
        for rest in _compositions(total - x, parts - 1, minimum):
            yield (x,) + rest


def noncrossing_configs(n: int) -> list:
    """All noncrossing (1,2)-configurations on [n-1], by direct search."""
    m = n - 1
    out = []

    def rec(i, used, balls, arcs):
        if i > m:
            cfg_arcs = frozenset(arcs)
            if not any(i1 < j1 < i2 < j2 for i1, i2 in cfg_arcs for j1, j2 in cfg_arcs):
                out.append(Config12(n, frozenset(balls), cfg_arcs))
            return
        if i in used:
            rec(i + 1, used, balls, arcs)
            return
        rec(i + 1, used, balls, arcs)
        rec(i + 1, used | {i}, balls | {i}, arcs)
        for j in range(i + 1, m + 1):
            if j not in used:
                rec(i + 1, used | {i, j}, balls, arcs | {(i, j)})

    rec(1, frozenset(), frozenset(), frozenset())
    return out
