"""Certified minimum weights and low-weight counts for binary linear codes.

The workhorse is an information-set enumeration in the Brouwer-Zimmermann
style.  Disjoint (up to borrowed columns) information sets are extracted
from the generator matrix; enumerating all codewords that use at most r
rows of each set gives, once level r is complete on every set, the lower
bound

    wt(v) >= sum_j max(0, r_j + 1 - defect_j)

for every vector not yet seen.  The bound is then rounded up to the next
weight admissible for the code's parity class (multiples of 4 for doubly
even generators, even weights for even generators, with the matching
residue shift for cosets), which typically saves one or two enumeration
levels.

Cosets x + C are enumerated through per-set affine bases: x is reduced
against each information set so that the reduced base vanishes on that
set's columns.  The same lower-bound formula and deduplication rule then
apply verbatim to the coset elements themselves.

Enumeration is vectorized with numpy on bit-packed uint64 words.  Level r
of a set is materialized in colex order from level r - 1 while it fits in
memory; higher levels are streamed as suffix tuples XORed onto the largest
materialized level.  Counts are deterministic: they do not depend on chunk
sizes or on the number of workers.
"""

from __future__ import annotations

import itertools
import time
from dataclasses import dataclass, field
from math import comb, inf
from multiprocessing import get_context
from typing import Iterator, Mapping

import numpy as np

from .gf2core import BitVector, LinearCode

_CHUNK = 1 << 20
# cap on a materialized level's row count (C(41, 6) = 4.5M fits, C(41, 7) not)
_MAT_CAP = 9_000_000
_BRUTE_MAX_DIM = 28


@dataclass(frozen=True)
class SearchBudget:
    """Caps on an enumeration run.

    Attributes:
        max_enumerated: stop scheduling work once this many combinations
            have been generated (checked between chunks, so a running
            chunk may overshoot slightly).  None means unlimited.
        deadline_seconds: wall-clock allowance measured from the start of
            the call.  None means unlimited.
    """

    max_enumerated: int | None = None
    deadline_seconds: float | None = None


@dataclass(frozen=True)
class WeightDistribution:
    """Exact low-weight counts of a code or coset.

    ``counts[w]`` is the exact number of elements of weight w, for every
    w <= complete_upto.  Weights above complete_upto are not certified and
    are omitted.  ``total_dim`` is the dimension of the underlying code,
    so the full distribution would sum to 2**total_dim.
    """

    counts: Mapping[int, int]
    complete_upto: int
    total_dim: int

    def count(self, w: int) -> int:
        if w > self.complete_upto:
            raise ValueError(
                f"weight {w} not certified (complete up to {self.complete_upto})"
            )
        return self.counts.get(w, 0)

    def minimum(self, exclude_zero: bool = True) -> int | None:
        """Smallest certified weight with a nonzero count, if any."""
        wts = [w for w, c in self.counts.items() if c and (w > 0 or not exclude_zero)]
        return min(wts) if wts else None


# -- packing helpers --------------------------------------------------------


def _nwords(n: int) -> int:
    return (n + 63) // 64


def _pack(bits: int, words: int) -> np.ndarray:
    out = np.zeros(words, dtype=np.uint64)
    for w in range(words):
        out[w] = (bits >> (64 * w)) & 0xFFFFFFFFFFFFFFFF
    return out


def _weights_of(arr: np.ndarray) -> np.ndarray:
    return np.bitwise_count(arr).sum(axis=1, dtype=np.int64)


# -- information sets -------------------------------------------------------


@dataclass
class _InfoSet:
    rows_int: list[int]  # basis diagonalized on this set's pivot columns
    pivots: list[int]  # the k pivot columns, in row order
    defect: int  # pivot columns borrowed from earlier sets
    rows_np: np.ndarray = field(init=False)
    mask_np: np.ndarray = field(init=False)
    base_int: int = 0  # offset vector reduced to vanish on the pivots
    base_np: np.ndarray = field(init=False)


def _build_info_sets(gen_rows: list[int], n: int) -> list[_InfoSet]:
    """Greedy disjoint information sets, left to right.

    Each round runs an elimination over the original generators, taking
    pivots first from columns unused by earlier sets.  When no fresh
    column yields a pivot the basis is completed on used columns; those
    count toward the set's defect.  Rounds stop when a set would have
    no fresh column at all.
    """
    k = len(gen_rows)
    sets: list[_InfoSet] = []
    used = 0
    while True:
        fresh_cols = [c for c in range(n) if not used >> c & 1]
        old_cols = [c for c in range(n) if used >> c & 1]
        work = list(gen_rows)
        pivots: list[int] = []
        rank = 0
        fresh_rank = 0
        for phase, cols in enumerate((fresh_cols, old_cols)):
            for col in cols:
                mask = 1 << col
                pivot = next(
                    (i for i in range(rank, k) if work[i] & mask), None
                )
                if pivot is None:
                    continue
                work[rank], work[pivot] = work[pivot], work[rank]
                for i in range(k):
                    if i != rank and work[i] & mask:
                        work[i] ^= work[rank]
                pivots.append(col)
                rank += 1
                if phase == 0:
                    fresh_rank += 1
                if rank == k:
                    break
            if rank == k:
                break
        if fresh_rank == 0:
            break
        for col in pivots[:fresh_rank]:
            used |= 1 << col
        sets.append(
            _InfoSet(rows_int=work[:k], pivots=pivots, defect=k - fresh_rank)
        )
    return sets


# -- parity rounding --------------------------------------------------------


def _parity_step(gen_rows: list[int], offset: int) -> tuple[int, int]:
    """Returns (step, residue): admissible weights are residue mod step."""
    weights = [r.bit_count() for r in gen_rows]
    ortho = all(
        (a & b).bit_count() % 2 == 0
        for i, a in enumerate(gen_rows)
        for b in gen_rows[i:]
    )
    mod4 = ortho and all(w % 4 == 0 for w in weights)
    even = all(w % 2 == 0 for w in weights)
    if mod4 and all((r & offset).bit_count() % 2 == 0 for r in gen_rows):
        return 4, offset.bit_count() % 4
    if even:
        return 2, offset.bit_count() % 2
    return 1, 0


def _round_up(raw: int, step: int, residue: int) -> int:
    return raw + (residue - raw) % step


# -- the engine -------------------------------------------------------------


class _Exhausted(Exception):
    """Internal: budget ran out; partial state lives on the engine."""


class _Engine:
    def __init__(self, code: LinearCode, offset: BitVector | None):
        if code.dimension == 0:
            raise ValueError("the zero code has no enumerable words")
        self.n = code.length
        self.k = code.dimension
        self.words = _nwords(self.n)
        gen_rows = [r.bits for r in code.generators.rows]
        off = offset.bits if offset is not None else 0
        self.sets = _build_info_sets(gen_rows, self.n)
        for s in self.sets:
            base = off
            for row, col in zip(s.rows_int, s.pivots):
                if base >> col & 1:
                    base ^= row
            s.base_int = base
            s.base_np = _pack(base, self.words)
            s.rows_np = np.array(
                [_pack(r, self.words) for r in s.rows_int], dtype=np.uint64
            )
            mask = 0
            for col in s.pivots:
                mask |= 1 << col
            s.mask_np = _pack(mask, self.words)
        self.step, self.residue = _parity_step(gen_rows, off)
        # per-set materialized colex levels: _mat[si][r] has C(k, r) rows
        self._mat: list[list[np.ndarray]] = [
            [s.base_np.reshape(1, -1).copy()] for s in self.sets
        ]
        self.enumerated = 0
        self.max_enum: float = inf
        self.deadline: float | None = None

    def set_budget(self, budget: SearchBudget | None):
        budget = budget or SearchBudget()
        self.max_enum = (
            budget.max_enumerated if budget.max_enumerated is not None else inf
        )
        self.deadline = (
            time.monotonic() + budget.deadline_seconds
            if budget.deadline_seconds is not None
            else None
        )

    def _charge(self, amount: int):
        self.enumerated += amount
        if self.enumerated >= self.max_enum:
            raise _Exhausted
        if self.deadline is not None and time.monotonic() > self.deadline:
            raise _Exhausted

    def _mat_limit(self, si: int) -> int:
        """Largest level of set si worth materializing."""
        k = self.k
        r = 0
        while r + 1 <= k and comb(k, r + 1) <= _MAT_CAP:
            r += 1
        return r

    def _materialize(self, si: int, r: int):
        """Extends the cached colex levels of set si up to level r.

        Level r in colex order is the concatenation, over the top row
        index m, of level r - 1 restricted to combinations inside
        {0..m-1}, XOR row m.  The base offset is already folded into
        level 0, and XOR keeps it folded at every level.
        """
        mat = self._mat[si]
        s = self.sets[si]
        while len(mat) - 1 < r:
            prev = len(mat) - 1
            parts = []
            for m in range(prev, self.k):
                cnt = comb(m, prev)
                if cnt:
                    parts.append(mat[prev][:cnt] ^ s.rows_np[m])
            nxt = np.concatenate(parts) if parts else np.empty(
                (0, self.words), dtype=np.uint64
            )
            assert nxt.shape[0] == comb(self.k, prev + 1)
            mat.append(nxt)

    def _level_chunks(self, si: int, r: int) -> Iterator[np.ndarray]:
        """Yields the level-r rows of set si (offset folded in) in chunks."""
        s = self.sets[si]
        limit = self._mat_limit(si)
        if r <= limit:
            self._materialize(si, r)
            arr = self._mat[si][r]
            for lo in range(0, arr.shape[0], _CHUNK):
                yield arr[lo : lo + _CHUNK]
            return
        b = limit
        self._materialize(si, b)
        prefix = self._mat[si][b]
        for tup in itertools.combinations(range(b, self.k), r - b):
            cnt = comb(tup[0], b)
            if cnt == 0:
                continue
            delta = s.rows_np[list(tup)]
            xor = np.bitwise_xor.reduce(delta, axis=0)
            for lo in range(0, cnt, _CHUNK):
                yield prefix[lo : min(lo + _CHUNK, cnt)] ^ xor

    def raw_bound(self, levels: list[int]) -> int:
        raw = sum(
            max(0, lv + 1 - s.defect) for lv, s in zip(levels, self.sets)
        )
        return _round_up(raw, self.step, self.residue)

    # -- minimum weight ----------------------------------------------------

    def run_min(self, include_zero: bool) -> tuple[int, int]:
        """Iterative deepening; returns (lower, upper), equal when exact.

        ``include_zero`` distinguishes coset minimums (the base vector is
        a legitimate element) from code minimums (the zero word is not).
        """
        levels = [-1] * len(self.sets)
        hi = inf
        complete = True
        try:
            while True:
                lb = self.raw_bound(levels)
                if lb >= hi:
                    break
                nxt = min(
                    (i for i in range(len(self.sets)) if levels[i] < self.k),
                    key=lambda i: comb(self.k, levels[i] + 1),
                    default=None,
                )
                if nxt is None:
                    break  # whole space enumerated: hi is the true minimum
                r = levels[nxt] + 1
                for chunk in self._level_chunks(nxt, r):
                    wts = _weights_of(chunk)
                    if not include_zero:
                        wts = wts[wts > 0]
                    if wts.size:
                        hi = min(hi, int(wts.min()))
                    self._charge(chunk.shape[0])
                levels[nxt] = r
        except _Exhausted:
            complete = False
        if hi == inf:
            hi = self.n  # k >= 1, so some word exists even if none was seen
        lo = hi if complete else min(self.raw_bound(levels), hi)
        return lo, hi

    # -- exact counting ----------------------------------------------------

    def plan_levels(self, w: int) -> list[int]:
        """Cheapest static schedule whose bound certifies weights <= w."""
        levels = [0] * len(self.sets)
        while self.raw_bound(levels) <= w:
            nxt = min(
                (i for i in range(len(self.sets)) if levels[i] < self.k),
                key=lambda i: comb(self.k, levels[i] + 1),
                default=None,
            )
            if nxt is None:
                break  # full enumeration reached on every set
            levels[nxt] += 1
        return levels

    def run_count(self, w: int) -> tuple[dict[int, int], int]:
        """Counts elements of weight <= w; returns (counts, certified_upto).

        Sets are processed in order, each to its planned level.  An element
        is tallied at the first set whose pivot-column restriction is small
        enough to have produced it; later sets skip it by that same test,
        so completed earlier sets make the rule exact under any schedule.
        """
        plan = self.plan_levels(w)
        tally = np.zeros(w + 1, dtype=np.int64)
        done = [-1] * len(self.sets)
        exhausted = False
        try:
            for si in range(len(self.sets)):
                earlier = self.sets[:si]
                caps = [plan[j] for j in range(si)]
                for r in range(0, plan[si] + 1):
                    for chunk in self._level_chunks(si, r):
                        size = chunk.shape[0]
                        wts = _weights_of(chunk)
                        keep = wts <= w
                        vals = chunk[keep]
                        wts = wts[keep]
                        for s2, cap in zip(earlier, caps):
                            if vals.shape[0] == 0:
                                break
                            inside = np.bitwise_count(vals & s2.mask_np).sum(
                                axis=1, dtype=np.int64
                            )
                            keep2 = inside > cap
                            vals = vals[keep2]
                            wts = wts[keep2]
                        if wts.size:
                            tally += np.bincount(wts, minlength=w + 1)
                        self._charge(size)
                    done[si] = r
        except _Exhausted:
            exhausted = True
        certified = min(w, self.raw_bound(done) - 1) if exhausted else w
        counts = {
            i: int(c) for i, c in enumerate(tally) if c and i <= certified
        }
        return counts, certified

    def run_count_parallel(
        self, w: int, workers: int
    ) -> tuple[dict[int, int], int]:
        """Same counts as run_count, with chunks farmed to forked workers.

        Tallies are merged by summation, so the result cannot depend on
        scheduling.  The budget is checked between completed chunks.
        """
        global _FORK_ENGINE
        plan = self.plan_levels(w)
        tally = np.zeros(w + 1, dtype=np.int64)
        done = [-1] * len(self.sets)
        exhausted = False
        ctx = get_context("fork")
        try:
            for si in range(len(self.sets)):
                if exhausted:
                    break
                caps = [plan[j] for j in range(si)]
                for r in range(0, plan[si] + 1):
                    self._materialize(si, min(r, self._mat_limit(si)))
                    _FORK_ENGINE = (self, si, w, caps)
                    descs = list(self._chunk_descriptors(si, r))
                    with ctx.Pool(workers) as pool:
                        for part, size in pool.imap(_fork_count_chunk, descs):
                            tally += part
                            try:
                                self._charge(size)
                            except _Exhausted:
                                exhausted = True
                                pool.terminate()
                                break
                    if exhausted:
                        break
                    done[si] = r
        finally:
            _FORK_ENGINE = None
        certified = min(w, self.raw_bound(done) - 1) if exhausted else w
        counts = {
            i: int(c) for i, c in enumerate(tally) if c and i <= certified
        }
        return counts, certified

    def _chunk_descriptors(self, si: int, r: int):
        limit = self._mat_limit(si)
        if r <= limit:
            total = comb(self.k, r)
            for lo in range(0, total, _CHUNK):
                yield ("mat", r, lo, min(lo + _CHUNK, total))
        else:
            b = limit
            for tup in itertools.combinations(range(b, self.k), r - b):
                cnt = comb(tup[0], b)
                for lo in range(0, cnt, _CHUNK):
                    yield ("suf", tup, lo, min(lo + _CHUNK, cnt))

    def count_chunk(
        self, si: int, desc, w: int, caps: list[int]
    ) -> tuple[np.ndarray, int]:
        """Processes one chunk descriptor; used by the fork workers."""
        s = self.sets[si]
        if desc[0] == "mat":
            _, r, lo, hi = desc
            chunk = self._mat[si][r][lo:hi]
        else:
            _, tup, lo, hi = desc
            b = self._mat_limit(si)
            xor = np.bitwise_xor.reduce(s.rows_np[list(tup)], axis=0)
            chunk = self._mat[si][b][lo:hi] ^ xor
        size = chunk.shape[0]
        wts = _weights_of(chunk)
        keep = wts <= w
        vals = chunk[keep]
        wts = wts[keep]
        for s2, cap in zip(self.sets, caps):
            if vals.shape[0] == 0:
                break
            inside = np.bitwise_count(vals & s2.mask_np).sum(
                axis=1, dtype=np.int64
            )
            keep2 = inside > cap
            vals = vals[keep2]
            wts = wts[keep2]
        part = (
            np.bincount(wts, minlength=w + 1)
            if wts.size
            else np.zeros(w + 1, dtype=np.int64)
        )
        return part, size


_FORK_ENGINE = None


def _fork_count_chunk(desc):
    engine, si, w, caps = _FORK_ENGINE
    return engine.count_chunk(si, desc, w, caps)


# -- public operations ------------------------------------------------------


def _dispatch_count(engine: _Engine, w: int, workers: int):
    import multiprocessing

    if workers > 1 and "fork" in multiprocessing.get_all_start_methods():
        return engine.run_count_parallel(w, workers)
    return engine.run_count(w)


def min_weight(
    code: LinearCode,
    budget: SearchBudget | None = None,
) -> int | tuple[int, int]:
    """Certified minimum weight of a nonzero codeword.

    Returns the exact minimum weight, or a pair (lower, upper) when the
    budget runs out first.  The bounds are always valid; exactness is
    exactly the condition lower == upper, which the int return signals.
    """
    engine = _Engine(code, None)
    engine.set_budget(budget)
    lo, hi = engine.run_min(include_zero=False)
    return hi if lo >= hi else (lo, hi)


def coset_min_weight(
    code: LinearCode,
    x: BitVector,
    budget: SearchBudget | None = None,
) -> int | tuple[int, int]:
    """Certified minimum weight of the coset x + C (x itself included)."""
    if x.length != code.length:
        raise ValueError("x has the wrong length")
    engine = _Engine(code, x)
    engine.set_budget(budget)
    lo, hi = engine.run_min(include_zero=True)
    return hi if lo >= hi else (lo, hi)


def count_words_upto(
    code: LinearCode,
    w: int,
    budget: SearchBudget | None = None,
    *,
    workers: int = 1,
) -> WeightDistribution:
    """Exact codeword counts for every weight <= w (weight 0 included).

    With a budget, the distribution may come back certified only up to a
    smaller weight; ``complete_upto`` always states what is exact.
    """
    if w < 0:
        raise ValueError("w must be nonnegative")
    engine = _Engine(code, None)
    engine.set_budget(budget)
    counts, certified = _dispatch_count(engine, w, workers)
    return WeightDistribution(
        counts=counts, complete_upto=certified, total_dim=code.dimension
    )


def count_coset_upto(
    code: LinearCode,
    x: BitVector,
    w: int,
    budget: SearchBudget | None = None,
    *,
    workers: int = 1,
) -> WeightDistribution:
    """Exact counts of coset elements of x + C for every weight <= w."""
    if x.length != code.length:
        raise ValueError("x has the wrong length")
    if w < 0:
        raise ValueError("w must be nonnegative")
    engine = _Engine(code, x)
    engine.set_budget(budget)
    counts, certified = _dispatch_count(engine, w, workers)
    return WeightDistribution(
        counts=counts, complete_upto=certified, total_dim=code.dimension
    )


def brute_force_wef(code: LinearCode) -> WeightDistribution:
    """Full weight distribution by enumerating all 2^k codewords (k <= 28)."""
    return _brute(code, 0)


def brute_force_coset_wef(code: LinearCode, x: BitVector) -> WeightDistribution:
    """Full weight distribution of the coset x + C by enumeration (k <= 28)."""
    if x.length != code.length:
        raise ValueError("x has the wrong length")
    return _brute(code, x.bits)


def _brute(code: LinearCode, offset: int) -> WeightDistribution:
    k = code.dimension
    n = code.length
    if k > _BRUTE_MAX_DIM:
        raise ValueError(f"dimension {k} exceeds brute-force limit {_BRUTE_MAX_DIM}")
    words = _nwords(n)
    rows = [_pack(r.bits, words) for r in code.generators.rows]
    base_dim = min(k, 20)
    arr = _pack(offset, words).reshape(1, -1)
    for i in range(base_dim):
        arr = np.concatenate([arr, arr ^ rows[i]])
    tally = np.zeros(n + 1, dtype=np.int64)
    cur = np.zeros(words, dtype=np.uint64)
    steps = 1 << (k - base_dim)
    for step in range(steps):
        if step:
            flip = (step & -step).bit_length() - 1
            cur = cur ^ rows[base_dim + flip]
        tally += np.bincount(_weights_of(arr ^ cur), minlength=n + 1)
    counts = {w: int(c) for w, c in enumerate(tally) if c}
    return WeightDistribution(counts=counts, complete_upto=n, total_dim=k)
