"""Brute-force ground truth by exhaustive search over edge involutions.

With the face fixed to the standard cycle, rooted one-face maps on ``2n``
darts are exactly the fixed-point-free involutions ``alpha``.  The search
pairs the smallest unpaired dart first, so maps come out in lexicographic
order of ``alpha``.  Pairing ``a`` with ``b`` fixes ``sigma(a-1) = b`` and
``sigma(b-1) = a``; partial sigma-paths are tracked incrementally and a
branch dies as soon as a path grows past the largest allowed degree or a
vertex closes with a degree the target profile has no room for.

Unrooted counts come from Burnside's lemma over the ``2n`` re-rootings along
the face.
"""

from __future__ import annotations

import sys
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from typing import Callable, Iterator, Mapping

from .closedform import EmptyFamily, exact_div, params14
from .permmap import RootedMap

__all__ = [
    "SearchSpec",
    "count_rooted",
    "count_rooted14",
    "count_unrooted_burnside",
    "enumerate_rooted",
    "count_unpruned",
]


@dataclass(frozen=True)
class SearchSpec:
    """Which rooted one-face maps to enumerate.

    ``profile`` is the exact degree histogram ``{degree: vertex count}`` the
    maps must have; it drives the pruning.  With ``profile=None`` every map
    on ``darts`` darts is visited and only ``accept`` filters.  ``accept`` is
    an extra predicate on the finished degree profile.
    """

    darts: int
    profile: tuple[tuple[int, int], ...] | None = None
    accept: Callable[[dict[int, int]], bool] | None = None
    workers: int = 1

    def __post_init__(self):
        if self.darts < 2 or self.darts % 2:
            raise ValueError(f"dart count must be even and >= 2, got {self.darts}")
        if self.profile is not None:
            prof = self.profile.items() if isinstance(self.profile, Mapping) else self.profile
            prof = tuple(sorted((int(d), int(c)) for d, c in prof if c))
            if sum(d * c for d, c in prof) != self.darts:
                raise ValueError(f"profile {dict(prof)} does not account for {self.darts} darts")
            object.__setattr__(self, "profile", prof)
        if self.workers < 1:
            raise ValueError(f"workers must be >= 1, got {self.workers}")

    @classmethod
    def four_regular(cls, g: int, workers: int = 1) -> SearchSpec:
        if g < 1:
            raise ValueError(f"genus must be >= 1, got {g}")
        return cls(8 * g - 4, ((4, 2 * g - 1),), workers=workers)

    @classmethod
    def one_four(cls, g: int, k: int, workers: int = 1) -> SearchSpec:
        """(1,4)-valent maps of genus ``g`` with ``k`` vertices of degree 4."""
        n, s = params14(g, k)
        return cls(2 * n, ((1, s), (4, k)), workers=workers)

    @property
    def bounds(self) -> dict[int, int] | None:
        return None if self.profile is None else dict(self.profile)


class _Search:
    """Incremental sigma-path bookkeeping for one DFS."""

    def __init__(self, darts: int, bounds: dict[int, int] | None):
        self.n2 = darts
        self.bounds = bounds
        self.maxdeg = max(bounds) if bounds else darts
        self.alpha = [-1] * darts
        # for a path endpoint: the other endpoint and the path length
        self.other = list(range(darts))
        self.length = [1] * darts
        self.closed = dict.fromkeys(bounds, 0) if bounds else None

    def _link(self, x: int, y: int, undo: list) -> bool:
        """Record ``sigma(x) = y``; False if the branch must be pruned."""
        other, length = self.other, self.length
        head = other[x]
        if head == y:
            size = length[x]
            closed = self.closed
            if closed is not None:
                if closed.get(size, self.n2) >= self.bounds.get(size, 0):
                    return False
                closed[size] += 1
            undo.append((size,))
            return True
        tail = other[y]
        size = length[x] + length[y]
        if size > self.maxdeg:
            return False
        undo.append((head, tail, other[head], other[tail], length[head], length[tail]))
        other[head], other[tail] = tail, head
        length[head] = length[tail] = size
        return True

    def _undo(self, undo: list) -> None:
        other, length = self.other, self.length
        for rec in reversed(undo):
            if len(rec) == 1:
                if self.closed is not None:
                    self.closed[rec[0]] -= 1
            else:
                head, tail, oh, ot, lh, lt = rec
                other[head], other[tail] = oh, ot
                length[head], length[tail] = lh, lt

    def _pair(self, a: int, b: int, undo: list) -> bool:
        n2 = self.n2
        self.alpha[a] = b
        self.alpha[b] = a
        return self._link((a - 1) % n2, b, undo) and self._link((b - 1) % n2, a, undo)

    def _unpair(self, a: int, b: int, undo: list) -> None:
        self._undo(undo)
        self.alpha[a] = -1
        self.alpha[b] = -1

    def run(self, first: int | None = None) -> Iterator[tuple[int, ...]]:
        """Yield every admissible ``alpha``; ``first`` pins the partner of dart 0."""
        partners = range(1, self.n2) if first is None else (first,)
        for b in partners:
            undo: list = []
            if self._pair(0, b, undo):
                yield from self._rec(1)
            self._unpair(0, b, undo)

    def _rec(self, a: int) -> Iterator[tuple[int, ...]]:
        alpha, n2 = self.alpha, self.n2
        while a < n2 and alpha[a] >= 0:
            a += 1
        if a == n2:
            yield tuple(alpha)
            return
        for b in range(a + 1, n2):
            if alpha[b] >= 0:
                continue
            undo: list = []
            if self._pair(a, b, undo):
                yield from self._rec(a + 1)
            self._unpair(a, b, undo)


def _leaves(spec: SearchSpec, first: int | None = None) -> Iterator[RootedMap]:
    for alpha in _Search(spec.darts, spec.bounds).run(first):
        m = RootedMap(spec.darts, alpha)
        if spec.accept is None or spec.accept(m.degree_profile()):
            yield m


def enumerate_rooted(spec: SearchSpec) -> Iterator[RootedMap]:
    """Every map admitted by ``spec``, once each, in lexicographic alpha order."""
    return _leaves(spec)


def _count_part(spec: SearchSpec, first: int) -> tuple[int, int]:
    count = stab = 0
    for m in _leaves(spec, first):
        count += 1
        stab += m.rotation_stabilizer()
    return count, stab


def _fold(spec: SearchSpec, progress: bool) -> tuple[int, int]:
    """``(rooted count, sum of rotation stabilizers)`` over all maps of ``spec``.

    The search splits by the partner of dart 0; partial results add up.
    """
    firsts = range(1, spec.darts)
    count = stab = 0
    if spec.workers > 1:
        with ProcessPoolExecutor(spec.workers) as pool:
            parts = pool.map(_count_part, [spec] * len(firsts), firsts)
            for i, (c, s) in enumerate(parts, 1):
                count += c
                stab += s
                if progress:
                    print(f"  partition {i}/{len(firsts)} done", file=sys.stderr)
    else:
        for i, first in enumerate(firsts, 1):
            c, s = _count_part(spec, first)
            count += c
            stab += s
            if progress:
                print(f"  partition {i}/{len(firsts)} done", file=sys.stderr)
    return count, stab


def count_rooted(spec: SearchSpec, progress: bool = False) -> int:
    if spec.workers == 1 and not progress:
        return sum(1 for _ in _leaves(spec))
    return _fold(spec, progress)[0]


def count_rooted14(g: int, k: int, workers: int = 1) -> int:
    """Rooted (1,4)-valent one-face maps of genus ``g`` with ``k`` four-valent vertices."""
    try:
        spec = SearchSpec.one_four(g, k, workers)
    except EmptyFamily:
        return 0
    return count_rooted(spec)


def count_unrooted_burnside(spec: SearchSpec, progress: bool = False) -> int:
    """Orbits of the admitted maps under re-rooting along the face.

    Burnside: the number of orbits is the average over ``j`` of the maps fixed
    by rotation ``j``, i.e. ``sum(|stabilizer|) / 2n``.
    """
    _, stab = _fold(spec, progress)
    return exact_div(stab, spec.darts)


def _involutions(n2: int) -> Iterator[list[int]]:
    alpha = [-1] * n2

    def rec(a):
        while a < n2 and alpha[a] >= 0:
            a += 1
        if a == n2:
            yield list(alpha)
            return
        for b in range(a + 1, n2):
            if alpha[b] < 0:
                alpha[a], alpha[b] = b, a
                yield from rec(a + 1)
                alpha[a] = alpha[b] = -1

    return rec(0)


def count_unpruned(spec: SearchSpec) -> int:
    """Count by filtering every involution; no pruning, for cross-checking."""
    want = spec.bounds
    count = 0
    for alpha in _involutions(spec.darts):
        prof = RootedMap(spec.darts, tuple(alpha)).degree_profile()
        if want is not None and prof != want:
            continue
        if spec.accept is not None and not spec.accept(prof):
            continue
        count += 1
    return count
