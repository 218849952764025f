"""Rooted one-face maps as dart permutations.

A map on ``2n`` darts is stored as its edge involution ``alpha`` only.  The
face permutation is fixed to the standard cycle ``gamma(i) = i + 1 mod 2n``
(the root is dart 0), and the vertex permutation is derived as
``sigma = alpha . gamma``, composing right to left.  Every value of
:class:`RootedMap` is therefore a unicellular map, and rooted one-face maps
on ``2n`` darts are in bijection with fixed-point-free involutions.
"""

from __future__ import annotations

import json
from collections import Counter
from dataclasses import dataclass
from typing import Iterable, Sequence

__all__ = [
    "MapError",
    "RootedMap",
    "cycles",
    "compose",
]


class MapError(ValueError):
    """A dart array violates a map invariant.

    ``invariant`` names the violated property so that callers (the CLI in
    particular) can report it.
    """

    def __init__(self, invariant: str, message: str):
        super().__init__(f"{invariant}: {message}")
        self.invariant = invariant


def compose(*perms: Sequence[int]) -> list[int]:
    """Product of permutations in array form, rightmost applied first.

    >>> compose([1, 2, 0], [0, 2, 1])
    [1, 0, 2]
    """
    n = len(perms[0])
    out = list(range(n))
    for p in reversed(perms):
        out = [p[i] for i in out]
    return out


def cycles(perm: Sequence[int]) -> list[tuple[int, ...]]:
    """Disjoint cycles of ``perm``, each starting at its smallest element.

    Cycles are listed in order of their smallest element.
    """
    seen = [False] * len(perm)
    out = []
    for start in range(len(perm)):
        if seen[start]:
            continue
        cyc = []
        d = start
        while not seen[d]:
            seen[d] = True
            cyc.append(d)
            d = perm[d]
        out.append(tuple(cyc))
    return out


@dataclass(frozen=True)
class RootedMap:
    darts: int
    alpha: tuple[int, ...]

    def __post_init__(self):
        n2, alpha = self.darts, self.alpha
        if isinstance(n2, bool) or not isinstance(n2, int):
            raise MapError("dart-count", f"dart count must be an integer, got {n2!r}")
        if n2 < 2 or n2 % 2:
            raise MapError("dart-count", f"dart count must be even and >= 2, got {n2}")
        if len(alpha) != n2:
            raise MapError("length", f"alpha has {len(alpha)} entries, expected {n2}")
        for i, a in enumerate(alpha):
            if isinstance(a, bool) or not isinstance(a, int) or not 0 <= a < n2:
                raise MapError("range", f"alpha[{i}] = {a!r} is not a dart in [0, {n2})")
        for i, a in enumerate(alpha):
            if a == i:
                raise MapError("fixed-point-free", f"alpha fixes dart {i}")
            if alpha[a] != i:
                raise MapError("involution", f"alpha[alpha[{i}]] = {alpha[a]} != {i}")

    @classmethod
    def from_alpha(cls, darts: int, alpha: Iterable[int]) -> RootedMap:
        return cls(darts, tuple(alpha))

    @classmethod
    def from_pairs(cls, darts: int, pairs: Iterable[tuple[int, int]]) -> RootedMap:
        """Build a map from its edges given as dart pairs."""
        alpha = [-1] * darts
        for a, b in pairs:
            alpha[a] = b
            alpha[b] = a
        return cls(darts, tuple(alpha))

    @property
    def edges(self) -> int:
        return self.darts // 2

    def gamma(self, d: int) -> int:
        self._check_dart(d)
        return (d + 1) % self.darts

    def sigma(self, d: int) -> int:
        self._check_dart(d)
        return self.alpha[(d + 1) % self.darts]

    def sigma_perm(self) -> list[int]:
        a, n2 = self.alpha, self.darts
        return [a[(i + 1) % n2] for i in range(n2)]

    def vertices(self) -> list[tuple[int, ...]]:
        """Cycles of sigma, each with its minimum dart first."""
        return cycles(self.sigma_perm())

    def vertex_of(self) -> list[int]:
        """Index into :meth:`vertices` for every dart."""
        owner = [0] * self.darts
        for v, cyc in enumerate(self.vertices()):
            for d in cyc:
                owner[d] = v
        return owner

    def genus(self) -> int:
        k = len(self.vertices())
        twice = self.edges - k + 1
        # Euler: n - k = 2g - 1 for a single face
        assert twice % 2 == 0 and twice >= 0, f"corrupted map: n - k + 1 = {twice}"
        return twice // 2

    def degree_profile(self) -> dict[int, int]:
        return dict(sorted(Counter(len(c) for c in self.vertices()).items()))

    def is_four_regular(self) -> bool:
        return set(self.degree_profile()) == {4}

    def is_one_four_valent(self) -> bool:
        return set(self.degree_profile()) <= {1, 4}

    def rotate(self, j: int) -> RootedMap:
        """Re-root ``j`` steps along the face: conjugate alpha by gamma**j."""
        n2, a = self.darts, self.alpha
        j %= n2
        return RootedMap(n2, tuple((a[(d - j) % n2] + j) % n2 for d in range(n2)))

    def rotation_stabilizer(self) -> int:
        """Number of ``j`` in ``[0, 2n)`` with ``rotate(j) == self``."""
        n2, a = self.darts, self.alpha
        return sum(
            1
            for j in range(n2)
            if all(a[(d + j) % n2] == (a[d] + j) % n2 for d in range(n2))
        )

    def to_json(self) -> str:
        return json.dumps({"darts": self.darts, "alpha": list(self.alpha)})

    @classmethod
    def from_json(cls, text: str) -> RootedMap:
        try:
            obj = json.loads(text)
        except json.JSONDecodeError as exc:
            raise MapError("json", str(exc)) from None
        if not isinstance(obj, dict) or set(obj) != {"darts", "alpha"}:
            raise MapError("json", 'expected an object with keys "darts" and "alpha"')
        if not isinstance(obj["alpha"], list):
            raise MapError("json", '"alpha" must be an array')
        return cls(obj["darts"], tuple(obj["alpha"]))

    def _check_dart(self, d: int) -> None:
        if not 0 <= d < self.darts:
            raise IndexError(f"dart {d} out of range [0, {self.darts})")

    # Figure-style notation, 0-based: "(0,9)(1,11)..."
    def __str__(self) -> str:
        pairs = "".join(f"({c[0]},{c[1]})" for c in cycles(self.alpha))
        return f"RootedMap[{self.darts}] alpha={pairs}"
