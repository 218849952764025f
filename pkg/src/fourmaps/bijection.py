"""Trisections and vertex cut/glue surgery on one-face maps.

Gluing takes three darts ``a1 < a2 < a3`` at three distinct vertices and
merges those vertices by composing sigma with a 3-cycle on the triple, keeping
the edges.  The face is composed with the same 3-cycle, so one orientation
keeps a single face (the surgery raises the genus by one) while the other
splits it in three.  Cutting is the inverse operation at an intertwined
triple.

Because a :class:`RootedMap` always has the standard face cycle, the result
is relabelled along its new face starting from the root dart.  Dart identities
are tracked through that relabelling: the ``*_with_triple`` variants return
the image of the triple, which is the triple to hand to the inverse surgery.
"""

from __future__ import annotations

import logging
from typing import NamedTuple

from .permmap import RootedMap

__all__ = [
    "Triple",
    "trisections",
    "is_intertwined",
    "intertwined_triples",
    "glue",
    "glue_with_triple",
    "cut",
    "cut_with_triple",
]

log = logging.getLogger(__name__)


class Triple(NamedTuple):
    a1: int
    a2: int
    a3: int

    def check(self, m: RootedMap) -> Triple:
        if not (0 <= self.a1 < self.a2 < self.a3 < m.darts):
            raise ValueError(f"triple {tuple(self)} must satisfy 0 <= a1 < a2 < a3 < {m.darts}")
        return self


def trisections(m: RootedMap) -> list[int]:
    """Darts ``h`` with ``sigma(h) < h`` and ``sigma(h)`` not minimal at its vertex."""
    sigma = m.sigma_perm()
    vmin = [0] * m.darts
    for cyc in m.vertices():
        for d in cyc:
            vmin[d] = cyc[0]
    return [h for h in range(m.darts) if sigma[h] < h and sigma[h] != vmin[h]]


def _vertex_order(m: RootedMap, t: Triple) -> tuple[int, ...]:
    """The triple as visited by sigma starting at ``a1``; error if not co-vertex."""
    sigma = m.sigma_perm()
    wanted = set(t)
    seen = [t.a1]
    d = sigma[t.a1]
    while d != t.a1:
        if d in wanted:
            seen.append(d)
        d = sigma[d]
    if len(seen) != 3:
        raise ValueError(f"darts {tuple(t)} do not share a vertex")
    return tuple(seen)


def is_intertwined(m: RootedMap, t: Triple) -> bool:
    """True when the vertex visits the triple as ``(a1, a3, a2)``.

    In the face order the triple reads ``a1 < a2 < a3``; intertwined means the
    vertex cycle goes round the other way.
    """
    t = Triple(*t).check(m)
    return _vertex_order(m, t) == (t.a1, t.a3, t.a2)


def intertwined_triples(m: RootedMap) -> list[Triple]:
    out = []
    for cyc in m.vertices():
        if len(cyc) < 3:
            continue
        ds = sorted(cyc)
        for i in range(len(ds)):
            for j in range(i + 1, len(ds)):
                for k in range(j + 1, len(ds)):
                    t = Triple(ds[i], ds[j], ds[k])
                    if is_intertwined(m, t):
                        out.append(t)
    return sorted(out)


def _surgery(m: RootedMap, cyc3: tuple[int, int, int]):
    """Compose sigma and gamma with the 3-cycle ``x -> y -> z -> x``.

    Returns ``(new_map, relabel)`` or ``None`` when the new face splits.
    ``relabel[d]`` is the label of old dart ``d`` in ``new_map``.
    """
    x, y, z = cyc3
    n2 = m.darts
    c = list(range(n2))
    c[x], c[y], c[z] = y, z, x
    # gamma' = gamma . c, traversed from the root
    relabel = [-1] * n2
    d = 0
    for pos in range(n2):
        if relabel[d] != -1:
            return None
        relabel[d] = pos
        d = (c[d] + 1) % n2
    if d != 0:
        return None
    alpha = [0] * n2
    for d, a in enumerate(m.alpha):
        alpha[relabel[d]] = relabel[a]
    return RootedMap(n2, tuple(alpha)), relabel


def _image(relabel: list[int], darts) -> Triple:
    return Triple(*sorted(relabel[d] for d in darts))


def glue_with_triple(m: RootedMap, t: Triple) -> tuple[RootedMap, Triple]:
    """Merge the three vertices holding ``t``; return the map and the image of ``t``.

    The image triple is intertwined at the merged vertex.
    """
    t = Triple(*t).check(m)
    owner = m.vertex_of()
    if len({owner[d] for d in t}) != 3:
        raise ValueError(f"darts {tuple(t)} must lie at three distinct vertices")
    genus = m.genus()
    found = []
    for cyc3 in ((t.a1, t.a2, t.a3), (t.a1, t.a3, t.a2)):
        res = _surgery(m, cyc3)
        if res is None:
            continue
        new, relabel = res
        image = _image(relabel, t)
        if is_intertwined(new, image):
            found.append((new, image))
    if len(found) > 1:
        log.warning("both gluing orientations are unicellular for %s at %s", m, t)
    assert found, f"no gluing orientation is unicellular and intertwined for {m} at {t}"
    new, image = found[0]
    assert new.genus() == genus + 1
    return new, image


def glue(m: RootedMap, t: Triple) -> RootedMap:
    return glue_with_triple(m, t)[0]


def cut_with_triple(m: RootedMap, t: Triple) -> tuple[RootedMap, Triple]:
    """Split the vertex at an intertwined triple into three vertices.

    Returns the genus ``g - 1`` map and the image of ``t``, which lies at three
    distinct vertices.
    """
    t = Triple(*t).check(m)
    if not is_intertwined(m, t):
        raise ValueError(f"triple {tuple(t)} is not intertwined")
    genus = m.genus()
    # intertwined => the vertex reads (a1 a3 a2); composing with (a1 a2 a3)
    # splits it and keeps one face
    res = _surgery(m, (t.a1, t.a2, t.a3))
    assert res is not None, f"cut at {t} splits the face of {m}"
    new, relabel = res
    image = _image(relabel, t)
    owner = new.vertex_of()
    assert len({owner[d] for d in image}) == 3
    assert new.genus() == genus - 1
    return new, image


def cut(m: RootedMap, t: Triple) -> RootedMap:
    return cut_with_triple(m, t)[0]
