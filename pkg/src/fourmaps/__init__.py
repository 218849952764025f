"""Exact enumeration of 4-regular one-face maps, rooted and unrooted."""

from .bijection import Triple, cut, glue, is_intertwined, trisections
from .closedform import eps14, eps4_rooted, fuss_catalan4
from .oracle import SearchSpec, count_rooted, count_unrooted_burnside, enumerate_rooted
from .orbifold import OrbifoldSignature, eps4_unrooted, epi0, signatures_for
from .permmap import MapError, RootedMap

__version__ = "0.1.0"
