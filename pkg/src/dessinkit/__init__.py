"""dessinkit: decorated graphs in a disk for real trigonal curves.

Core objects are :class:`dessinkit.core_map.DiskMap` instances specialised in
two ways: *dessins* (three-coloured decorated graphs recording the branch data
of the j-invariant) and *skeletons* (their reduced partially directed form).
"""

from .core_map import (
    DiskMap,
    Face,
    MapBuilder,
    MapError,
    Region,
    RewriteRule,
    apply_rewrite,
    build_map,
    canonical_code,
    maps_isomorphic,
    mirror,
    relabel,
)

__version__ = "0.1.0"

__all__ = [
    "DiskMap",
    "Face",
    "MapBuilder",
    "MapError",
    "Region",
    "RewriteRule",
    "apply_rewrite",
    "build_map",
    "canonical_code",
    "maps_isomorphic",
    "mirror",
    "relabel",
    "__version__",
]
