"""Compare the compiled and pure-Python canonical-labelling kernels.

Run from the repository root: ``python3 benchmarks/bench_canon.py``.
Both backends are timed on the same inputs and their outputs are checked to
agree, so a run doubles as a consistency test.
"""

from __future__ import annotations

import time

from dessinkit import _canon, _kernel
from dessinkit.blocks import cubic_block, enumerate_blocks
from dessinkit.core_map import canonical_code
from dessinkit.correspondence import dessin_from_skeleton

try:
    from dessinkit import _canon_c
except ImportError:
    _canon_c = None


def inputs():
    yield "cubic-I", cubic_block("I")
    yield "cubic-II", cubic_block("II")
    for d in (2, 3):
        for i, s in enumerate(enumerate_blocks(d, "I")):
            yield f"block-d{d}-I-{i}", dessin_from_skeleton(s)


def bench(backend, maps, repeats=200):
    _kernel.label_stream = backend.label_stream
    _kernel.label_numbering = backend.label_numbering
    start = time.perf_counter()
    codes = []
    for _ in range(repeats):
        codes = [canonical_code(m) for m in maps]
    return time.perf_counter() - start, codes


def main() -> None:
    maps = [m for _, m in inputs()]
    t_py, codes_py = bench(_canon, maps)
    print(f"python   backend: {t_py:8.3f}s for {200 * len(maps)} codes")
    if _canon_c is None:
        print("compiled backend: not built")
        return
    t_c, codes_c = bench(_canon_c, maps)
    print(f"compiled backend: {t_c:8.3f}s for {200 * len(maps)} codes")
    assert codes_py == codes_c, "backends disagree"
    print(f"agreement: ok, speedup x{t_py / t_c:.1f}")


if __name__ == "__main__":
    main()
