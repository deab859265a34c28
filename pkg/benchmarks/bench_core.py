"""Benchmark the compiled GF(p) kernels against the pure-Python fallback.

Run:  python benchmarks/bench_core.py

The same inputs go through both backends; outputs are compared for equality
before timing is reported, so this doubles as a consistency check.
"""

import os
import sys
import time

sys.path.insert(0, os.path.join(os.path.dirname(__file__), "..", "src"))

from nilext import _pyfallback as pure  # noqa: E402
from nilext import catalog  # noqa: E402
from nilext.fields import GF  # noqa: E402

try:
    from nilext import _speedups as compiled
except ImportError:
    print("compiled backend not built; run `python setup.py build_ext --inplace`")
    sys.exit(1)


def bench(label, fn_compiled, fn_pure, repeat=1):
    t0 = time.perf_counter()
    for _ in range(repeat):
        got_c = fn_compiled()
    tc = (time.perf_counter() - t0) / repeat
    t0 = time.perf_counter()
    for _ in range(repeat):
        got_p = fn_pure()
    tp = (time.perf_counter() - t0) / repeat
    agree = got_c == got_p
    ratio = tp / tc if tc > 0 else float("inf")
    print(f"{label:<44} compiled {tc*1000:9.2f} ms   pure {tp*1000:10.2f} ms   "
          f"speedup {ratio:7.1f}x   agree={agree}")
    return agree


def main():
    ok = True

    sc_b403_3 = catalog.instantiate("B4_03", {}, GF(3)).flat_sc()
    sc_b507_5 = catalog.instantiate("B5_07", {}, GF(5)).flat_sc()
    sc_b506_5 = catalog.instantiate("B5_06", {}, GF(5)).flat_sc()

    ok &= bench(
        "scan_tables GF(2) dim 2 (256 tables)",
        lambda: compiled.scan_tables(2, 2, 0, 256, True, True, True),
        lambda: pure.scan_tables(2, 2, 0, 256, True, True, True),
        repeat=3,
    )
    ok &= bench(
        "scan_tables GF(3) dim 2 (6561 tables)",
        lambda: compiled.scan_tables(2, 3, 0, 6561, True, True, True),
        lambda: pure.scan_tables(2, 3, 0, 6561, True, True, True),
    )
    ok &= bench(
        "scan_tables GF(2) dim 3 (first 2^16 tables)",
        lambda: compiled.scan_tables(3, 2, 0, 1 << 16, True, True, True),
        lambda: pure.scan_tables(3, 2, 0, 1 << 16, True, True, True),
    )
    ok &= bench(
        "automorphisms B4_03 over GF(3)",
        lambda: compiled.automorphisms(4, 3, sc_b403_3),
        lambda: pure.automorphisms(4, 3, sc_b403_3),
    )
    ok &= bench(
        "canonical_form B5_07 over GF(5)",
        lambda: compiled.canonical_form(5, 5, sc_b507_5),
        lambda: pure.canonical_form(5, 5, sc_b507_5),
    )
    ok &= bench(
        "iso_search B5_06 vs B5_07 over GF(5)",
        lambda: compiled.iso_search(5, 5, sc_b506_5, sc_b507_5),
        lambda: pure.iso_search(5, 5, sc_b506_5, sc_b507_5),
    )
    print("all outputs agree" if ok else "BACKEND DISAGREEMENT -- investigate")
    return 0 if ok else 1


if __name__ == "__main__":
    sys.exit(main())
