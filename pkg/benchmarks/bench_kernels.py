"""Throughput comparison of the pure-numpy and numba kernel backends.

Each hot kernel is timed at shapes matching the default desk model. Both
twin implementations are imported directly, so the PUSHTELL_NUMBA flag has
no effect here; the first numba call per kernel compiles (or loads the
on-disk cache) and is excluded via warmup.

Usage:
    python3 benchmarks/bench_kernels.py [--repeats N]
"""

from __future__ import annotations

import argparse
import time
from statistics import median

import numpy as np

from pushtell import kernels


def _time(fn, repeats: int) -> float:
    fn()  # warmup; triggers JIT compilation on the numba side
    times = []
    for _ in range(repeats):
        t0 = time.perf_counter()
        fn()
        times.append(time.perf_counter() - t0)
    return median(times)


def _softmax_case(rng):
    # attention scores for the desk model: batch 8, 4 heads, seq 256
    scores = rng.standard_normal((8, 4, 256, 256)).astype(np.float32)
    seq = scores.shape[-1]
    prefix = 68  # image patches + prompt
    allowed = np.zeros((seq, seq), dtype=bool)
    allowed[:prefix, :prefix] = True
    allowed[prefix:] = np.tril(np.ones((seq, seq), dtype=bool))[prefix:]
    allowed = np.broadcast_to(allowed, scores.shape)
    return (
        "masked_softmax",
        f"{scores.shape}",
        lambda: kernels.masked_softmax_numpy(scores, allowed),
        lambda: kernels.masked_softmax_numba(scores, allowed),
    )


def _adam_case(rng, n: int):
    grad = rng.standard_normal(n).astype(np.float32)
    state = {}

    def run(fn):
        if fn not in state:
            state[fn] = (
                np.zeros(n, dtype=np.float32),
                np.zeros(n, dtype=np.float32),
                np.zeros(n, dtype=np.float32),
            )
        param, m, v = state[fn]
        fn(param, grad, m, v, 1e-3, 0.9, 0.999, 1e-8, 0.1, 0.001)

    return (
        "adam_step",
        f"({n},)",
        lambda: run(kernels.adam_step_numpy),
        lambda: run(kernels.adam_step_numba),
    )


def _render_case(rng, resolution: int):
    n = 6  # five blocks plus the pointer
    kinds = np.array([0, 1, 2, 3, 4, 4], dtype=np.int64)
    cx = rng.uniform(2, resolution - 2, n)
    cy = rng.uniform(2, resolution - 2, n)
    r = np.full(n, 0.06 * resolution)
    colors = rng.uniform(0.2, 1.0, (n, 3)).astype(np.float32)
    bg = (0.08, 0.08, 0.10)
    return (
        "render_glyphs",
        f"res={resolution}, 6 glyphs",
        lambda: kernels.render_glyphs_numpy(resolution, bg, kinds, cx, cy, r, colors),
        lambda: kernels.render_glyphs_numba(resolution, bg, kinds, cx, cy, r, colors),
    )


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--repeats", type=int, default=30, help="timed calls per kernel")
    args = ap.parse_args()

    rng = np.random.default_rng(0)
    cases = [
        _softmax_case(rng),
        _adam_case(rng, 65_536),   # largest single tensor (ff weights)
        _adam_case(rng, 869_649),  # whole model, flattened
        _render_case(rng, 32),     # dataset resolution
        _render_case(rng, 128),
    ]

    header = f"{'kernel':<16} {'shape':<22} {'numpy':>10} {'numba':>10} {'speedup':>8}"
    print(header)
    print("-" * len(header))
    for name, shape, np_fn, nb_fn in cases:
        t_np = _time(np_fn, args.repeats)
        if kernels.HAVE_NUMBA:
            t_nb = _time(nb_fn, args.repeats)
            ratio = f"{t_np / t_nb:7.2f}x"
            nb_col = f"{t_nb * 1e3:8.3f}ms"
        else:
            ratio, nb_col = "      --", "        --"
        print(f"{name:<16} {shape:<22} {t_np * 1e3:8.3f}ms {nb_col} {ratio}")

    if not kernels.HAVE_NUMBA:
        print("\nnumba not importable; only the numpy backend was timed")


if __name__ == "__main__":
    main()
