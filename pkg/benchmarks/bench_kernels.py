"""Benchmark the numba kernels against the pure-numpy fallback.

Runs each backend in its own subprocess (the backend is chosen once at
import time via SL3FUSION_BACKEND), checks that both produce identical
results, and prints a timing table.

Usage: python benchmarks/bench_kernels.py [--repeat N]
"""

from __future__ import annotations

import argparse
import json
import os
import subprocess
import sys
import time


def _bench_worker(repeat: int) -> dict:
    from sl3fusion import _kernels
    from sl3fusion.characters import tensor_decompose
    from sl3fusion.weights import dominant_weights_up_to

    def best_of(fn) -> tuple[float, object]:
        value = fn()  # warm-up: triggers JIT compilation on the numba path
        best = float("inf")
        for _ in range(repeat):
            started = time.perf_counter()
            value = fn()
            best = min(best, time.perf_counter() - started)
        return best, value

    results: dict[str, float] = {}
    checksums: dict[str, int] = {}

    t, table = best_of(lambda: _kernels.freudenthal_table(40, 40))
    results["freudenthal_table(40,40)"] = t
    checksums["freudenthal_table(40,40)"] = int(table.sum())

    t, conv = best_of(lambda: _kernels.convolve2d(table, table))
    results["convolve2d(81x81, 81x81)"] = t
    checksums["convolve2d(81x81, 81x81)"] = int(conv.sum())

    def sweep() -> int:
        total = 0
        for lam in dominant_weights_up_to(3):
            for mu in dominant_weights_up_to(3):
                for (n1, n2), m in tensor_decompose(lam, mu).items():
                    total += m * (3 * n1 + 7 * n2 + 11)
        return total

    t, total = best_of(sweep)
    results["tensor sweep (coords <= 3)"] = t
    checksums["tensor sweep (coords <= 3)"] = total

    return {
        "backend": _kernels.ACTIVE_BACKEND,
        "results": results,
        "checksums": checksums,
    }


def main(argv: list[str] | None = None) -> int:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--repeat", type=int, default=3, help="timed repeats")
    parser.add_argument("--worker", action="store_true", help=argparse.SUPPRESS)
    args = parser.parse_args(argv)

    if args.worker:
        json.dump(_bench_worker(args.repeat), sys.stdout)
        return 0

    payloads = {}
    for backend in ("numpy", "numba"):
        env = dict(os.environ, SL3FUSION_BACKEND=backend)
        proc = subprocess.run(
            [sys.executable, __file__, "--worker", "--repeat", str(args.repeat)],
            env=env,
            capture_output=True,
            text=True,
        )
        if proc.returncode != 0:
            print(f"{backend} backend unavailable:\n{proc.stderr}", file=sys.stderr)
            continue
        payload = json.loads(proc.stdout)
        assert payload["backend"] == backend, payload
        payloads[backend] = payload

    if len(payloads) == 2:
        assert payloads["numpy"]["checksums"] == payloads["numba"]["checksums"], (
            "backends disagree"
        )
        print("checksums identical across backends\n")

    names = next(iter(payloads.values()))["results"].keys()
    width = max(len(n) for n in names)
    header = f"{'kernel':<{width}} " + "".join(f"{b:>12}" for b in payloads)
    print(header)
    print("-" * len(header))
    for name in names:
        cells = "".join(
            f"{payloads[b]['results'][name] * 1000:>10.2f}ms" for b in payloads
        )
        print(f"{name:<{width}} {cells}")
    return 0 if payloads else 1


if __name__ == "__main__":
    sys.exit(main())
