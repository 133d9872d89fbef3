"""Benchmark the compiled kernels against the pure-Python fallback.

Run as `python -m braidoka.benchmark`.  Exercises the three hot paths: the
SL(2,Z) word representation, the zero-entropy screen, the exhaustive
trichotomy sweep, and the Weierstrass lattice sum.
"""

from __future__ import annotations

import random
import time

from . import _purekernels


def _load_compiled():
    try:
        from . import _kernels

        return _kernels
    except ImportError:
        return None


def _time(fn, repeats: int = 3) -> float:
    best = float("inf")
    for _ in range(repeats):
        t0 = time.perf_counter()
        fn()
        best = min(best, time.perf_counter() - t0)
    return best


def run(seed: int = 0) -> list[dict]:
    rng = random.Random(seed)
    words = [
        tuple(rng.choice((1, -1, 2, -2)) for _ in range(rng.randint(1, 12)))
        for _ in range(20_000)
    ]
    pairs = [
        (
            tuple(rng.choice((1, -1, 2, -2)) for _ in range(6)),
            tuple(rng.choice((1, -1, 2, -2)) for _ in range(6)),
        )
        for _ in range(20_000)
    ]
    z, tau = 0.23 + 0.31j, 0.5 + 1.2j

    cases = [
        ("theta on 20k words", lambda k: [k.theta_abcd(w) for w in words]),
        ("e0 screen on 20k pairs", lambda k: [k.e0_screen(a, b) for a, b in pairs]),
        ("trichotomy sweep, maxlen 8", lambda k: k.sweep3_stats(8)),
        ("wp lattice sum, R = 120", lambda k: k.wp_sum(z, tau, 120)),
    ]

    compiled = _load_compiled()
    rows = []
    for label, fn in cases:
        pure_t = _time(lambda: fn(_purekernels))
        row = {"case": label, "pure_s": pure_t}
        if compiled is not None:
            comp_t = _time(lambda: fn(compiled))
            row["compiled_s"] = comp_t
            row["speedup"] = pure_t / comp_t if comp_t > 0 else float("inf")
        rows.append(row)
    return rows


def main() -> None:
    rows = run()
    have_compiled = "compiled_s" in rows[0]
    if not have_compiled:
        print("compiled kernels not built; timing the pure backend only\n")
    header = f"{'case':<32} {'pure':>10}"
    if have_compiled:
        header += f" {'compiled':>10} {'speedup':>9}"
    print(header)
    print("-" * len(header))
    for row in rows:
        line = f"{row['case']:<32} {row['pure_s']*1000:>8.2f}ms"
        if have_compiled:
            line += f" {row['compiled_s']*1000:>8.2f}ms {row['speedup']:>8.1f}x"
        print(line)


if __name__ == "__main__":
    main()
