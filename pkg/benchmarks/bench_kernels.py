#!/usr/bin/env python3
"""Time the compiled kernels against the pure-Python fallback.

Each mode runs in its own interpreter because the JIT switch is read at import.
Compile time is excluded: every workload is run once before it is timed.

    python3 benchmarks/bench_kernels.py [--repeat 3] [--quick]
"""
from __future__ import annotations

import argparse
import json
import os
import subprocess
import sys
import time

WORKLOADS = {
    # name: (full-size args, quick args)
    "throttle_path": (21, 12),
    "throttle_balanced": ((4, 5), (3, 3)),
    "census": ((30, 45), (10, 21)),
}


def _run_workload(name: str, arg):
    from psdthrottle.census import census_range
    from psdthrottle.graphs import make_balanced_spider, make_path
    from psdthrottle.throttling import th_plus

    if name == "throttle_path":
        g = make_path(arg)
        return lambda: th_plus(g).value
    if name == "throttle_balanced":
        g = make_balanced_spider(*arg)
        return lambda: th_plus(g).value
    if name == "census":
        return lambda: [r.super_count for r in census_range(*arg)]
    raise KeyError(name)


def worker(quick: bool, repeat: int) -> None:
    from psdthrottle._accel import JIT_ENABLED

    out = {"jit": JIT_ENABLED, "results": {}}
    for name, (full, small) in WORKLOADS.items():
        fn = _run_workload(name, small if quick else full)
        value = fn()  # warm-up, triggers compilation
        best = float("inf")
        for _ in range(repeat):
            t0 = time.perf_counter()
            fn()
            best = min(best, time.perf_counter() - t0)
        out["results"][name] = {"seconds": best, "value": value}
    json.dump(out, sys.stdout)


def spawn(disable_jit: bool, quick: bool, repeat: int) -> dict:
    env = dict(os.environ)
    env.pop("PSDTHROTTLE_DISABLE_JIT", None)
    if disable_jit:
        env["PSDTHROTTLE_DISABLE_JIT"] = "1"
    cmd = [sys.executable, __file__, "--worker", "--repeat", str(repeat)]
    if quick:
        cmd.append("--quick")
    proc = subprocess.run(cmd, env=env, capture_output=True, text=True, check=True)
    return json.loads(proc.stdout)


def main(argv: list[str] | None = None) -> int:
    ap = argparse.ArgumentParser(description=__doc__, formatter_class=argparse.RawDescriptionHelpFormatter)
    ap.add_argument("--repeat", type=int, default=3)
    ap.add_argument("--quick", action="store_true", help="smaller inputs")
    ap.add_argument("--worker", action="store_true", help=argparse.SUPPRESS)
    args = ap.parse_args(argv)
    if args.worker:
        worker(args.quick, args.repeat)
        return 0

    jit = spawn(False, args.quick, args.repeat)
    pure = spawn(True, args.quick, args.repeat)
    print(f"{'workload':<20}{'jit [s]':>12}{'python [s]':>14}{'speedup':>10}")
    ok = True
    for name in WORKLOADS:
        a, b = jit["results"][name], pure["results"][name]
        ok &= a["value"] == b["value"]
        speedup = b["seconds"] / a["seconds"] if a["seconds"] > 0 else float("inf")
        print(f"{name:<20}{a['seconds']:>12.4f}{b['seconds']:>14.4f}{speedup:>9.1f}x")
    if not jit["jit"]:
        print("warning: numba unavailable, both columns ran the fallback", file=sys.stderr)
    if not ok:
        print("error: compiled and fallback results differ", file=sys.stderr)
        return 1
    return 0


if __name__ == "__main__":
    sys.exit(main())
