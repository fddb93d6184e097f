"""The interpreted kernels (JIT disabled) must agree with the compiled ones."""
import json
import os
import subprocess
import sys

import pytest

SCRIPT = """
import json
from psdthrottle._accel import JIT_ENABLED
from psdthrottle.census import census
from psdthrottle.graphs import make_spider, make_balanced_spider, WeightMap
from psdthrottle.throttling import th_plus, th_plus_weighted
t = make_balanced_spider(3, 3)
print(json.dumps({
    "jit": JIT_ENABLED,
    "spider": [th_plus(make_spider((4, 3, 2))).value, sorted(th_plus(make_spider((4, 3, 2))).witness_set)],
    "weighted": th_plus_weighted(t, WeightMap([1] + [2, 1, 3] * 3)).value,
    "census": census(15).super_count,
}))
"""


def _run(disable):
    env = dict(os.environ)
    env.pop("PSDTHROTTLE_DISABLE_JIT", None)
    if disable:
        env["PSDTHROTTLE_DISABLE_JIT"] = "1"
    out = subprocess.run([sys.executable, "-c", SCRIPT], env=env, capture_output=True, text=True, check=True)
    return json.loads(out.stdout)


def test_fallback_matches_compiled():
    fast = _run(False)
    slow = _run(True)
    assert fast.pop("jit") is True
    assert slow.pop("jit") is False
    assert fast == slow
