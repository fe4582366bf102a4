"""Compare the recursive algorithm with exhaustive search on random sinks.

The brute-force side enumerates every degeneracy into the target through
which all legs factor, then picks the least one.  It shares no code with the
recursive algorithm beyond the data structures.

Usage: ``python demos/02_against_brute_force.py [count] [seed]``
"""

import sys
import time
from collections import Counter

from zignorm import BudgetExceeded, normalise_sink
from zignorm.corpus import corpus
from zignorm.oracle import oracle_normalise

count = int(sys.argv[1]) if len(sys.argv) > 1 else 100
seed = int(sys.argv[2]) if len(sys.argv) > 2 else 1

sinks = corpus(seed, count)
shapes = Counter((s.target.dimension, len(s.legs)) for s in sinks)
print(f"{count} sinks from seed {seed}; (dimension, legs) ->", dict(sorted(shapes.items())))

fast = slow = 0.0
agree = skipped = 0
for sink in sinks:
    t0 = time.perf_counter()
    r = normalise_sink(sink)
    t1 = time.perf_counter()
    try:
        o = oracle_normalise(sink.target, sink.legs)
    except BudgetExceeded:
        skipped += 1
        continue
    finally:
        fast, slow = fast + t1 - t0, slow + time.perf_counter() - t1
    same = o.normaliser is r.normaliser and o.factorisations == r.factorisations
    agree += same
    if not same:
        print("disagreement on", sink)

print(f"agree on {agree} of {count - skipped} decided sinks ({skipped} beyond the search budget)")
print(f"recursive: {fast:.2f} s total, brute force: {slow:.2f} s total")
