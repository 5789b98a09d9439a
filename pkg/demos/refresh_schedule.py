"""Who writes which step of the latent timeline?

Builds a three-level hierarchy with random (untrained) blocks and k = 3, rolls
it out, and prints the producer of every index. Level 2 first acts at 9,
level 3 at 27, and the coarsest level wins where they coincide.

    python demos/refresh_schedule.py
"""

import numpy as np

from refreshnet.nn import LstmParams
from refreshnet.propagator import Block, BlockConfig
from refreshnet.scheduler import BlockHierarchy, RefreshPolicy, operational_time, rollout, tag_name

k, B, T = 3, 3, 60
rng = np.random.default_rng(0)
blocks = [Block(BlockConfig(b, 2, 4, k), LstmParams.init(2, 4, rng)) for b in range(1, B + 1)]
h = BlockHierarchy(blocks, k)
warmup = rng.uniform(0.2, 0.8, size=(k, 2))

for b in range(1, B + 1):
    print(f"level {b}: stride {k ** (b - 1):3d}, first prediction at t = {operational_time(b, k)}")

for mode in ("anchor", "window"):
    buf = rollout(h, warmup, T, RefreshPolicy(mode=mode))
    line = "".join("d" if g == 0 else str(g) for g in buf.tags)
    print(f"\n{mode} mode producers (d = data):")
    for start in range(0, T + 1, 30):
        print(f"  t={start:3d}  {line[start:start + 30]}")
    print("  histogram:", {tag_name(t): int(n) for t, n in zip(*np.unique(buf.tags, return_counts=True))})
