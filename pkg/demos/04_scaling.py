"""
Wall-clock scaling
==================

Detection time against network size at a fixed mean degree of 10. Each pass
runs one max-flow per surviving agent, and agents whose previous flow avoids
every removed node are not re-solved.
"""

import time

from localizability import DetectionConfig, detect, generate_unit_disk_for_degree

print(f"{'n':>6} {'edges':>7} {'mode':>4} {'found':>6} {'passes':>6} {'seconds':>8}")
for n in (100, 200, 400, 800):
    net, _ = generate_unit_disk_for_degree(n, anchor_count=10, mean_degree=10, seed=n)
    for mode in ("BLL", "NLL"):
        start = time.perf_counter()
        rep = detect(net, DetectionConfig(mode))
        elapsed = time.perf_counter() - start
        print(f"{n:>6} {net.edge_count:>7} {mode:>4} {len(rep.localizable_agents(net)):>6} {rep.passes:>6} {elapsed:>8.2f}")
