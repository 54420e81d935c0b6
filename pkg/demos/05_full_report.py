"""
A verification report
=====================

Run every suite on so_8 in sampled mode and summarise the report.
"""
import time

from iwcontract.verify import overall_status, run_suites

t0 = time.perf_counter()
checks = run_suites("D4", suites=("structure", "invariance", "index", "regularity", "highest"),
                    mode="sampled", seed=1)
for c in checks:
    print(f"{c.status:12s} {c.name:36s} {c.details[:70]}")
print("overall:", overall_status(checks), f"({time.perf_counter() - t0:.1f}s)")
