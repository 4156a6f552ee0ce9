#!/usr/bin/env python3
"""Run every verification suite over a range of sizes and print a table.

Usage: python scripts/run_verification.py [max_n]
"""

import sys
import time

from qlie import checks, rtt


def main() -> int:
    max_n = int(sys.argv[1]) if len(sys.argv) > 1 else 4
    suites = [
        ("braid", lambda n: checks.suite_braid(n)),
        ("ybe", lambda n: checks.suite_ybe(n)),
        ("cybe", lambda n: checks.suite_cybe(n)),
        ("components", lambda n: checks.check_component_identities(n)),
        ("ybfr", lambda n: checks.check_quadratic_ybe_components(n)),
        ("qlie", lambda n: checks.suite_qlie(n)),
        ("rtt", lambda n: rtt.compare_relation_spans(n)),
        ("cross-check", lambda n: checks.suite_cross_check(n)),
        ("hecke", lambda n: checks.suite_hecke(n)),
    ]
    print(f"{'suite':<12} {'n':>2} {'status':<6} {'checked':>8} {'ms':>6}")
    t0 = time.perf_counter()
    failed = 0
    for n in range(1, max_n + 1):
        for name, run in suites:
            report = run(n)
            status = "PASS" if report.passed else "FAIL"
            failed += not report.passed
            print(f"{name:<12} {n:>2} {status:<6} {report.checked:>8} {report.millis:>6}")
    print(f"\ntotal wall time: {time.perf_counter() - t0:.1f}s")
    return 1 if failed else 0


if __name__ == "__main__":
    sys.exit(main())
