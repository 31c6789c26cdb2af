"""Verify every extremal claim on its admissible grid and print one TSV row per tuple.

    python scripts/run_census_sweep.py --max-n 7 --bip-max-n 9 --bip-max-r 3 --jobs 4
"""
from __future__ import annotations

import argparse
import sys
import time
from dataclasses import dataclass

from treemax.search import CensusReport, TheoremId, Verdict, admissible_grid, verify_theorem


@dataclass(frozen=True)
class SweepConfig:
    max_n: int = 7
    bip_max_n: int = 9
    bip_max_r: int = 3
    jobs: int = 1

    def grid(self, tid: TheoremId) -> list[tuple]:
        if tid in (TheoremId.BIP_VCONN, TheoremId.BIP_ECONN):
            return admissible_grid(tid, self.bip_max_n, self.bip_max_r)
        return admissible_grid(tid, self.max_n)


def run(cfg: SweepConfig) -> int:
    print("\t".join(CensusReport.TSV_COLUMNS + ("seconds",)))
    failures = 0
    for tid in TheoremId:
        for n, r, d in cfg.grid(tid):
            start = time.perf_counter()
            report = verify_theorem(tid, n, r, d, jobs=cfg.jobs)
            failures += report.verdict is Verdict.FAIL
            print(f"{report.tsv_row()}\t{time.perf_counter() - start:.2f}", flush=True)
    print(f"# failures: {failures}", file=sys.stderr)
    return 2 if failures else 0


def main() -> int:
    p = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    p.add_argument("--max-n", type=int, default=SweepConfig.max_n)
    p.add_argument("--bip-max-n", type=int, default=SweepConfig.bip_max_n)
    p.add_argument("--bip-max-r", type=int, default=SweepConfig.bip_max_r)
    p.add_argument("--jobs", type=int, default=SweepConfig.jobs)
    a = p.parse_args()
    return run(SweepConfig(a.max_n, a.bip_max_n, a.bip_max_r, a.jobs))


if __name__ == "__main__":
    sys.exit(main())
