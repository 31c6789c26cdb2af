"""Count spanning trees of M-graphs by electrical reduction and compare with the closed form.

Both cliques are replaced by weighted stars, then parallel and serial merges run
to exhaustion. The ledger value must equal the closed form and the Laplacian count.

    python scripts/reduction_pipeline.py --max-n1 6 --trace
"""
from __future__ import annotations

import argparse
import sys
from dataclasses import dataclass

from treemax import extremal as ex
from treemax.io import format_fraction
from treemax.reduce import ReductionLedger, mesh_to_star, reduce_ledger
from treemax.spanning import tau


@dataclass(frozen=True)
class PipelineConfig:
    max_n1: int = 5
    trace: bool = False


def reduce_m_graph(p: ex.MParams) -> ReductionLedger:
    ledger = ReductionLedger.start(ex.build_M(p))
    for block in (range(p.n1), range(p.n1, p.n1 + p.n2)):
        if len(block) >= 2:
            ledger = mesh_to_star(ledger, [ledger.index(v) for v in block])
    return reduce_ledger(ledger)


def run(cfg: PipelineConfig) -> int:
    print("n1\tn2\tq\tclosed_form\tlaplacian\tledger\tresidual_vertices")
    mismatches = 0
    for n1 in range(1, cfg.max_n1 + 1):
        for n2 in range(1, n1 + 1):
            for q in range(1, n2 + 1):
                p = ex.MParams(n1, n2, q)
                ledger = reduce_m_graph(p)
                closed, direct, value = ex.tau_M(p), tau(ex.build_M(p)), ledger.value()
                mismatches += not closed == direct == value
                print(f"{n1}\t{n2}\t{q}\t{closed}\t{direct}\t{format_fraction(value)}\t{ledger.graph.n}")
                if cfg.trace:
                    for step in ledger.steps:
                        print(f"#   {step}")
    print(f"# mismatches: {mismatches}", file=sys.stderr)
    return 1 if mismatches else 0


def main() -> int:
    p = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    p.add_argument("--max-n1", type=int, default=PipelineConfig.max_n1)
    p.add_argument("--trace", action="store_true")
    a = p.parse_args()
    return run(PipelineConfig(a.max_n1, a.trace))


if __name__ == "__main__":
    sys.exit(main())
