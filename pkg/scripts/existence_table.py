"""Print the existence verdict for every delta in a range, with timings.

    python scripts/existence_table.py --max-delta 16 [--confirm]
"""

from __future__ import annotations

import argparse
import time
from dataclasses import dataclass

from tdcrit.cli import existence_verdict


@dataclass
class TableConfig:
    min_delta: int = 2
    max_delta: int = 16
    confirm: bool = False
    workers: int = 1


def run(cfg: TableConfig) -> None:
    for delta in range(cfg.min_delta, cfg.max_delta + 1):
        t0 = time.perf_counter()
        verdict = existence_verdict(delta, confirm=cfg.confirm, workers=cfg.workers)
        print(f"{verdict.line()} seconds={time.perf_counter() - t0:.2f}", flush=True)


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--min-delta", type=int, default=TableConfig.min_delta)
    ap.add_argument("--max-delta", type=int, default=TableConfig.max_delta)
    ap.add_argument("--confirm", action="store_true", help="rerun searches for delta <= 8")
    ap.add_argument("--workers", type=int, default=TableConfig.workers)
    run(TableConfig(**vars(ap.parse_args())))


if __name__ == "__main__":
    main()
