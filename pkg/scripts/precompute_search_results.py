"""Run the pruned search for delta = 2..8 and store the outcomes.

Writes src/tdcrit/data/search_results.json, which ``tdc exists`` reads.

    python scripts/precompute_search_results.py [--max-delta 8] [--workers 1]
"""

from __future__ import annotations

import argparse
import json
import logging
from pathlib import Path

from tdcrit.search import search_critical_pruned

OUT = Path(__file__).resolve().parents[1] / "src" / "tdcrit" / "data" / "search_results.json"


def main() -> None:
    ap = argparse.ArgumentParser()
    ap.add_argument("--min-delta", type=int, default=2)
    ap.add_argument("--max-delta", type=int, default=8)
    ap.add_argument("--workers", type=int, default=1)
    args = ap.parse_args()
    logging.basicConfig(level=logging.INFO)

    results = json.loads(OUT.read_text()) if OUT.exists() else {}
    for delta in range(args.min_delta, args.max_delta + 1):
        out = search_critical_pruned(delta, workers=args.workers)
        print(out.footer(), flush=True)
        results[str(delta)] = {
            "frames": out.frames_enumerated,
            "tested": out.graphs_tested,
            "certificates": out.certificates,
            "seconds": round(out.elapsed, 1),
        }
        OUT.write_text(json.dumps(results, indent=1, sort_keys=True) + "\n")


if __name__ == "__main__":
    main()
