"""Compare the split-frame search with the search that also covers the
leaf-adjacent frame, and show the full-enumeration certificates next to them.

The split frames assume the maximum-degree vertex is not adjacent to a leaf.
When it is, the vertex is exempt from the deletion requirement and the
frame argument no longer applies; the corona of K_3 (order 6, maximum degree
3, diameter 3) is such a graph.

    python scripts/exempt_frame_experiment.py --max-delta 6
"""

from __future__ import annotations

import argparse
from dataclasses import dataclass

from tdcrit.graph import decode_graph6, diameter
from tdcrit.search import FULL_MAX_ORDER, search_critical_full, search_critical_pruned


@dataclass
class ExperimentConfig:
    min_delta: int = 2
    max_delta: int = 6
    workers: int = 1


def describe(certs: list[str]) -> str:
    if not certs:
        return "none"
    return " ".join(f"{c}(diam={diameter(decode_graph6(c))})" for c in certs)


def run(cfg: ExperimentConfig) -> None:
    for delta in range(cfg.min_delta, cfg.max_delta + 1):
        split = search_critical_pruned(delta, workers=cfg.workers)
        both = search_critical_pruned(delta, workers=cfg.workers, include_exempt=True)
        print(f"delta={delta}")
        print(f"  split frames   tested={split.graphs_tested:>11} certificates={describe(split.certificates)}")
        print(f"  + exempt frame tested={both.graphs_tested:>11} certificates={describe(both.certificates)}")
        if delta + 3 <= FULL_MAX_ORDER:
            full = search_critical_full(delta + 3, delta, 3, workers=cfg.workers)
            print(f"  full           tested={full.graphs_tested:>11} certificates={describe(full.certificates)}")
        extra = sorted(set(both.certificates) - set(split.certificates))
        if extra:
            print(f"  only with a leaf-adjacent maximum-degree vertex: {' '.join(extra)}")


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--min-delta", type=int, default=ExperimentConfig.min_delta)
    ap.add_argument("--max-delta", type=int, default=ExperimentConfig.max_delta)
    ap.add_argument("--workers", type=int, default=ExperimentConfig.workers)
    run(ExperimentConfig(**vars(ap.parse_args())))


if __name__ == "__main__":
    main()
