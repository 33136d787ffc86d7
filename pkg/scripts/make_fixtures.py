#!/usr/bin/env python3
"""Regenerate the shipped graph6 fixture corpora in src/coalitions/data/.

Needs networkx (dev dependency only; the library itself never imports it).

Corpora:
  cubic_n{4,6,8,10}.g6        connected 3-regular graphs, one per iso class
  four_regular_n{5..9}.g6     connected 4-regular graphs, one per iso class
  order7_min_degree2.g6       connected graphs, n=7, minimum degree >= 2

The regular corpora are collected by sampling random regular graphs and
deduplicating up to isomorphism until the known class counts are reached, so
reaching the target count proves the list is complete.  The n=7 corpus comes
from the networkx graph atlas (which is complete up to 7 vertices).
"""

import sys
from pathlib import Path

import networkx as nx

sys.path.insert(0, str(Path(__file__).resolve().parent.parent / "src"))
from coalitions.graph import Graph  # noqa: E402
from coalitions.graph6 import write_graph6  # noqa: E402

DATA = Path(__file__).resolve().parent.parent / "src" / "coalitions" / "data"

# connected r-regular graph class counts, from the standard enumerations
CUBIC_COUNTS = {4: 1, 6: 2, 8: 5, 10: 19}
FOUR_REGULAR_COUNTS = {5: 1, 6: 1, 7: 2, 8: 6, 9: 16}

MAX_SEEDS = 200_000


def to_graph(nxg) -> Graph:
    relabeled = nx.convert_node_labels_to_integers(nxg, ordering="sorted")
    adj = [0] * relabeled.number_of_nodes()
    for u, v in relabeled.edges():
        adj[u] |= 1 << v
        adj[v] |= 1 << u
    return Graph(len(adj), tuple(adj))


def collect_regular(degree: int, n: int, target: int) -> list[nx.Graph]:
    found: list[nx.Graph] = []
    for seed in range(MAX_SEEDS):
        g = nx.random_regular_graph(degree, n, seed=seed)
        if not nx.is_connected(g):
            continue
        if any(nx.is_isomorphic(g, h) for h in found):
            continue
        found.append(g)
        if len(found) == target:
            return found
    raise SystemExit(
        f"only found {len(found)}/{target} connected {degree}-regular graphs on {n} "
        f"vertices within {MAX_SEEDS} seeds"
    )


def write_corpus(path: Path, graphs: list[nx.Graph]) -> None:
    lines = sorted(write_graph6(to_graph(g)) for g in graphs)
    path.write_bytes(b"\n".join(lines) + b"\n")
    print(f"{path.name}: {len(lines)} graphs")


def main() -> None:
    DATA.mkdir(parents=True, exist_ok=True)

    for n, target in CUBIC_COUNTS.items():
        write_corpus(DATA / f"cubic_n{n}.g6", collect_regular(3, n, target))
    for n, target in FOUR_REGULAR_COUNTS.items():
        write_corpus(DATA / f"four_regular_n{n}.g6", collect_regular(4, n, target))

    atlas = nx.graph_atlas_g()
    order7 = [
        g
        for g in atlas
        if g.number_of_nodes() == 7
        and nx.is_connected(g)
        and min(d for _, d in g.degree()) >= 2
    ]
    write_corpus(DATA / "order7_min_degree2.g6", order7)


if __name__ == "__main__":
    main()
