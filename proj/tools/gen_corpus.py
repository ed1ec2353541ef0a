#!/usr/bin/env python3
"""Regenerate the graph6 corpora under tests/data.

Requires networkx. Output files hold one graph6 string per line, sorted.

  all_le7.g6     every graph of order 1..7 up to isomorphism
  trees_le9.g6   every tree of order 1..9
  cubic_le10.g6  every 3-regular graph (connected or not) of order 4..10

Cubic graphs are collected by sampling uniformly random regular graphs until
the known class counts are reached; the counts are checked before writing.
"""
import argparse
import pathlib
import random

import networkx as nx

GRAPH_COUNTS = {1: 1, 2: 2, 3: 4, 4: 11, 5: 34, 6: 156, 7: 1044}
TREE_COUNTS = {1: 1, 2: 1, 3: 1, 4: 2, 5: 3, 6: 6, 7: 11, 8: 23, 9: 47}
CUBIC_COUNTS = {4: 1, 6: 2, 8: 6, 10: 21}


def g6(graph):
    relabelled = nx.convert_node_labels_to_integers(graph, ordering="sorted")
    return nx.to_graph6_bytes(relabelled, header=False).decode().strip()


def check(kind, found, expected):
    for n, count in expected.items():
        got = sum(1 for g in found if g.number_of_nodes() == n)
        if got != count:
            raise SystemExit(f"{kind}: order {n} has {got} graphs, expected {count}")


def all_graphs():
    graphs = [g for g in nx.graph_atlas_g() if g.number_of_nodes() >= 1]
    check("graphs", graphs, GRAPH_COUNTS)
    return graphs


def trees():
    found = [nx.empty_graph(1)]
    for n in range(2, 10):
        found.extend(nx.nonisomorphic_trees(n))
    check("trees", found, TREE_COUNTS)
    return found


def cubic(seed):
    rng = random.Random(seed)
    found = []
    for n, count in CUBIC_COUNTS.items():
        classes = []
        attempts = 0
        while len(classes) < count:
            attempts += 1
            if attempts > 2_000_000:
                raise SystemExit(f"cubic: gave up at order {n}")
            g = nx.random_regular_graph(3, n, seed=rng.randrange(1 << 30))
            if not any(nx.is_isomorphic(g, h) for h in classes):
                classes.append(g)
        found.extend(classes)
    check("cubic", found, CUBIC_COUNTS)
    return found


def write(path, graphs):
    lines = sorted({g6(g) for g in graphs}, key=lambda s: (len(s), s))
    path.write_text("".join(line + "\n" for line in lines))
    print(f"{path}: {len(lines)} graphs")


def main():
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--out", default=pathlib.Path(__file__).resolve().parent.parent / "tests" / "data",
                        type=pathlib.Path)
    parser.add_argument("--seed", type=int, default=20240607)
    args = parser.parse_args()
    args.out.mkdir(parents=True, exist_ok=True)
    write(args.out / "all_le7.g6", all_graphs())
    write(args.out / "trees_le9.g6", trees())
    write(args.out / "cubic_le10.g6", cubic(args.seed))


if __name__ == "__main__":
    main()
