#!/usr/bin/env python3
"""Write every connected graph on 1..7 vertices (up to isomorphism).

Source: the networkx graph atlas, which lists all 1253 graphs with at most
seven vertices. Output is a sequence of edge-list blocks, each introduced by
a "# graph <atlas-id>" comment, followed by "n <count>" and sorted 0-based
edges. Rerunning the script reproduces the file byte for byte.
"""
import sys

import networkx as nx


def main(path):
    blocks = []
    for idx, g in enumerate(nx.graph_atlas_g()):
        if g.number_of_nodes() == 0 or not nx.is_connected(g):
            continue
        edges = sorted(tuple(sorted(e)) for e in g.edges())
        lines = [f"# graph G{idx}", f"n {g.number_of_nodes()}"]
        lines += [f"{u} {v}" for u, v in edges]
        blocks.append("\n".join(lines))
    with open(path, "w") as f:
        f.write("\n\n".join(blocks) + "\n")
    print(f"wrote {len(blocks)} graphs", file=sys.stderr)


if __name__ == "__main__":
    main(sys.argv[1] if len(sys.argv) > 1 else "connected_upto7.txt")
