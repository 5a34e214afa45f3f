#!/usr/bin/env python3
"""Write one graph6 line per isomorphism class of graphs on 8 vertices.

Every order-8 graph arises from an order-7 graph by adding a vertex, so we
extend each order-7 class from the networkx atlas by all 2^7 neighbourhoods
and deduplicate with nauty canonical certificates.
"""
import sys

import networkx as nx
import pynauty

N = 8


def certificate(n, edges):
    adj = {v: [] for v in range(n)}
    for u, v in edges:
        adj[u].append(v)
        adj[v].append(u)
    return pynauty.certificate(pynauty.Graph(n, adjacency_dict=adj))


def main(out):
    seen = {}
    base = [g for g in nx.graph_atlas_g() if g.number_of_nodes() == N - 1]
    for g in base:
        edges = list(g.edges())
        for mask in range(1 << (N - 1)):
            new = edges + [(v, N - 1) for v in range(N - 1) if mask >> v & 1]
            cert = certificate(N, new)
            if cert not in seen:
                seen[cert] = new
    lines = []
    for edges in seen.values():
        h = nx.Graph()
        h.add_nodes_from(range(N))
        h.add_edges_from(edges)
        lines.append(nx.to_graph6_bytes(h, header=False).decode().strip())
    lines.sort()
    with open(out, "w") as f:
        f.write("\n".join(lines) + "\n")
    print(f"{len(lines)} graphs", file=sys.stderr)


if __name__ == "__main__":
    main(sys.argv[1] if len(sys.argv) > 1 else "graphs8.g6")
