"""Reference counters that share no code with the engine.

``injective_profile`` is the definition read literally: sequences of distinct
vertices with consecutive ones adjacent, each undirected path seen twice.
``dfs_profile`` is a plain recursive walk, usable up to n of about 12.
"""

from itertools import permutations

import networkx as nx


def injective_profile(g):
    adj = [set(r) for r in g.adjacency]
    out = [g.n]
    for l in range(1, g.n):
        seqs = sum(
            all(s[i + 1] in adj[s[i]] for i in range(l)) for s in permutations(range(g.n), l + 1)
        )
        assert seqs % 2 == 0
        out.append(seqs // 2)
    return out


def injective_pn(g):
    return sum(injective_profile(g))


def dfs_profile(g):
    counts = [0] * max(g.n, 1)
    seen = [False] * g.n

    def walk(v, depth):
        counts[depth] += 1
        seen[v] = True
        for w in g.adjacency[v]:
            if not seen[w]:
                walk(w, depth + 1)
        seen[v] = False

    for s in range(g.n):
        walk(s, 0)
    return [counts[0]] + [c // 2 for c in counts[1:]]


def networkx_pn(g):
    h = nx.Graph()
    h.add_nodes_from(range(g.n))
    h.add_edges_from(g.edges())
    total = g.n
    for x in range(g.n):
        for y in range(x + 1, g.n):
            total += sum(1 for _ in nx.all_simple_paths(h, x, y))
    return total


def to_networkx(g):
    h = nx.Graph()
    h.add_nodes_from(range(g.n))
    h.add_edges_from(g.edges())
    return h
