#!/usr/bin/env python3
"""Independent reference computations used to freeze expected values.

Everything here is built on networkx (shortest paths, isomorphism, the graph
atlas, free-tree generation) and does not share any code with the C++ library.
Run it to regenerate tests/golden/ and to print the frozen constants.
"""
import itertools
import os
import sys
from fractions import Fraction

import networkx as nx

HERE = os.path.dirname(os.path.abspath(__file__))
GOLDEN = os.path.join(HERE, "..", "golden")


def tau(g):
    return sum(nx.eccentricity(g).values())


def xi(g):
    e = nx.eccentricity(g)
    return sum(g.degree(v) * e[v] for v in g)


def lex_diametrical_path(t):
    """Lexicographically least path of maximum length starting at the
    smallest peripheral vertex."""
    ecc = nx.eccentricity(t)
    diam = max(ecc.values())
    u = min(v for v in t if ecc[v] == diam)
    dist = nx.single_source_shortest_path_length(t, u)
    best = None
    for v in t:
        if dist[v] != diam:
            continue
        for p in nx.all_shortest_paths(t, u, v):
            if best is None or p < best:
                best = p
    return best


def alg1(t):
    t = t.copy()
    p = lex_diametrical_path(t)
    u, v = p[0], p[-1]
    steps = []
    while True:
        cand = sorted((x, next(iter(t[x]))) for x in t
                      if t.degree(x) == 1 and x not in (u, v))
        if not cand:
            break
        x, y = cand[0]
        t.remove_edge(x, y)
        t.add_edge(u, x)
        steps.append((1, (x, y), (u, x), tau(t), nx.radius(t)))
        u = x
    return t, steps


def alg2(t):
    t = t.copy()
    ecc = nx.eccentricity(t)
    rad = min(ecc.values())
    c = min(v for v in t if ecc[v] == rad)
    steps = []
    rnd = 0
    while rad != 1:
        rnd += 1
        dist = nx.single_source_shortest_path_length(t, c)
        cand = []
        for x in t:
            if dist[x] == rad:
                y = [w for w in t[x] if dist[w] == rad - 1][0]
                cand.append((x, y))
        for x, y in sorted(cand):
            t.remove_edge(x, y)
            t.add_edge(c, x)
            steps.append((rnd, (x, y), (c, x), tau(t), nx.radius(t)))
        ecc = nx.eccentricity(t)
        rad = min(ecc.values())
        assert ecc[c] == rad
    return t, steps


def alg3(t):
    t = t.copy()
    ecc = nx.eccentricity(t)
    rad = min(ecc.values())
    c = min(v for v in t if ecc[v] == rad)
    steps = []
    rnd = 0
    while rad != 2:
        rnd += 1
        dist = nx.single_source_shortest_path_length(t, c)
        cand = []
        for w in t:
            if dist[w] == rad and t.degree(w) == 1:
                v = next(iter(t[w]))
                for u in t[v]:
                    if u != w:
                        cand.append((u, v))
        for u, v in sorted(cand):
            t.remove_edge(u, v)
            t.add_edge(c, v)
            steps.append((rnd, (u, v), (c, v), tau(t), nx.radius(t)))
        ecc = nx.eccentricity(t)
        rad = min(ecc.values())
        assert ecc[c] == rad
    return t, steps


def fmt_edge(e):
    a, b = e
    return f"{min(a, b)} {max(a, b)}"


def trace_text(alg, t0, steps):
    lines = [f"algorithm {alg}", f"n {t0.number_of_nodes()}",
             f"initial {tau(t0)} {nx.radius(t0)}"]
    for i, (rnd, rem, add, ta, ra) in enumerate(steps, 1):
        lines.append(f"step {i} {rnd} {fmt_edge(rem)} {fmt_edge(add)} {ta} {ra}")
    final_tau = steps[-1][3] if steps else tau(t0)
    final_rad = steps[-1][4] if steps else nx.radius(t0)
    lines.append(f"final {final_tau} {final_rad} {len(steps)}")
    return "\n".join(lines) + "\n"


def edge_list_text(g, comment=None):
    lines = []
    if comment:
        lines.append(f"# {comment}")
    lines.append(str(g.number_of_nodes()))
    for a, b in sorted(tuple(sorted(e)) for e in g.edges()):
        lines.append(f"{a} {b}")
    return "\n".join(lines) + "\n"


def has_perfect_matching(t):
    m = nx.max_weight_matching(t, maxcardinality=True)
    return 2 * len(m) == t.number_of_nodes()


def count_cycles(g):
    return sum(1 for _ in nx.simple_cycles(g))


def classes_upto7():
    out = {}
    for g in nx.graph_atlas_g():
        n, m = g.number_of_nodes(), g.number_of_edges()
        if n == 0 or not nx.is_connected(g):
            continue
        if m == n - 1:
            cls = "tree"
        elif m == n:
            cls = "unicyclic"
        elif m == n + 1:
            cls = "bicyclic"
        else:
            continue
        out.setdefault((cls, n), []).append(g)
    return out


def augmented(trees, extra):
    """Graphs obtained by adding `extra` non-edges to each tree, deduped
    with networkx isomorphism (used past the atlas range)."""
    found = []
    for t in trees:
        non = [e for e in itertools.combinations(sorted(t), 2) if not t.has_edge(*e)]
        for add in itertools.combinations(non, extra):
            g = t.copy()
            g.add_edges_from(add)
            if not any(nx.faster_could_be_isomorphic(g, h) and nx.is_isomorphic(g, h)
                       for h in found):
                found.append(g)
    return found


def main():
    print("== indices")
    for name, g in [("P4", nx.path_graph(4)), ("K5", nx.complete_graph(5)),
                    ("S5", nx.star_graph(4)), ("C6", nx.cycle_graph(6))]:
        print(name, "tau", tau(g), "avec", Fraction(tau(g), g.number_of_nodes()),
              "xi", xi(g), "rad", nx.radius(g), "diam", nx.diameter(g))

    print("== free tree counts")
    print([sum(1 for _ in nx.nonisomorphic_trees(n)) for n in range(2, 13)])

    cls = classes_upto7()
    print("== atlas class counts / min / max tau (n<=7)")
    for key in sorted(cls):
        gs = cls[key]
        ts = [tau(g) for g in gs]
        print(key, len(gs), min(ts), max(ts))

    print("== tree extremes n=8..12")
    for n in range(8, 13):
        ts = [tau(t) for t in nx.nonisomorphic_trees(n)]
        print(n, min(ts), max(ts))

    print("== unicyclic / bicyclic extremes past the atlas")
    for n in (8, 9):
        trees = list(nx.nonisomorphic_trees(n))
        uni = augmented(trees, 1)
        print("unicyclic", n, len(uni), min(map(tau, uni)), max(map(tau, uni)))
    trees = list(nx.nonisomorphic_trees(8))
    bi = augmented(trees, 2)
    two = [g for g in bi if count_cycles(g) == 2]
    print("bicyclic", 8, len(bi), min(map(tau, bi)), max(map(tau, bi)),
          "two-cycle max", max(map(tau, two)))
    for n in (5, 6, 7):
        gs = cls[("bicyclic", n)]
        two = [g for g in gs if count_cycles(g) == 2]
        print("bicyclic", n, "two-cycle max", max(map(tau, two)))

    print("== conjugated trees")
    for n in range(2, 13, 2):
        ts = [t for t in nx.nonisomorphic_trees(n) if has_perfect_matching(t)] \
            if n > 2 else [nx.path_graph(2)]
        taus = [tau(t) for t in ts]
        print(n, len(ts), min(taus), max(taus))

    # Example trees used by the rewrite goldens.
    nine = nx.path_graph(6)
    nine.add_edges_from([(2, 6), (3, 7), (6, 8)])
    fourteen = nx.path_graph(9)
    fourteen.add_edges_from([(4, 9), (3, 10), (5, 11), (9, 12), (1, 13)])
    caterpillar = nx.path_graph(4)
    caterpillar.add_edges_from([(0, 4), (1, 5), (2, 6), (3, 7)])

    cases = [
        ("alg1_star5", 1, nx.star_graph(4)),
        ("alg1_tree9", 1, nine),
        ("alg2_path4", 2, nx.path_graph(4)),
        ("alg2_tree14", 2, fourteen),
        ("alg3_path6", 3, nx.path_graph(6)),
        ("alg3_path8", 3, nx.path_graph(8)),
        ("alg3_caterpillar8", 3, caterpillar),
    ]
    os.makedirs(GOLDEN, exist_ok=True)
    print("== rewrite traces")
    for name, alg, t in cases:
        final, steps = {1: alg1, 2: alg2, 3: alg3}[alg](t)
        text = trace_text(alg, t, steps)
        print(name)
        print(text, end="")
        with open(os.path.join(GOLDEN, name + ".input.txt"), "w") as f:
            f.write(edge_list_text(t))
        with open(os.path.join(GOLDEN, name + ".trace.txt"), "w") as f:
            f.write(text)

    with open(os.path.join(GOLDEN, "p4.txt"), "w") as f:
        f.write(edge_list_text(nx.path_graph(4), "path on four vertices"))
    with open(os.path.join(GOLDEN, "k5.txt"), "w") as f:
        f.write(edge_list_text(nx.complete_graph(5)))
    with open(os.path.join(GOLDEN, "s6.txt"), "w") as f:
        f.write(edge_list_text(nx.star_graph(5)))


if __name__ == "__main__":
    sys.exit(main())
