"""Brute-force reference implementations used only by the tests.

None of these import the code paths they are used to check.
"""
from itertools import combinations, product

import networkx as nx


def brute_force_posets(k):
    """All labeled partial orders on k points.

    Each unordered pair {i, j} is assigned one of i<j, j<i, incomparable;
    an assignment is kept iff its relation is transitive.
    """
    pairs = list(combinations(range(k), 2))
    found = []
    for choice in product(range(3), repeat=len(pairs)):
        rel = [[i == j for j in range(k)] for i in range(k)]
        for (i, j), c in zip(pairs, choice):
            if c == 1:
                rel[i][j] = True
            elif c == 2:
                rel[j][i] = True
        if all(
            not (rel[x][y] and rel[y][z]) or rel[x][z]
            for x in range(k) for y in range(k) for z in range(k)
        ):
            found.append(tuple(tuple(r) for r in rel))
    return found


def brute_force_preorders(k):
    """All reflexive transitive relations on k points (k <= 4)."""
    off = [(i, j) for i in range(k) for j in range(k) if i != j]
    found = []
    for bits in product((False, True), repeat=len(off)):
        rel = [[i == j for j in range(k)] for i in range(k)]
        for (i, j), v in zip(off, bits):
            rel[i][j] = v
        if all(
            not (rel[x][y] and rel[y][z]) or rel[x][z]
            for x in range(k) for y in range(k) for z in range(k)
        ):
            found.append(tuple(tuple(r) for r in rel))
    return found


def quadruple_paratopological(table, leq):
    """Definition: x<=y and u<=v imply xu <= yv, over all quadruples."""
    k = len(table)
    for x, y, u, v in product(range(k), repeat=4):
        if leq[x][y] and leq[u][v] and not leq[table[x][u]][table[y][v]]:
            return (x, y, u, v)
    return None


def translations_monotone(table, leq):
    k = len(table)
    for g in range(k):
        for x in range(k):
            for y in range(k):
                if leq[x][y] and not (leq[table[g][x]][table[g][y]] and leq[table[x][g]][table[y][g]]):
                    return False
    return True


def hasse_edges_networkx(leq):
    k = len(leq)
    g = nx.DiGraph()
    g.add_nodes_from(range(k))
    g.add_edges_from((i, j) for i in range(k) for j in range(k) if i != j and leq[i][j])
    return sorted(nx.transitive_reduction(g).edges())


def closure_from_edges(k, edges):
    g = nx.DiGraph()
    g.add_nodes_from(range(k))
    g.add_edges_from(edges)
    tc = nx.transitive_closure(g, reflexive=True)
    return tuple(tuple(tc.has_edge(i, j) for j in range(k)) for i in range(k))


def all_down_sets(leq):
    k = len(leq)
    out = []
    for mask in range(1 << k):
        s = {i for i in range(k) if mask >> i & 1}
        if all(y in s for x in s for y in range(k) if leq[y][x]):
            out.append(frozenset(s))
    return out


def xn_order(p, q):
    """The X_n order straight from its definition."""
    (a, b), (c, d) = p, q
    return a < c or (a == c and b == d)


def window_elements(n, m):
    return [(a, b) for a in range(-m, m + 1) for b in range(n)]


def u_by_definition(n, m, p):
    return {q for q in window_elements(n, m) if xn_order(q, p)}


def f_by_definition(n, m, p):
    return {q for q in window_elements(n, m) if xn_order(p, q)}


def saturate_by_iteration(n, m, seed):
    """Round-based Kleene iteration from the seed until nothing changes."""
    current = set(seed)
    while True:
        nxt = set(current)
        for p in current:
            nxt |= u_by_definition(n, m, p) | f_by_definition(n, m, p)
        if nxt == current:
            return current
        current = nxt


def normal_subgroups(table):
    """Subsets containing 0, closed under products and conjugation."""
    k = len(table)
    inv = [next(y for y in range(k) if table[x][y] == 0) for x in range(k)]
    count = 0
    for mask in range(1 << k):
        s = [i for i in range(k) if mask >> i & 1]
        if 0 not in s:
            continue
        ss = set(s)
        if any(table[x][y] not in ss for x in s for y in s):
            continue
        if any(table[table[g][x]][inv[g]] not in ss for g in range(k) for x in s):
            continue
        count += 1
    return count
