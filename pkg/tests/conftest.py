"""Shared fixtures and independent brute-force oracles.

The oracles here recompute everything by scanning subsets directly, without
touching the library's enumeration or decision paths, so tests compare two
genuinely different routes.
"""

import pytest

from posetalg import corpus
from posetalg.poset import build_poset


@pytest.fixture
def v3():
    return corpus.v3()


def brute_up_closed(p, mask):
    for i in range(p.n):
        if mask >> i & 1 and p.up[i] & ~mask:
            return False
    return True


def brute_down_closed(p, mask):
    for i in range(p.n):
        if mask >> i & 1 and p.down[i] & ~mask:
            return False
    return True


def brute_final_segments(p):
    """All up-closed subsets by scanning the full power set."""
    return [m for m in range(1 << p.n) if brute_up_closed(p, m)]


def brute_initial_segments(p):
    return [m for m in range(1 << p.n) if brute_down_closed(p, m)]


def brute_denote(p, node):
    """Set of final segments satisfying an expression, by direct evaluation."""

    def holds(node, seg):
        kind = node[0]
        if kind == "var":
            return bool(seg >> p.id(node[1]) & 1)
        if kind == "const":
            return node[1]
        if kind == "not":
            return not holds(node[1], seg)
        if kind == "and":
            return holds(node[1], seg) and holds(node[2], seg)
        if kind == "or":
            return holds(node[1], seg) or holds(node[2], seg)
        raise AssertionError(node)

    return frozenset(seg for seg in brute_final_segments(p) if holds(node, seg))


def brute_max_antichain_size(items, leq_fn):
    """Largest pairwise-incomparable subset, by scanning all subsets."""
    n = len(items)
    assert n <= 16
    best = 0
    for mask in range(1 << n):
        chosen = [items[i] for i in range(n) if mask >> i & 1]
        ok = True
        for i in range(len(chosen)):
            for j in range(len(chosen)):
                if i != j and leq_fn(chosen[i], chosen[j]):
                    ok = False
        if ok:
            best = max(best, len(chosen))
    return best


def brute_longest_chain(items, leq_fn):
    """Longest strictly increasing chain length, by DFS over all items."""
    n = len(items)

    def extend(last, used):
        best = 0
        for i in range(n):
            if i not in used and leq_fn(items[last], items[i]) and not leq_fn(items[i], items[last]):
                best = max(best, 1 + extend(i, used | {i}))
        return best

    return max((1 + extend(i, {i}) for i in range(n)), default=0)


def poset_from_pairs(names, pairs):
    return build_poset(names, pairs)
