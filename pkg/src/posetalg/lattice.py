"""The meet-semilattice of generator products and the lattice it generates.

A product term is a canonical antichain sigma (minimal elements kept) standing
for the meet of the generators over sigma; the empty term is the unit.  A
lattice element is a canonical set of pairwise incomparable terms standing for
their join; the empty set is zero.  Term order is the pointwise rule
``every q in tau has some p in sigma below it``, equivalent to inclusion of
generated final segments; the lattice order reduces to it because products
are join-prime (a fact the test suites verify against the Stone oracle
rather than trusting axiomatically).
"""

from __future__ import annotations

from collections import deque

from . import algebra
from .errors import ClosureOverflow, EnumerationOverflow, PosetMismatch
from .poset import iter_bits, popcount

DEFAULT_ENUM_CAP = 1 << 20
DEFAULT_LATTICE_CLOSURE_CAP = 1 << 14
DILWORTH_EXACT_LIMIT = 400


# -- product terms -------------------------------------------------------------


def canonical_sigma(poset, sigma):
    m = sigma if isinstance(sigma, int) else poset.mask(sigma)
    return poset.minimals(m)


def pi_leq_masks(poset, s, t):
    """x_s <= x_t: every q in t has some p in s with p <= q."""
    for q in iter_bits(t):
        if not poset.down[q] & s:
            return False
    return True


class ProductTerm:
    """Meet of generators over a canonical antichain; the unit when empty."""

    __slots__ = ("poset", "sigma")

    def __init__(self, poset, sigma):
        self.poset = poset
        self.sigma = canonical_sigma(poset, sigma)

    def __eq__(self, other):
        if not isinstance(other, ProductTerm):
            return NotImplemented
        return self.poset is other.poset and self.sigma == other.sigma

    def __hash__(self):
        return hash((id(self.poset), self.sigma))

    def __repr__(self):
        return f"ProductTerm({sorted(self.poset.names_of(self.sigma))})"

    def __str__(self):
        return _term_str(self.poset, self.sigma)

    def to_elem(self):
        return algebra.product_elem(self.poset, self.sigma)


def product_term(poset, sigma):
    return ProductTerm(poset, sigma)


def pi_leq(t1, t2):
    if t1.poset is not t2.poset:
        raise PosetMismatch("terms over different posets")
    return pi_leq_masks(t1.poset, t1.sigma, t2.sigma)


def _term_str(poset, sigma):
    if not sigma:
        return "1"
    return "x{%s}" % ",".join(sorted(poset.names_of(sigma)))


# -- lattice elements ----------------------------------------------------------


def _prune_terms(poset, sigmas):
    """Keep the maximal terms of a set of canonical sigma masks."""
    uniq = sorted(set(sigmas))
    kept = []
    for s in uniq:
        if any(s != t and pi_leq_masks(poset, s, t) for t in uniq):
            continue
        kept.append(s)
    return frozenset(kept)


class LatticeElem:
    """Join of pairwise incomparable product terms; zero when empty."""

    __slots__ = ("poset", "terms")

    def __init__(self, poset, sigmas, *, _canonical=False):
        self.poset = poset
        if _canonical:
            self.terms = frozenset(sigmas)
        else:
            self.terms = _prune_terms(
                poset, [canonical_sigma(poset, s) for s in sigmas]
            )

    def __eq__(self, other):
        if not isinstance(other, LatticeElem):
            return NotImplemented
        return self.poset is other.poset and self.terms == other.terms

    def __hash__(self):
        return hash((id(self.poset), self.terms))

    def __repr__(self):
        return f"LatticeElem({[sorted(self.poset.names_of(s)) for s in sorted(self.terms)]})"

    def __str__(self):
        if not self.terms:
            return "0"
        return " + ".join(_term_str(self.poset, s) for s in sorted(self.terms))

    def to_elem(self):
        return algebra.join_all(
            self.poset, [algebra.product_elem(self.poset, s) for s in self.terms]
        )

    def to_json(self):
        return [sorted(self.poset.names_of(s)) for s in sorted(self.terms)]


def l_elem(poset, terms):
    """Lattice element from an iterable of ProductTerms / masks / name sets."""
    sigmas = []
    for t in terms:
        if isinstance(t, ProductTerm):
            if t.poset is not poset:
                raise PosetMismatch("term over a different poset")
            sigmas.append(t.sigma)
        elif isinstance(t, int):
            sigmas.append(canonical_sigma(poset, t))
        else:
            sigmas.append(canonical_sigma(poset, poset.mask(t)))
    return LatticeElem(poset, sigmas)


def _check_pair(a, b):
    if a.poset is not b.poset:
        raise PosetMismatch("lattice elements over different posets")


def l_join(a, b):
    _check_pair(a, b)
    return LatticeElem(a.poset, list(a.terms) + list(b.terms))


def l_meet(a, b):
    _check_pair(a, b)
    poset = a.poset
    sigmas = [
        canonical_sigma(poset, s | t) for s in a.terms for t in b.terms
    ]
    return LatticeElem(poset, sigmas)


def l_leq(a, b):
    """a <= b: every term of a sits below some term of b (join-primeness)."""
    _check_pair(a, b)
    return all(
        any(pi_leq_masks(a.poset, s, t) for t in b.terms) for s in a.terms
    )


def from_algebra_elem(e, pis=None):
    """Recognize an algebra element as a lattice element, or None.

    The candidate is the join of the maximal product terms below e; e is a
    lattice element iff that join equals e.
    """
    poset = e.poset
    if pis is None:
        pis = enumerate_pi(poset)
    below = [
        s for s in pis
        if algebra.leq(algebra.product_elem(poset, s), e)
    ]
    cand = LatticeElem(poset, below)
    if algebra.equals(cand.to_elem(), e):
        return cand
    return None


# -- enumeration ---------------------------------------------------------------


def antichain_masks(poset, *, max_size=None, max_count=DEFAULT_ENUM_CAP):
    """All antichains of the poset as masks (including the empty one)."""
    n = poset.n
    comp = [0] * n  # comparable-or-equal partners
    for i in range(n):
        comp[i] = poset.up[i] | poset.down[i]
    out = [0]
    stack = [(0, 0, 0)]  # (next candidate id, chosen mask, chosen count)
    while stack:
        start, chosen, size = stack.pop()
        for i in range(start, n):
            if comp[i] & chosen:
                continue
            if max_size is not None and size + 1 > max_size:
                continue
            mask = chosen | (1 << i)
            out.append(mask)
            if len(out) > max_count:
                raise EnumerationOverflow(f"more than {max_count} antichains")
            stack.append((i + 1, mask, size + 1))
    return out


def enumerate_pi(poset, include_unit=True, max_size=None, max_count=DEFAULT_ENUM_CAP):
    """All canonical product terms, as sigma masks sorted by (size, mask).

    ``include_unit`` admits the empty product (the unit); ``max_size`` caps
    the antichain size, giving the strata of the lattice.
    """
    masks = antichain_masks(poset, max_size=max_size, max_count=max_count)
    if not include_unit:
        masks = [m for m in masks if m]
    masks.sort(key=lambda m: (popcount(m), m))
    return masks


def enumerate_pi_terms(poset, include_unit=True):
    return [ProductTerm(poset, m) for m in enumerate_pi(poset, include_unit)]


def _antichains_of_index_order(leq_rows, max_count):
    """Antichains (as index masks) of a finite order given by leq bit rows."""
    n = len(leq_rows)
    comp = [0] * n
    for i in range(n):
        for j in range(n):
            if i != j and (leq_rows[i] >> j & 1 or leq_rows[j] >> i & 1):
                comp[i] |= 1 << j
    out = []
    stack = [(0, 0)]
    while stack:
        start, chosen = stack.pop()
        for i in range(start, n):
            if comp[i] & chosen:
                continue
            mask = chosen | (1 << i)
            out.append(mask)
            if len(out) > max_count:
                raise EnumerationOverflow(f"more than {max_count} join antichains")
            stack.append((i + 1, mask))
    return out


def enumerate_l(
    poset,
    include_unit=True,
    max_term_size=None,
    max_count=DEFAULT_ENUM_CAP,
):
    """All canonical lattice elements: joins over nonempty antichains of terms.

    The empty join (zero) is representable but not enumerated, matching the
    reading of the lattice as generated from the products by binary joins.
    """
    pis = enumerate_pi(
        poset, include_unit=include_unit, max_size=max_term_size, max_count=max_count
    )
    rows = []
    for s in pis:
        row = 0
        for j, t in enumerate(pis):
            if pi_leq_masks(poset, s, t):
                row |= 1 << j
        rows.append(row)
    out = []
    for mask in _antichains_of_index_order(rows, max_count):
        terms = frozenset(pis[i] for i in iter_bits(mask))
        out.append(LatticeElem(poset, terms, _canonical=True))
    return out


def stratum(poset, n, include_unit=True, max_count=DEFAULT_ENUM_CAP):
    """Lattice elements whose terms all have size <= n."""
    return enumerate_l(
        poset, include_unit=include_unit, max_term_size=n, max_count=max_count
    )


# -- closure under meet and join -------------------------------------------------


def lattice_closure(poset, gens, cap=DEFAULT_LATTICE_CLOSURE_CAP):
    """Least set of algebra elements containing gens closed under meet, join.

    Elements are deduplicated by their canonical minimal-support form.
    """
    for e in gens:
        if e.poset is not poset:
            raise PosetMismatch("generator over a different poset")
    closed = {}
    for e in gens:
        closed.setdefault(algebra.canonical_key(e), e)
    frontier = deque(closed.values())
    while frontier:
        a = frontier.popleft()
        for b in list(closed.values()):
            for c in (algebra.meet(a, b), algebra.join(a, b)):
                key = algebra.canonical_key(c)
                if key not in closed:
                    if len(closed) >= cap:
                        raise ClosureOverflow(f"lattice closure exceeded {cap}")
                    closed[key] = c
                    frontier.append(c)
    return list(closed.values())


# -- order isomorphism with the initial segments ---------------------------------


def is_iso_IS_to_Pi(poset):
    """Check that sigma -> (complement of the segment sigma generates) is an
    order isomorphism from the product terms onto the initial segments.

    Returns None when it is, else a dict describing the first failure.
    """
    pis = enumerate_pi(poset, include_unit=True)
    segments = set(poset.initial_segments())
    image = {}
    seen = set()
    for s in pis:
        seg = poset.full ^ poset.upset(s)
        if seg not in segments:
            return {"reason": "image not an initial segment", "sigma": s}
        if seg in seen:
            return {"reason": "not injective", "sigma": s}
        seen.add(seg)
        image[s] = seg
    if len(image) != len(segments):
        return {
            "reason": "not surjective",
            "products": len(image),
            "segments": len(segments),
        }
    for s in pis:
        for t in pis:
            seg_incl = image[s] | image[t] == image[t]
            if pi_leq_masks(poset, s, t) != seg_incl:
                return {"reason": "order mismatch", "sigma": s, "tau": t}
    return None


# -- antichain / chain mining -----------------------------------------------------


def _strict_less_rows(items, leq_fn):
    n = len(items)
    rows = [0] * n
    for i in range(n):
        for j in range(n):
            if i != j and leq_fn(items[i], items[j]) and not leq_fn(items[j], items[i]):
                rows[i] |= 1 << j
    return rows


def _hopcroft_karp(adj, n_left, n_right):
    """Maximum bipartite matching; returns (match_l, match_r)."""
    inf = float("inf")
    match_l = [-1] * n_left
    match_r = [-1] * n_right
    while True:
        dist = [inf] * n_left
        queue = deque()
        for u in range(n_left):
            if match_l[u] == -1:
                dist[u] = 0
                queue.append(u)
        reachable_free = False
        while queue:
            u = queue.popleft()
            for v in adj[u]:
                w = match_r[v]
                if w == -1:
                    reachable_free = True
                elif dist[w] is inf:
                    dist[w] = dist[u] + 1
                    queue.append(w)
        if not reachable_free:
            break

        def dfs(u):
            for v in adj[u]:
                w = match_r[v]
                if w == -1 or (dist[w] == dist[u] + 1 and dfs(w)):
                    match_l[u] = v
                    match_r[v] = u
                    return True
            dist[u] = inf
            return False

        for u in range(n_left):
            if match_l[u] == -1:
                dfs(u)
    return match_l, match_r


def max_antichain(items, leq_fn, exact_limit=DILWORTH_EXACT_LIMIT):
    """Maximum antichain of a finite order.

    Exact (Dilworth via bipartite matching and Koenig's construction) up to
    ``exact_limit`` items; beyond that a greedy certified antichain (largest
    height level) is returned and flagged approximate.
    Returns (members, exact_flag).
    """
    n = len(items)
    if n == 0:
        return [], True
    rows = _strict_less_rows(items, leq_fn)
    if n <= exact_limit:
        adj = [list(iter_bits(rows[i])) for i in range(n)]
        match_l, match_r = _hopcroft_karp(adj, n, n)
        # Koenig: alternating reachability from unmatched left vertices
        seen_l = [False] * n
        seen_r = [False] * n
        queue = deque(u for u in range(n) if match_l[u] == -1)
        for u in queue:
            seen_l[u] = True
        while queue:
            u = queue.popleft()
            for v in adj[u]:
                if not seen_r[v] and match_l[u] != v:
                    seen_r[v] = True
                    w = match_r[v]
                    if w != -1 and not seen_l[w]:
                        seen_l[w] = True
                        queue.append(w)
        # cover = unreachable left + reachable right; antichain avoids both
        members = [
            items[i] for i in range(n) if seen_l[i] and not seen_r[i]
        ]
        return members, True
    heights = _heights(rows)
    counts = {}
    for h in heights:
        counts[h] = counts.get(h, 0) + 1
    best = max(sorted(counts), key=lambda h: (counts[h], -h))
    members = [items[i] for i in range(n) if heights[i] == best]
    return members, False


def _heights(rows):
    """Longest-chain-below height per item of a strict order given by rows."""
    n = len(rows)
    below = [0] * n
    for i in range(n):
        for j in iter_bits(rows[i]):
            below[j] |= 1 << i
    heights = [-1] * n
    order = sorted(range(n), key=lambda i: popcount(below[i]))
    for i in order:
        h = 0
        for j in iter_bits(below[i]):
            h = max(h, heights[j] + 1)
        heights[i] = h
    return heights


def longest_descending_chain(items, leq_fn):
    """A longest strictly descending chain, as a list of items."""
    n = len(items)
    if n == 0:
        return []
    rows = _strict_less_rows(items, leq_fn)
    heights = _heights(rows)
    start = max(range(n), key=lambda i: heights[i])
    chain = [start]
    current = start
    while heights[current] > 0:
        below = 0
        for i in range(n):
            if rows[i] >> current & 1:
                below |= 1 << i
        nxt = next(
            j for j in iter_bits(below) if heights[j] == heights[current] - 1
        )
        chain.append(nxt)
        current = nxt
    return [items[i] for i in chain]
