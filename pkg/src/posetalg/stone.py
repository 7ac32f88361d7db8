"""Brute-force final-segment semantics: the independent oracle.

The space of all final segments (up-closed subsets) of a finite poset is the
Stone space of its algebra; a generator denotes the clopen set of segments
containing its element.  Clopens are bitmasks over the point list, so every
symbolic decision can be cross-checked set-theoretically.
"""

from __future__ import annotations

import random
from itertools import combinations

from . import algebra
from .errors import ClosureOverflow, NotUpClosed, PosetMismatch
from .poset import chain, iter_bits

DEFAULT_CLOSURE_CAP = 1 << 16


class StoneSpace:
    """All final segments of a poset, with a point index."""

    __slots__ = ("poset", "points", "index")

    def __init__(self, poset, max_count=None):
        self.poset = poset
        if max_count is None:
            self.points = poset.final_segment_masks()
        else:
            self.points = poset.final_segment_masks(max_count)
        self.index = {seg: k for k, seg in enumerate(self.points)}

    def __len__(self):
        return len(self.points)

    @property
    def full(self):
        return (1 << len(self.points)) - 1

    def point_id(self, segment):
        try:
            return self.index[segment]
        except KeyError:
            raise NotUpClosed(f"not a final segment: {segment:b}") from None


def final_segments(poset, max_count=None):
    return StoneSpace(poset, max_count)


def v_set(space, p):
    """Clopen denotation of a generator: segments containing p."""
    i = space.poset.id(p)
    mask = 0
    for k, seg in enumerate(space.points):
        if seg >> i & 1:
            mask |= 1 << k
    return mask


def eval_elem(e, segment):
    """Truth of an element at a final segment."""
    if not e.poset.is_up_closed(segment):
        raise NotUpClosed(f"not a final segment: {segment:b}")
    return e.eval_segment(segment)


def denote_elem(space, e):
    """Clopen set of an algebra element, by pointwise evaluation."""
    if e.poset is not space.poset:
        raise PosetMismatch("element over a different poset")
    mask = 0
    for k, seg in enumerate(space.points):
        if e.eval_segment(seg):
            mask |= 1 << k
    return mask


def denote_expr(space, node):
    """Set-theoretic denotation of an expression tree (no symbolic algebra)."""
    kind = node[0]
    if kind == "var":
        return v_set(space, node[1])
    if kind == "const":
        return space.full if node[1] else 0
    if kind == "not":
        return space.full ^ denote_expr(space, node[1])
    if kind == "and":
        return denote_expr(space, node[1]) & denote_expr(space, node[2])
    if kind == "or":
        return denote_expr(space, node[1]) | denote_expr(space, node[2])
    raise PosetMismatch(f"bad node {node!r}")


def elem_from_clopen(space, mask):
    """Algebra element (full support) whose denotation is the given clopen."""
    return algebra.from_clopen(space.poset, space.points, mask)


def clopen_to_json(space, mask):
    """Clopen as a sorted list of final segments (each a sorted name list)."""
    segs = [sorted(space.poset.names_of(space.points[k])) for k in iter_bits(mask)]
    segs.sort()
    return segs


# -- subalgebra generation ----------------------------------------------------


def signature_blocks(space, gens):
    """Partition of the points by their membership pattern in the generators.

    The subalgebra generated by ``gens`` is exactly the set of unions of
    these blocks, so it has size 2**len(blocks).
    """
    by_sig = {}
    for k in range(len(space.points)):
        sig = tuple((g >> k) & 1 for g in gens)
        by_sig.setdefault(sig, 0)
        by_sig[sig] |= 1 << k
    return list(by_sig.values())


def generates(space, gens):
    """True iff the clopens generate the full algebra of the space."""
    return len(signature_blocks(space, gens)) == len(space.points)


def subalgebra_closure(space, gens, cap=DEFAULT_CLOSURE_CAP):
    """Least set of clopens containing gens, 0, 1, closed under &, |, ~.

    Computed by fixpoint iteration; raises ClosureOverflow past the cap.
    """
    full = space.full
    closed = {0, full}
    closed.update(m & full for m in gens)
    frontier = list(closed)
    while frontier:
        if len(closed) > cap:
            raise ClosureOverflow(f"subalgebra closure exceeded {cap} members")
        new = []
        current = list(closed)
        for a in frontier:
            c = full ^ a
            if c not in closed:
                closed.add(c)
                new.append(c)
            for b in current:
                for m in (a & b, a | b):
                    if m not in closed:
                        closed.add(m)
                        new.append(m)
                        if len(closed) > cap:
                            raise ClosureOverflow(
                                f"subalgebra closure exceeded {cap} members"
                            )
        frontier = new
    return closed


# -- binary subbase check ------------------------------------------------------


def check_binary_subbase(poset, samples=None, seed=0, exhaustive_limit=5):
    """Check the binary-subbase property of {V_p} u {-V_p}.

    Every subfamily with empty intersection must contain two members whose
    pairwise intersection is already empty.  Returns None when the property
    holds, else a violating subfamily as a list of (name, sign) pairs.

    Subfamilies are scanned exhaustively for |P| <= exhaustive_limit and
    sampled (seeded) otherwise; ``samples`` forces sampling with that count.
    """
    space = StoneSpace(poset)
    family = []
    for i in range(poset.n):
        family.append((poset.names[i], "+", v_set(space, i)))
    for i in range(poset.n):
        family.append((poset.names[i], "-", space.full ^ v_set(space, i)))
    m = len(family)
    full = space.full

    def violates(sub_ids):
        inter = full
        for k in sub_ids:
            inter &= family[k][2]
        if inter:
            return False
        for a, b in combinations(sub_ids, 2):
            if family[a][2] & family[b][2] == 0:
                return False
        return True

    if samples is None and poset.n <= exhaustive_limit:
        candidates = range(1, 1 << m)
        for sub in candidates:
            ids = list(iter_bits(sub))
            if violates(ids):
                return [(family[k][0], family[k][1]) for k in ids]
        return None

    count = samples if samples is not None else 10000
    rng = random.Random(seed)
    for _ in range(count):
        sub = rng.randrange(1, 1 << m)
        ids = list(iter_bits(sub))
        if violates(ids):
            return [(family[k][0], family[k][1]) for k in ids]
    return None


# -- interval algebra of a finite chain ----------------------------------------


def interval_algebra_check(linear):
    """Compare the ray-generated subalgebra of a chain's power set with the
    algebra of the chain minus its minimum.

    The interval algebra of an n-element chain is generated by the left-closed
    rays; the claim is a Boolean isomorphism with the poset algebra of the
    (n-1)-element chain.  Rays shrink as their endpoints grow, so the
    order-preserving generator correspondence pairs the k-th generator with
    the ray at the k-th largest non-minimum element: x_k -> [n-1-k, ->).
    Returns True when that correspondence extends to a bijective
    homomorphism onto the ray algebra.

    ``linear`` is a chain poset or its length.
    """
    if isinstance(linear, int):
        n = linear
    else:
        n = linear.n
        for i in range(n):
            for j in range(n):
                if linear.incomparable(i, j):
                    raise PosetMismatch("interval algebra needs a chain")
    if n < 1:
        raise PosetMismatch("interval algebra needs a nonempty chain")
    universe = (1 << n) - 1
    rays = {a: universe & ~((1 << a) - 1) for a in range(n)}

    # ray-generated subalgebra of the power set, via signature blocks
    gens = [rays[a] for a in range(n)]
    by_sig = {}
    for k in range(n):
        sig = tuple((g >> k) & 1 for g in gens)
        by_sig.setdefault(sig, 0)
        by_sig[sig] |= 1 << k
    blocks = list(by_sig.values())
    ray_algebra = {0}
    for b in blocks:
        ray_algebra |= {m | b for m in ray_algebra}

    rest = chain(n - 1)  # the chain minus its minimum
    space = StoneSpace(rest)
    gen_ray = {k: rays[n - 1 - k] for k in range(rest.n)}
    for a in range(rest.n):
        for b in range(a + 1, rest.n):
            if gen_ray[a] & ~gen_ray[b]:
                return False  # correspondence not order-preserving
    atom_img = []
    for seg in space.points:
        img = universe
        for k in range(rest.n):
            img &= gen_ray[k] if (seg >> k & 1) else (universe ^ gen_ray[k])
        atom_img.append(img)

    # pairwise disjoint atoms partitioning the universe make phi a homomorphism
    total = 0
    for i, a in enumerate(atom_img):
        for b in atom_img[i + 1 :]:
            if a & b:
                return False
        total |= a
    if total != universe:
        return False

    images = set()
    for m in range(1 << len(space.points)):
        img = 0
        for k in iter_bits(m):
            img |= atom_img[k]
        images.add(img)
    if len(images) != 1 << len(space.points):
        return False  # not injective
    if images != ray_algebra:
        return False
    # generator images come out right under the atom decomposition
    for k in range(rest.n):
        if denote_and_map(space, atom_img, v_set(space, k)) != gen_ray[k]:
            return False
    return True


def denote_and_map(space, atom_img, clopen):
    out = 0
    for k in iter_bits(clopen):
        out |= atom_img[k]
    return out


def enumerate_algebra(space):
    """All elements of the algebra as clopen masks (2**points of them)."""
    count = len(space.points)
    if count > 20:
        raise ClosureOverflow(f"2**{count} elements is too many to enumerate")
    return range(1 << count)


def size_of_algebra(space):
    return 1 << len(space.points)
