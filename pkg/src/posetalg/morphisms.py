"""Constructive homomorphisms out of a poset algebra.

Everything here rides on the universal extension property: an
order-preserving assignment of the generators into any Boolean algebra
extends uniquely to a homomorphism, computed by evaluating disjunctive
normal forms.  The module builds the extension, subposet embeddings,
relativizations to a generator, the collapse onto a linear augmentation,
the two-variable product map, lexicographic layering checks, and the
block decomposition of a directed poset along a cofinal chain.
"""

from __future__ import annotations

from dataclasses import dataclass

from . import algebra, lattice, stone
from .errors import (
    EnumerationOverflow,
    NotAnEmbedding,
    NotCofinal,
    NotDirected,
    NotOrderPreserving,
    PosetMismatch,
    PremiseFailed,
)
from .poset import Poset, iter_bits, lex_sum, product


class PosetAlgebraTarget:
    """Target wrapper: the algebra over a poset, with its Boolean operations."""

    def __init__(self, poset):
        self.poset = poset

    def zero(self):
        return algebra.zero(self.poset)

    def one(self):
        return algebra.one(self.poset)

    def meet(self, a, b):
        return algebra.meet(a, b)

    def join(self, a, b):
        return algebra.join(a, b)

    def complement(self, a):
        return algebra.complement(a)

    def eq(self, a, b):
        return algebra.equals(a, b)

    def leq(self, a, b):
        return algebra.leq(a, b)

    def key(self, a):
        return algebra.canonical_key(a)


class MaskAlgebraTarget:
    """Target wrapper: the power set of {0..size-1} as bitmask ints."""

    def __init__(self, size):
        self.size = size
        self.full = (1 << size) - 1

    def zero(self):
        return 0

    def one(self):
        return self.full

    def meet(self, a, b):
        return a & b

    def join(self, a, b):
        return a | b

    def complement(self, a):
        return self.full ^ a

    def eq(self, a, b):
        return a == b

    def leq(self, a, b):
        return a & ~b == 0

    def key(self, a):
        return a


class Hom:
    """Homomorphism from the algebra over ``source`` into ``target``.

    ``gen_image[i]`` is the image of generator i; ``apply`` evaluates any
    algebra element through its disjunctive normal form.
    """

    def __init__(self, source, target, gen_image):
        self.source = source
        self.target = target
        self.gen_image = list(gen_image)
        self._space = None
        self._atom_image = None

    def apply(self, e):
        if e.poset is not self.source:
            raise PosetMismatch("element not over the source poset")
        tgt = self.target
        out = tgt.zero()
        for pr in algebra.to_dnf(e):
            term = tgt.one()
            for p in iter_bits(pr.pos):
                term = tgt.meet(term, self.gen_image[p])
            for q in iter_bits(pr.neg):
                term = tgt.meet(term, tgt.complement(self.gen_image[q]))
            out = tgt.join(out, term)
        return out

    def space(self):
        if self._space is None:
            self._space = stone.StoneSpace(self.source)
        return self._space

    def atom_image(self):
        """Image of each atom of the source algebra (one per final segment)."""
        if self._atom_image is None:
            tgt = self.target
            images = []
            for seg in self.space().points:
                term = tgt.one()
                for p in range(self.source.n):
                    img = self.gen_image[p]
                    if not seg >> p & 1:
                        img = tgt.complement(img)
                    term = tgt.meet(term, img)
                images.append(term)
            self._atom_image = images
        return self._atom_image

    def apply_via_atoms(self, e):
        """Independent second route: join the images of the atoms under e."""
        tgt = self.target
        atoms = self.atom_image()
        out = tgt.zero()
        for k, seg in enumerate(self.space().points):
            if e.eval_segment(seg):
                out = tgt.join(out, atoms[k])
        return out


def extend_hom(source, target, gen_image):
    """Extension of an order-preserving generator assignment.

    ``gen_image`` maps source names/ids to target elements (dict or list).
    Raises NotOrderPreserving with a witnessing pair otherwise.
    """
    if isinstance(gen_image, dict):
        images = [None] * source.n
        for key, val in gen_image.items():
            images[source.id(key)] = val
    else:
        images = list(gen_image)
    for p in range(source.n):
        for q in iter_bits(source.up[p] & ~(1 << p)):
            if not target.leq(images[p], images[q]):
                raise NotOrderPreserving(source.names[p], source.names[q])
    return Hom(source, target, images)


def identity_hom(poset):
    return Hom(
        poset, PosetAlgebraTarget(poset), [algebra.gen(poset, p) for p in range(poset.n)]
    )


# -- subposet embedding ---------------------------------------------------------


def subposet_embedding(sub, ambient, inclusion):
    """Embedding of the algebra over ``sub`` into the one over ``ambient``.

    ``inclusion`` maps sub names/ids to ambient names/ids and must be an
    order embedding (comparabilities agree in both directions).
    """
    if isinstance(inclusion, dict):
        incl = [None] * sub.n
        for key, val in inclusion.items():
            incl[sub.id(key)] = ambient.id(val)
    else:
        incl = [ambient.id(v) for v in inclusion]
    if len(set(incl)) != sub.n:
        raise NotAnEmbedding("inclusion not injective")
    for a in range(sub.n):
        for b in range(sub.n):
            if sub.leq(a, b) != ambient.leq(incl[a], incl[b]):
                raise NotAnEmbedding(
                    f"comparability of {sub.names[a]!r},{sub.names[b]!r} not preserved"
                )
    target = PosetAlgebraTarget(ambient)
    hom = extend_hom(sub, target, [algebra.gen(ambient, incl[a]) for a in range(sub.n)])
    hom.inclusion = incl
    return hom


# -- relativization --------------------------------------------------------------


@dataclass
class Relativization:
    """Algebra over {p : p not above q} mapped onto the part below x_q."""

    sub: Poset
    sub_ids: list  # sub id -> ambient id
    unit: algebra.AlgebraElem  # x_q, the unit of the relative algebra
    hom: Hom  # embedding of F(sub) into the ambient algebra

    def apply(self, y):
        return algebra.meet(self.hom.apply(y), self.unit)


def relativize(poset, q):
    qid = poset.id(q)
    keep = poset.full & ~poset.upset(1 << qid)
    sub, ids = poset.induced(keep)
    hom = subposet_embedding(sub, poset, ids)
    return Relativization(sub, ids, algebra.gen(poset, qid), hom)


# -- chain epimorphism ------------------------------------------------------------


def chain_epimorphism(poset, augmentation):
    """Collapse onto the algebra of a linear augmentation.

    ``augmentation`` is (chain C, mapping list P-id -> C-id) as produced by
    linear_augmentation; generator p maps to the generator of its image.
    """
    c, mapping = augmentation
    target = PosetAlgebraTarget(c)
    return extend_hom(poset, target, [algebra.gen(c, mapping[p]) for p in range(poset.n)])


# -- the product map --------------------------------------------------------------


class EMap:
    """Two-variable map into the algebra over the product poset.

    apply(a, b) extends a through the columns (fixing the second coordinate)
    and then extends the resulting assignment through the rows; restricted to
    lattice elements both partial applications are homomorphic and the map
    sends generator pairs to product generators.
    """

    def __init__(self, left, right, max_elements=128):
        if left.n * right.n > max_elements:
            raise EnumerationOverflow(
                f"product of {left.n}x{right.n} elements exceeds cap {max_elements}"
            )
        self.left = left
        self.right = right
        self.prod, self.index = product(left, right, max_elements)
        self.target = PosetAlgebraTarget(self.prod)
        self._column_homs = {}
        self._g_images = {}

    def pair_gen(self, p, q):
        return algebra.gen(self.prod, self.index[(self.left.id(p), self.right.id(q))])

    def column_hom(self, q):
        qid = self.right.id(q)
        hom = self._column_homs.get(qid)
        if hom is None:
            images = [
                algebra.gen(self.prod, self.index[(p, qid)]) for p in range(self.left.n)
            ]
            hom = extend_hom(self.left, self.target, images)
            self._column_homs[qid] = hom
        return hom

    def row_hom(self, a):
        """Extension of q -> column_hom(q)(a); needs a to make it monotone."""
        key = algebra.canonical_key(a)
        images = self._g_images.get(key)
        if images is None:
            images = [self.column_hom(q).apply(a) for q in range(self.right.n)]
            self._g_images[key] = images
        return extend_hom(self.right, self.target, images)

    def apply(self, a, b):
        if isinstance(a, lattice.LatticeElem):
            a = a.to_elem()
        if isinstance(b, lattice.LatticeElem):
            b = b.to_elem()
        return self.row_hom(a).apply(b)


def e_map(left, right, max_elements=128):
    return EMap(left, right, max_elements)


# -- product generation ------------------------------------------------------------


def product_generation_check(left, right, gens_left, gens_right, max_elements=128):
    """Do the pairwise map images of two generating families generate the
    product algebra?  Raises PremiseFailed unless each family generates its
    own algebra."""

    def as_elems(poset, gens):
        out = []
        for g in gens:
            if isinstance(g, lattice.LatticeElem):
                out.append(g.to_elem())
            elif isinstance(g, int):
                out.append(algebra.product_elem(poset, g))
            else:
                out.append(g)
        return out

    gens_left = as_elems(left, gens_left)
    gens_right = as_elems(right, gens_right)
    for poset, gens, side in ((left, gens_left, "left"), (right, gens_right, "right")):
        space = stone.StoneSpace(poset)
        if not stone.generates(space, [stone.denote_elem(space, g) for g in gens]):
            raise PremiseFailed(f"{side} family does not generate its algebra")
    emap = EMap(left, right, max_elements)
    images = [emap.apply(a, b) for a in gens_left for b in gens_right]
    space = stone.StoneSpace(emap.prod)
    return stone.generates(space, [stone.denote_elem(space, e) for e in images])


# -- lexicographic layering ----------------------------------------------------------


def lex_layering_check(index, parts, max_elements=128):
    """Within a lexicographic sum, the proper lattice of a lower part must sit
    strictly below the proper lattice of a higher part.

    Layers use the strict lattice enumerations (no empty product, no empty
    join): the unit and zero falsify strict layering at the representation
    level.  Returns None when the layering holds, else a violation dict.
    """
    total = lex_sum(index, parts, max_elements)
    offsets = []
    acc = 0
    for part in parts:
        offsets.append(acc)
        acc += part.n

    def embedded_lattice(xi):
        part = parts[xi]
        off = offsets[xi]
        out = []
        for le in lattice.enumerate_l(part, include_unit=False):
            terms = [
                sum(1 << (off + i) for i in iter_bits(sigma)) for sigma in le.terms
            ]
            out.append(lattice.LatticeElem(total, terms))
        return out

    lattices = [embedded_lattice(xi) for xi in range(index.n)]
    for xi in range(index.n):
        for zeta in iter_bits(index.up[xi] & ~(1 << xi)):
            for g in lattices[xi]:
                ge = g.to_elem()
                for h in lattices[zeta]:
                    he = h.to_elem()
                    if not algebra.leq(ge, he) or algebra.equals(ge, he):
                        return {
                            "lower_index": index.names[xi],
                            "upper_index": index.names[zeta],
                            "lower": str(g),
                            "upper": str(h),
                        }
    return None


# -- block decomposition along a cofinal chain -----------------------------------------


@dataclass
class HConstructionResult:
    elems: list  # the assembled generating family, zero included
    generates: bool
    layering: bool
    blocks: list  # per chain step, the family contributed by that step


def is_directed(poset):
    for i in range(poset.n):
        for j in range(i + 1, poset.n):
            if not poset.up[i] & poset.up[j]:
                return False
    return True


def h_construction(poset, chain_elems):
    """Generating family assembled along a strictly increasing cofinal chain.

    Step n restricts to the elements not above chain point n, takes all
    product terms there, and contributes x_{chain[n-1]} + y * x_{chain[n]}
    for each such y (with x_{chain[-1]} taken as zero).  Returns the family,
    whether it generates the whole algebra, and whether the step layering
    holds between all earlier/later contributions.
    """
    if not is_directed(poset):
        raise NotDirected("h_construction needs a directed poset")
    chain_ids = [poset.id(p) for p in chain_elems]
    for a, b in zip(chain_ids, chain_ids[1:]):
        if not (poset.leq(a, b) and a != b):
            raise NotCofinal("chain is not strictly increasing")
    covered = 0
    for c in chain_ids:
        covered |= poset.down[c]
    if covered != poset.full:
        raise NotCofinal("chain is not cofinal")

    blocks = []
    elems = [algebra.zero(poset)]
    layering = True
    x_chain = [algebra.gen(poset, c) for c in chain_ids]
    prev_gen = algebra.zero(poset)
    for n, c in enumerate(chain_ids):
        keep = poset.full & ~poset.upset(1 << c)
        sub, ids = poset.induced(keep)
        block = []
        for sigma in lattice.enumerate_pi(sub, include_unit=True):
            ambient_sigma = sum(1 << ids[i] for i in iter_bits(sigma))
            y = algebra.product_elem(poset, ambient_sigma)
            block.append(algebra.join(prev_gen, algebra.meet(y, x_chain[n])))
        blocks.append(block)
        elems.extend(block)
        prev_gen = x_chain[n]

    # layering: earlier contributions below x at their step, later ones above
    for m in range(len(chain_ids)):
        for h_m in blocks[m]:
            if not algebra.leq(h_m, x_chain[m]):
                layering = False
        for n in range(m + 1, len(chain_ids)):
            if not poset.leq(chain_ids[m], chain_ids[n - 1]):
                layering = False
            for h_n in blocks[n]:
                if not algebra.leq(x_chain[n - 1], h_n):
                    layering = False

    space = stone.StoneSpace(poset)
    gens = [stone.denote_elem(space, e) for e in elems]
    return HConstructionResult(elems, stone.generates(space, gens), layering, blocks)


def maximal_chains_to_top(poset):
    """All maximal chains ending at the maximum (as id lists, bottom first).

    Only defined for directed posets (which have a unique maximum)."""
    if poset.n == 0:
        return []
    maxima = list(iter_bits(poset.maximals()))
    if len(maxima) != 1:
        raise NotDirected("no unique maximum")
    top = maxima[0]
    chains = []

    def walk(path):
        head = path[0]
        extended = False
        for below in iter_bits(poset.down[head] & ~(1 << head)):
            # only step to covers: nothing strictly between below and head
            between = poset.up[below] & poset.down[head] & ~(1 << below) & ~(1 << head)
            if not between:
                extended = True
                walk([below] + path)
        if not extended:
            chains.append(path)

    walk([top])
    return chains
