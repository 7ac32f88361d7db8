import pytest

from posetalg import algebra, corpus, lattice, morphisms, stone
from posetalg.errors import (
    NotAnEmbedding,
    NotCofinal,
    NotDirected,
    NotOrderPreserving,
    PremiseFailed,
)
from posetalg.poset import antichain, chain, iter_bits, linear_augmentation


def all_elems(poset):
    space = stone.StoneSpace(poset)
    return space, [stone.elem_from_clopen(space, m) for m in range(1 << len(space.points))]


# -- extension of generator assignments ----------------------------------------------


def test_identity_extension_fixes_everything(v3):
    hom = morphisms.identity_hom(v3)
    _, elems = all_elems(v3)
    assert len(elems) == 32
    for e in elems:
        assert algebra.equals(hom.apply(e), e)


def test_collapse_to_one():
    c2 = chain(2)
    target = morphisms.PosetAlgebraTarget(c2)
    hom = morphisms.extend_hom(c2, target, [algebra.one(c2), algebra.one(c2)])
    assert algebra.is_zero(hom.apply(algebra.complement(algebra.gen(c2, 0))))


def test_not_order_preserving_rejected(v3):
    c2 = chain(2)
    target = morphisms.PosetAlgebraTarget(c2)
    images = {"a": algebra.gen(c2, 1), "b": algebra.gen(c2, 1), "c": algebra.gen(c2, 0)}
    with pytest.raises(NotOrderPreserving) as err:
        morphisms.extend_hom(v3, target, images)
    assert err.value.witness in ((("a"), ("c")), (("b"), ("c")))


def test_hom_laws_exhaustive_small(v3):
    c2 = chain(2)
    target = morphisms.PosetAlgebraTarget(c2)
    hom = morphisms.extend_hom(
        v3, target,
        {"a": algebra.gen(c2, 0), "b": algebra.gen(c2, 0), "c": algebra.gen(c2, 1)},
    )
    space, elems = all_elems(v3)
    for e in elems:
        assert algebra.equals(hom.apply(e), hom.apply_via_atoms(e))
    for p in range(v3.n):
        assert algebra.equals(hom.apply(algebra.gen(v3, p)), hom.gen_image[p])
    sample = elems[:: max(1, len(elems) // 8)]
    for e1 in sample:
        for e2 in sample:
            assert algebra.equals(
                hom.apply(algebra.meet(e1, e2)),
                algebra.meet(hom.apply(e1), hom.apply(e2)),
            )
            assert algebra.equals(
                hom.apply(algebra.join(e1, e2)),
                algebra.join(hom.apply(e1), hom.apply(e2)),
            )
    for e in sample:
        assert algebra.equals(
            hom.apply(algebra.complement(e)), algebra.complement(hom.apply(e))
        )


def test_atom_images_partition_target(v3):
    c2 = chain(2)
    target = morphisms.PosetAlgebraTarget(c2)
    hom = morphisms.extend_hom(
        v3, target,
        {"a": algebra.gen(c2, 0), "b": algebra.gen(c2, 1), "c": algebra.one(c2)},
    )
    atoms = hom.atom_image()
    union = algebra.zero(c2)
    for i, a in enumerate(atoms):
        union = algebra.join(union, a)
        for b in atoms[i + 1:]:
            assert algebra.is_zero(algebra.meet(a, b))
    assert algebra.is_one(union)


# -- subposet embeddings ------------------------------------------------------------------


def test_embedding_antichain_into_v3(v3):
    q = antichain(2)
    hom = morphisms.subposet_embedding(q, v3, {"0": "a", "1": "b"})
    space, elems = all_elems(q)
    assert len(elems) == 16
    images = [algebra.canonical_key(hom.apply(e)) for e in elems]
    assert len(set(images)) == 16


def test_embedding_identity(v3):
    hom = morphisms.subposet_embedding(v3, v3, list(range(3)))
    _, elems = all_elems(v3)
    for e in elems:
        assert algebra.equals(hom.apply(e), e)


def test_embedding_comparable_pair(v3):
    q = chain(2)
    hom = morphisms.subposet_embedding(q, v3, {"0": "a", "1": "c"})
    _, elems = all_elems(q)
    images = [algebra.canonical_key(hom.apply(e)) for e in elems]
    assert len(set(images)) == len(elems)
    product = algebra.meet(algebra.gen(q, 0), algebra.gen(q, 1))
    assert algebra.equals(hom.apply(product), algebra.gen(v3, "a"))


def test_embedding_maps_lattice_into_lattice(v3):
    q = antichain(2)
    hom = morphisms.subposet_embedding(q, v3, {"0": "a", "1": "b"})
    pis = lattice.enumerate_pi(v3)
    for le in lattice.enumerate_l(q):
        image = hom.apply(le.to_elem())
        assert lattice.from_algebra_elem(image, pis) is not None


def test_not_an_embedding(v3):
    with pytest.raises(NotAnEmbedding):
        morphisms.subposet_embedding(antichain(2), v3, {"0": "a", "1": "c"})
    with pytest.raises(NotAnEmbedding):
        morphisms.subposet_embedding(antichain(2), v3, {"0": "a", "1": "a"})


# -- relativization ---------------------------------------------------------------------------


def test_relativize_v3_at_top(v3):
    rel = morphisms.relativize(v3, "c")
    assert sorted(rel.sub.names) == ["a", "b"]
    space = stone.StoneSpace(v3)
    vq = stone.denote_elem(space, rel.unit)
    sub_space, sub_elems = all_elems(rel.sub)
    assert len(sub_elems) == 16
    images = {stone.denote_elem(space, rel.apply(y)) for y in sub_elems}
    assert len(images) == 16
    assert all(m & ~vq == 0 for m in images)
    assert stone.denote_elem(space, rel.apply(algebra.one(rel.sub))) == vq


def test_relativize_antichain_min():
    a2 = antichain(2)
    rel = morphisms.relativize(a2, "0")
    assert rel.sub.names == ("1",)
    _, sub_elems = all_elems(rel.sub)
    space = stone.StoneSpace(a2)
    images = {stone.denote_elem(space, rel.apply(y)) for y in sub_elems}
    assert len(images) == 4


def test_relativize_chain_sends_generator():
    c2 = chain(2)
    rel = morphisms.relativize(c2, 1)
    assert rel.sub.names == ("0",)
    y = algebra.gen(rel.sub, "0")
    expected = algebra.meet(algebra.gen(c2, 0), algebra.gen(c2, 1))
    assert algebra.equals(rel.apply(y), expected)


def test_relativize_respects_relative_operations(v3):
    rel = morphisms.relativize(v3, "c")
    _, sub_elems = all_elems(rel.sub)
    sample = sub_elems[::3]
    for y1 in sample:
        for y2 in sample:
            assert algebra.equals(
                rel.apply(algebra.meet(y1, y2)),
                algebra.meet(rel.apply(y1), rel.apply(y2)),
            )
            assert algebra.equals(
                rel.apply(algebra.join(y1, y2)),
                algebra.join(rel.apply(y1), rel.apply(y2)),
            )
    for y in sample:
        # relative complement: the unit of the image algebra is x_q
        assert algebra.equals(
            rel.apply(algebra.complement(y)),
            algebra.meet(rel.unit, algebra.complement(rel.apply(y))),
        )


# -- chain epimorphism ----------------------------------------------------------------------


def test_chain_epimorphism_surjective(v3):
    aug = linear_augmentation(v3, seed=0)
    hom = morphisms.chain_epimorphism(v3, aug)
    c = aug[0]
    space_c = stone.StoneSpace(c)
    images = {
        stone.denote_elem(space_c, hom.apply(e))
        for e in all_elems(v3)[1]
    }
    assert len(images) == 1 << len(space_c.points)  # onto all 16 elements


def test_chain_epimorphism_identity_on_chain():
    c4 = chain(4)
    aug = linear_augmentation(c4, seed=9)
    hom = morphisms.chain_epimorphism(c4, aug)
    for p in range(4):
        assert algebra.equals(hom.apply(algebra.gen(c4, p)), algebra.gen(aug[0], p))


def test_chain_epimorphism_collapses_meet_and_join():
    # joins of comparable generators collapse upward, meets downward:
    # h(x_a + x_b) is the generator of the later chain element and
    # h(x_a * x_b) the earlier one (checked against the denotations)
    a2 = antichain(2)
    aug = linear_augmentation(a2, seed=3)
    c, mapping = aug
    hom = morphisms.chain_epimorphism(a2, aug)
    join = algebra.join(algebra.gen(a2, 0), algebra.gen(a2, 1))
    meet = algebra.meet(algebra.gen(a2, 0), algebra.gen(a2, 1))
    assert algebra.equals(hom.apply(join), algebra.gen(c, 1))
    assert algebra.equals(hom.apply(meet), algebra.gen(c, 0))
    space = stone.StoneSpace(c)
    assert stone.denote_elem(space, hom.apply(join)) == stone.denote_elem(
        space, algebra.join(algebra.gen(c, 0), algebra.gen(c, 1))
    )


# -- the product map ----------------------------------------------------------------------------


def test_e_map_generator_equation():
    for left, right in ((chain(1), chain(1)), (chain(2), antichain(2))):
        em = morphisms.e_map(left, right)
        for p in range(left.n):
            for q in range(right.n):
                got = em.apply(algebra.gen(left, p), algebra.gen(right, q))
                assert algebra.equals(got, em.pair_gen(p, q))


def test_e_map_join_in_first_argument():
    a2, c1 = antichain(2), chain(1)
    em = morphisms.e_map(a2, c1)
    a = algebra.join(algebra.gen(a2, 0), algebra.gen(a2, 1))
    got = em.apply(a, algebra.gen(c1, 0))
    want = algebra.join(em.pair_gen(0, 0), em.pair_gen(1, 0))
    assert algebra.equals(got, want)


def test_e_map_monotone_small(v3):
    c2 = chain(2)
    em = morphisms.e_map(c2, v3)
    lp = lattice.enumerate_l(c2)
    lq = lattice.enumerate_l(v3)
    for b in lq:
        be = b.to_elem()
        for a1 in lp:
            for a2 in lp:
                if lattice.l_leq(a1, a2):
                    assert algebra.leq(
                        em.apply(a1.to_elem(), be), em.apply(a2.to_elem(), be)
                    )


def test_e_map_size_cap():
    from posetalg.errors import EnumerationOverflow

    with pytest.raises(EnumerationOverflow):
        morphisms.e_map(chain(4), chain(4), max_elements=9)


def test_e_map_accepts_lattice_elems():
    a2 = antichain(2)
    em = morphisms.e_map(a2, a2)
    le = lattice.l_elem(a2, [["0"], ["1"]])
    out = em.apply(le, le)
    assert lattice.from_algebra_elem(out, lattice.enumerate_pi(em.prod)) is not None


# -- product generation ---------------------------------------------------------------------------


def test_product_generation_true():
    left, right = chain(2), antichain(2)
    assert morphisms.product_generation_check(
        left, right, lattice.enumerate_pi(left), lattice.enumerate_pi(right)
    )


def test_product_generation_premise():
    c2 = chain(2)
    with pytest.raises(PremiseFailed):
        morphisms.product_generation_check(c2, c2, [algebra.one(c2)], [algebra.one(c2)])


# -- lexicographic layering --------------------------------------------------------------------------


def test_lex_layering_examples():
    assert morphisms.lex_layering_check(chain(2), [antichain(2), antichain(2)]) is None
    assert morphisms.lex_layering_check(chain(2), [chain(1), chain(1)]) is None
    assert morphisms.lex_layering_check(antichain(2), [chain(2), chain(2)]) is None


def test_lex_layering_strictness_on_blocks(v3):
    # lower-block product strictly below upper-block product inside the sum
    from posetalg.poset import lex_sum

    total = lex_sum(chain(2), [antichain(2), antichain(2)])
    low = algebra.join(
        algebra.gen(total, "0.0"), algebra.gen(total, "0.1")
    )
    high = algebra.meet(
        algebra.gen(total, "1.0"), algebra.gen(total, "1.1")
    )
    assert algebra.leq(low, high) and not algebra.equals(low, high)


# -- block decomposition -----------------------------------------------------------------------------


def test_h_construction_v3(v3):
    res = morphisms.h_construction(v3, ["c"])
    assert res.generates and res.layering
    assert len(res.elems) == 5  # zero plus the four block members
    space = stone.StoneSpace(v3)
    closure = stone.subalgebra_closure(
        space, [stone.denote_elem(space, e) for e in res.elems]
    )
    assert len(closure) == 32


def test_h_construction_chain():
    c3 = chain(3)
    res = morphisms.h_construction(c3, ["0", "1", "2"])
    assert res.generates and res.layering


def test_h_construction_errors():
    with pytest.raises(NotDirected):
        morphisms.h_construction(antichain(2), ["0"])
    c3 = chain(3)
    with pytest.raises(NotCofinal):
        morphisms.h_construction(c3, ["0"])
    with pytest.raises(NotCofinal):
        morphisms.h_construction(c3, ["2", "1"])


def test_maximal_chains_to_top(v3):
    chains = morphisms.maximal_chains_to_top(v3)
    named = {tuple(v3.names[i] for i in ch) for ch in chains}
    assert named == {("a", "c"), ("b", "c")}
    assert morphisms.maximal_chains_to_top(chain(3)) == [[0, 1, 2]]
    with pytest.raises(NotDirected):
        morphisms.maximal_chains_to_top(antichain(2))


def test_h_construction_directed_sample():
    for poset in corpus.directed_corpus(4):
        for chain_ids in morphisms.maximal_chains_to_top(poset):
            res = morphisms.h_construction(poset, chain_ids)
            assert res.generates and res.layering
