import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from conftest import brute_denote, brute_final_segments
from posetalg import algebra, corpus, exprs
from posetalg.errors import EnumerationOverflow, ParseError, PosetMismatch, UnknownElement
from posetalg.poset import antichain, chain, popcount, random_poset

POSET_POOL = [
    corpus.v3(),
    chain(3),
    antichain(3),
    random_poset(4, 0.4, seed=5),
    random_poset(5, 0.3, seed=9),
]


def expr_strategy(poset, depth=3):
    atoms = st.sampled_from(
        [("var", name) for name in poset.names] + [("const", True), ("const", False)]
    )
    return st.recursive(
        atoms,
        lambda kids: st.one_of(
            st.tuples(st.just("not"), kids),
            st.tuples(st.just("and"), kids, kids),
            st.tuples(st.just("or"), kids, kids),
        ),
        max_leaves=8,
    )


def any_poset_expr():
    return st.sampled_from(range(len(POSET_POOL))).flatmap(
        lambda i: st.tuples(st.just(i), expr_strategy(POSET_POOL[i]))
    )


def any_poset_two_exprs():
    return st.sampled_from(range(len(POSET_POOL))).flatmap(
        lambda i: st.tuples(st.just(i), expr_strategy(POSET_POOL[i]), expr_strategy(POSET_POOL[i]))
    )


def any_poset_three_exprs():
    return st.sampled_from(range(len(POSET_POOL))).flatmap(
        lambda i: st.tuples(
            st.just(i),
            expr_strategy(POSET_POOL[i]),
            expr_strategy(POSET_POOL[i]),
            expr_strategy(POSET_POOL[i]),
        )
    )


# -- constants and generators ---------------------------------------------------


def test_gen_denotation_frozen(v3):
    # x_a holds exactly at the final segments {a,c} and {a,b,c}
    segs = {s for s in brute_final_segments(v3) if algebra.gen(v3, "a").eval_segment(s)}
    assert segs == {v3.mask(["a", "c"]), v3.mask(["a", "b", "c"])}


def test_zero_one(v3):
    assert all(not algebra.zero(v3).eval_segment(s) for s in brute_final_segments(v3))
    assert all(algebra.one(v3).eval_segment(s) for s in brute_final_segments(v3))
    assert algebra.is_zero(algebra.zero(v3))
    assert algebra.is_one(algebra.one(v3))


def test_gen_unknown(v3):
    with pytest.raises(UnknownElement):
        algebra.gen(v3, "zzz")


def test_meet_truth_table(v3):
    e = algebra.meet(algebra.gen(v3, "a"), algebra.gen(v3, "b"))
    assert e.support == v3.mask(["a", "b"])
    true_traces = [t for k, t in enumerate(e.traces) if e.truth >> k & 1]
    assert true_traces == [v3.mask(["a", "b"])]


def test_complement_one_is_zero(v3):
    assert algebra.equals(algebra.complement(algebra.one(v3)), algebra.zero(v3))


def test_equals_forced_by_order(v3):
    assert algebra.equals(
        algebra.meet(algebra.gen(v3, "a"), algebra.gen(v3, "c")), algebra.gen(v3, "a")
    )


def test_leq_zero_bottom(v3):
    z = algebra.zero(v3)
    for name in v3.names:
        assert algebra.leq(z, algebra.gen(v3, name))


def test_is_zero_with_witness(v3):
    e = algebra.meet(algebra.gen(v3, "a"), algebra.complement(algebra.gen(v3, "b")))
    assert not algebra.is_zero(e)
    assert e.eval_segment(v3.mask(["a", "c"]))  # witnessing final segment


def test_poset_mismatch():
    with pytest.raises(PosetMismatch):
        algebra.meet(algebra.gen(chain(2), 0), algebra.gen(chain(2), 0))


def test_support_cap():
    wide = antichain(22)
    with pytest.raises(EnumerationOverflow):
        algebra.meet_all(wide, [algebra.gen(wide, i) for i in range(22)])


# -- elementary products ----------------------------------------------------------


def test_syntactic_zero_examples(v3):
    assert algebra.is_zero_syntactic(v3, v3.mask(["a", "b"]), v3.mask(["c"]))
    assert not algebra.is_zero_syntactic(v3, v3.mask(["a"]), v3.mask(["b"]))
    assert not algebra.is_zero_syntactic(v3, 0, 0)
    assert algebra.is_one(algebra.elementary_product(v3, 0, 0))


def test_elementary_product_denotation(v3):
    e = algebra.elementary_product(v3, v3.mask(["a"]), v3.mask(["b"]))
    segs = {s for s in brute_final_segments(v3) if e.eval_segment(s)}
    assert segs == {v3.mask(["a", "c"])}


@settings(max_examples=150, deadline=None)
@given(st.sampled_from(range(len(POSET_POOL))), st.integers(0, 63), st.integers(0, 63))
def test_syntactic_zero_matches_semantics(idx, sraw, traw):
    p = POSET_POOL[idx]
    s, t = sraw & p.full, traw & p.full
    e = algebra.elementary_product(p, s, t)
    assert algebra.is_zero_syntactic(p, s, t) == algebra.is_zero(e)


# -- Boolean laws ------------------------------------------------------------------


@settings(max_examples=120, deadline=None)
@given(any_poset_three_exprs())
def test_boolean_laws(case):
    idx, xa, xb, xc = case
    p = POSET_POOL[idx]
    a, b, c = (exprs.to_elem(p, n) for n in (xa, xb, xc))
    assert algebra.equals(
        algebra.meet(a, algebra.meet(b, c)), algebra.meet(algebra.meet(a, b), c)
    )
    assert algebra.equals(
        algebra.meet(a, algebra.join(b, c)),
        algebra.join(algebra.meet(a, b), algebra.meet(a, c)),
    )
    assert algebra.equals(
        algebra.complement(algebra.meet(a, b)),
        algebra.join(algebra.complement(a), algebra.complement(b)),
    )
    assert algebra.equals(algebra.complement(algebra.complement(a)), a)
    assert algebra.is_one(algebra.join(a, algebra.complement(a)))
    assert algebra.is_zero(algebra.meet(a, algebra.complement(a)))


@settings(max_examples=100, deadline=None)
@given(any_poset_two_exprs())
def test_leq_is_meet_order(case):
    idx, xa, xb = case
    p = POSET_POOL[idx]
    a, b = exprs.to_elem(p, xa), exprs.to_elem(p, xb)
    assert algebra.leq(a, b) == algebra.equals(algebra.meet(a, b), a)


def test_order_embedding():
    for p in corpus.corpus_posets(4):
        gens = [algebra.gen(p, i) for i in range(p.n)]
        for i in range(p.n):
            for j in range(p.n):
                assert algebra.leq(gens[i], gens[j]) == p.leq(i, j)
                assert algebra.equals(gens[i], gens[j]) == (i == j)


# -- evaluation semantics ------------------------------------------------------------


@settings(max_examples=80, deadline=None)
@given(any_poset_expr())
def test_eval_matches_brute_denotation(case):
    idx, node = case
    p = POSET_POOL[idx]
    e = exprs.to_elem(p, node)
    expected = brute_denote(p, node)
    for seg in brute_final_segments(p):
        assert e.eval_segment(seg) == (seg in expected)


@settings(max_examples=80, deadline=None)
@given(any_poset_two_exprs())
def test_equals_iff_same_denotation(case):
    idx, xa, xb = case
    p = POSET_POOL[idx]
    a, b = exprs.to_elem(p, xa), exprs.to_elem(p, xb)
    assert algebra.equals(a, b) == (brute_denote(p, xa) == brute_denote(p, xb))


# -- DNF ------------------------------------------------------------------------------


def test_dnf_examples(v3):
    assert algebra.to_dnf(algebra.gen(v3, "a")) == [
        algebra.ElementaryProduct(pos=v3.mask(["a"]), neg=0)
    ]
    assert algebra.to_dnf(algebra.zero(v3)) == []
    comp = algebra.complement(algebra.gen(v3, "c"))
    assert algebra.to_dnf(comp) == [algebra.ElementaryProduct(pos=0, neg=v3.mask(["c"]))]
    assert str(comp) == "-x{c}"


@settings(max_examples=80, deadline=None)
@given(any_poset_expr())
def test_dnf_round_trip(case):
    idx, node = case
    p = POSET_POOL[idx]
    e = exprs.to_elem(p, node)
    products = algebra.to_dnf(e)
    assert algebra.equals(algebra.from_dnf(p, products), e)
    for pr in products:
        assert not algebra.is_zero_syntactic(p, pr.pos, pr.neg)


# -- support reduction ------------------------------------------------------------------


def test_support_reduce_examples(v3):
    e = algebra.meet(algebra.gen(v3, "a"), algebra.gen(v3, "c"))
    r = algebra.support_reduce(e)
    assert r.support == v3.mask(["a"])
    assert algebra.equals(e, r)

    unit = algebra.AlgebraElem(v3, v3.mask(["a"]), (1 << 2) - 1)
    assert algebra.support_reduce(unit).support == 0

    g = algebra.gen(v3, "a")
    assert algebra.support_reduce(g).support == g.support


@settings(max_examples=100, deadline=None)
@given(any_poset_expr())
def test_support_reduce_preserves_and_shrinks(case):
    idx, node = case
    p = POSET_POOL[idx]
    e = exprs.to_elem(p, node)
    r = algebra.support_reduce(e)
    assert algebra.equals(e, r)
    assert r.support & ~e.support == 0
    assert popcount(r.support) <= popcount(e.support)


@settings(max_examples=100, deadline=None)
@given(any_poset_two_exprs())
def test_canonical_key_decides_equality(case):
    idx, xa, xb = case
    p = POSET_POOL[idx]
    a, b = exprs.to_elem(p, xa), exprs.to_elem(p, xb)
    assert (algebra.canonical_key(a) == algebra.canonical_key(b)) == algebra.equals(a, b)


# -- the expression grammar ----------------------------------------------------------------


def test_parse_precedence(v3):
    node = exprs.parse("!x(a) & x(b) | x(c)")
    assert node[0] == "or"
    assert node[1][0] == "and"
    assert node[1][1][0] == "not"


def test_parse_constants_and_parens(v3):
    assert exprs.parse("0") == ("const", False)
    assert exprs.parse("(x(a) | 1)") == ("or", ("var", "a"), ("const", True))


def test_parse_nested_paren_names():
    node = exprs.parse("x((0,1)) & x((1,2))")
    assert node == ("and", ("var", "(0,1)"), ("var", "(1,2)"))


def test_parse_errors():
    for bad in ("", "x(a", "x(a) &", "x(a) x(b)", "y(a)", ")("):
        with pytest.raises(ParseError):
            exprs.parse(bad)


def test_variables():
    assert exprs.variables(exprs.parse("x(a) & !x(b) | 0")) == {"a", "b"}
