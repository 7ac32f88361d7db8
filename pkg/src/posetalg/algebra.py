"""Elements of the free Boolean algebra over a poset, with decidable equality.

An element is stored as a finite support S plus a truth table over the
realizable traces of S: the up-closed subsets of the subposet on S.  Any
final segment R of the poset restricted to S is up-closed in S, and every
up-closed T <= S is realized by the final segment generated by T, so the
table determines the element exactly and equality is a table comparison
over a common support.
"""

from __future__ import annotations

from bisect import bisect_left
from dataclasses import dataclass

from .errors import EnumerationOverflow, PosetMismatch, UnknownElement
from .poset import iter_bits, popcount

DEFAULT_SUPPORT_CAP = 20


def _traces(poset, support):
    if popcount(support) > DEFAULT_SUPPORT_CAP:
        raise EnumerationOverflow(
            f"support of {popcount(support)} elements exceeds cap {DEFAULT_SUPPORT_CAP}"
        )
    return poset.upsets_of(support)


class AlgebraElem:
    """Immutable value; build via gen/zero/one and the Boolean operations."""

    __slots__ = ("poset", "support", "traces", "truth", "_ckey")

    def __init__(self, poset, support, truth, traces=None):
        self.poset = poset
        self.support = support
        self.traces = _traces(poset, support) if traces is None else traces
        self.truth = truth
        self._ckey = None

    def eval_trace(self, trace):
        """Truth at a trace (an up-closed subset of the support)."""
        k = bisect_left(self.traces, trace)
        if k == len(self.traces) or self.traces[k] != trace:
            raise UnknownElement(f"not a realizable trace: {trace:b}")
        return bool(self.truth >> k & 1)

    def eval_segment(self, segment):
        """Truth at a final segment of the poset (depends on R & support only)."""
        return self.eval_trace(segment & self.support)

    def __eq__(self, other):
        if not isinstance(other, AlgebraElem):
            return NotImplemented
        if self.poset is not other.poset:
            return False
        return equals(self, other)

    def __hash__(self):
        return hash((id(self.poset), canonical_key(self)))

    def __repr__(self):
        return f"AlgebraElem(support={self.poset.names_of(self.support)}, truth={self.truth:#x})"

    def __str__(self):
        return dnf_str(to_dnf(self), self.poset)


def _check_same_poset(e1, e2):
    if e1.poset is not e2.poset:
        raise PosetMismatch("elements live over different posets")


def zero(poset):
    return AlgebraElem(poset, 0, 0)


def one(poset):
    return AlgebraElem(poset, 0, 1)


def gen(poset, p):
    """Generator x_p: true exactly on final segments containing p."""
    i = poset.id(p)
    support = 1 << i
    traces = _traces(poset, support)
    truth = sum(1 << k for k, t in enumerate(traces) if t)
    return AlgebraElem(poset, support, truth, traces)


def _combine(e1, e2, op):
    _check_same_poset(e1, e2)
    poset = e1.poset
    support = e1.support | e2.support
    traces = _traces(poset, support)
    truth = 0
    for k, t in enumerate(traces):
        if op(e1.eval_trace(t & e1.support), e2.eval_trace(t & e2.support)):
            truth |= 1 << k
    return AlgebraElem(poset, support, truth, traces)


def meet(e1, e2):
    return _combine(e1, e2, lambda a, b: a and b)


def join(e1, e2):
    return _combine(e1, e2, lambda a, b: a or b)


def complement(e):
    full = (1 << len(e.traces)) - 1
    return AlgebraElem(e.poset, e.support, e.truth ^ full, e.traces)


def meet_all(poset, elems):
    out = one(poset)
    for e in elems:
        out = meet(out, e)
    return out


def join_all(poset, elems):
    out = zero(poset)
    for e in elems:
        out = join(out, e)
    return out


def is_zero(e):
    return e.truth == 0


def is_one(e):
    return e.truth == (1 << len(e.traces)) - 1


def equals(e1, e2):
    _check_same_poset(e1, e2)
    if e1.support == e2.support:
        return e1.truth == e2.truth
    support = e1.support | e2.support
    for t in _traces(e1.poset, support):
        if e1.eval_trace(t & e1.support) != e2.eval_trace(t & e2.support):
            return False
    return True


def leq(e1, e2):
    """e1 <= e2 in the Boolean order: e1 & ~e2 = 0."""
    return is_zero(meet(e1, complement(e2)))


@dataclass(frozen=True)
class ElementaryProduct:
    """(prod of x_p, p in pos) & (prod of -x_q, q in neg), as support masks."""

    pos: int
    neg: int

    def render(self, poset):
        bits = []
        if self.pos:
            bits.append("x{%s}" % ",".join(sorted(poset.names_of(self.pos))))
        if self.neg:
            bits.append("-x{%s}" % ",".join(sorted(poset.names_of(self.neg))))
        return "*".join(bits) if bits else "1"


def is_zero_syntactic(poset, sigma, tau):
    """Order-only zero test for an elementary product: some p in sigma lies
    below some q in tau."""
    s = sigma if isinstance(sigma, int) else poset.mask(sigma)
    t = tau if isinstance(tau, int) else poset.mask(tau)
    return bool(poset.upset(s) & t)


def elementary_product(poset, sigma, tau):
    s = sigma if isinstance(sigma, int) else poset.mask(sigma)
    t = tau if isinstance(tau, int) else poset.mask(tau)
    support = s | t
    traces = _traces(poset, support)
    truth = 0
    for k, trace in enumerate(traces):
        if trace & s == s and trace & t == 0:
            truth |= 1 << k
    return AlgebraElem(poset, support, truth, traces)


def product_elem(poset, sigma):
    """x_sigma: the meet of generators over sigma (1 when sigma is empty)."""
    return elementary_product(poset, sigma, 0)


def support_reduce(e):
    """Drop support elements the truth table does not depend on.

    Removal is attempted in ascending element-id order and iterated to a
    fixpoint; the result is the canonical minimal-support form of e.
    """
    poset = e.poset
    support, traces, truth = e.support, e.traces, e.truth
    changed = True
    while changed:
        changed = False
        for s in iter_bits(support):
            bit = 1 << s
            rest = support & ~bit
            rest_traces = _traces(poset, rest)
            new_truth = 0
            ok = True
            trace_set = {}
            for k, t in enumerate(traces):
                trace_set[t] = bool(truth >> k & 1)
            for k, u in enumerate(rest_traces):
                vals = [trace_set[c] for c in (u, u | bit) if c in trace_set]
                if len(vals) == 2 and vals[0] != vals[1]:
                    ok = False
                    break
                if vals[0]:
                    new_truth |= 1 << k
            if ok:
                support, traces, truth = rest, rest_traces, new_truth
                changed = True
                break
    return AlgebraElem(poset, support, truth, traces)


def canonical_key(e):
    """Hashable key identifying e up to equality (minimal support + table)."""
    if e._ckey is None:
        r = support_reduce(e)
        e._ckey = (r.support, r.truth)
    return e._ckey


def to_dnf(e):
    """Disjoint elementary products over the reduced support, joining to e."""
    r = support_reduce(e)
    out = []
    for k, t in enumerate(r.traces):
        if r.truth >> k & 1:
            out.append(ElementaryProduct(pos=t, neg=r.support & ~t))
    return out


def from_dnf(poset, products):
    return join_all(
        poset, [elementary_product(poset, pr.pos, pr.neg) for pr in products]
    )


def dnf_str(products, poset=None):
    if not products:
        return "0"
    if poset is None:
        # render with raw bit ids when no poset is handy
        def render(pr):
            bits = []
            if pr.pos:
                bits.append("x{%s}" % ",".join(str(i) for i in iter_bits(pr.pos)))
            if pr.neg:
                bits.append("-x{%s}" % ",".join(str(i) for i in iter_bits(pr.neg)))
            return "*".join(bits) if bits else "1"

        return " + ".join(render(pr) for pr in products)
    return " + ".join(pr.render(poset) for pr in products)


def from_clopen(poset, segments, mask):
    """Element with full support from a set of final segments.

    ``segments`` must be the sorted tuple of all final segment masks of the
    poset; ``mask`` selects which of them the element is true at.
    """
    return AlgebraElem(poset, poset.full, mask, segments)
