"""Monomial ideal decompositions, multiplicities, and graded counts."""

from functools import reduce
from itertools import product as boxes

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from bumpless.monomial import (
    MonomialIdeal,
    grading_images,
    prime_from_names,
    prime_names,
)
from bumpless.rings import Poly, lex_ring, matrix_ring, parse_poly

R2 = matrix_ring(2)
AB = lex_ring(("a", "b"))
ABC = lex_ring(("a", "b", "c"))


def mono(ring, text):
    p = parse_poly(ring, text)
    assert len(p.terms) == 1
    return p.leading_monomial()


def ideal(ring, *texts):
    return MonomialIdeal(ring, [mono(ring, t) for t in texts])


def named_primes(ring, primes):
    return sorted(prime_names(ring, S) for S in primes)


def test_minimal_antichain():
    J = ideal(R2, "z[1,1]^2", "z[1,1]^3", "z[1,1]^2*z[2,2]")
    assert J.gens == (mono(R2, "z[1,1]^2"),)
    assert ideal(R2, "z[1,1]", "1").is_unit


def test_zero_and_unit_edges():
    Z = MonomialIdeal(R2)
    assert Z.is_zero and not Z.is_unit
    assert Z.minimal_primes() == [frozenset()]
    assert Z.associated_primes() == [frozenset()]
    assert Z.degree() == 1
    assert Z.codimension() == 0
    assert Z.dimension() == 4
    U = ideal(R2, "1")
    assert U.is_unit and not U.is_zero
    assert U.minimal_primes() == []
    assert U.associated_primes() == []
    with pytest.raises(ValueError):
        U.codimension()


def test_from_polys_rejects_sums():
    with pytest.raises(ValueError, match="not a monomial"):
        MonomialIdeal.from_polys([parse_poly(AB, "a + b")])


def test_colon_plus_intersect_small():
    xy = ideal(AB, "a*b")
    assert xy.colon(mono(AB, "a")) == ideal(AB, "b")
    assert ideal(AB, "a").intersect(ideal(AB, "b")) == xy
    assert ideal(AB, "a").plus(ideal(AB, "b")) == ideal(AB, "a", "b")


def box_monomials(ring, cap):
    for exps in boxes(*(range(cap + 1) for _ in ring.names)):
        yield ring.encode(list(exps))


def test_intersection_is_membershipwise():
    I = ideal(AB, "a^2", "a*b")
    J = ideal(AB, "b^2", "a^3")
    K = I.intersect(J)
    for m in box_monomials(AB, 4):
        assert K.contains(m) == (I.contains(m) and J.contains(m))


def test_radical():
    J = ideal(AB, "a^2*b", "b^3")
    assert not J.is_radical()
    assert J.radical() == ideal(AB, "a*b", "b")
    assert J.radical() == ideal(AB, "b")
    assert ideal(AB, "a*b").is_radical()


def test_restricted_drops_outside_exponents():
    J = ideal(AB, "a^2*b", "b^3")
    S = prime_from_names(AB, ("a",))
    assert J.restricted(S).is_unit
    assert J.multiplicity_at(S) == 0
    T = prime_from_names(AB, ("b",))
    assert J.restricted(T) == ideal(AB, "b")
    assert J.multiplicity_at(T) == 1


def test_irreducible_components_multiply_back():
    J = ideal(ABC, "a*b", "a*c", "b*c")
    comps = J.irreducible_components()
    for C in comps:
        for g in C.gens:
            assert len(C.support(g)) == 1
    assert reduce(lambda x, y: x.intersect(y), comps) == J


def test_embedded_prime_found():
    J = ideal(AB, "a^2", "a*b")
    assert named_primes(AB, J.associated_primes()) == [("a",), ("a", "b")]
    assert named_primes(AB, J.minimal_primes()) == [("a",)]
    with pytest.raises(ValueError, match="infinite length"):
        J.multiplicity_at(prime_from_names(AB, ("a", "b")))


def test_initial_ideal_of_smallest_lattice_pair():
    J = ideal(R2, "z[1,1]^2*z[2,2]")
    assert named_primes(R2, J.minimal_primes()) == [("z[1,1]",), ("z[2,2]",)]
    assert J.multiplicity_at(prime_from_names(R2, ("z[1,1]",))) == 2
    assert J.multiplicity_at(prime_from_names(R2, ("z[2,2]",))) == 1
    assert J.degree() == 3
    assert J.codimension() == 1
    assert J.is_equidimensional()


def test_facets():
    J = ideal(R2, "z[1,2]*z[2,1]")
    assert J.facets() == [(0, 1, 3), (0, 2, 3)]


def test_k_polynomial_frozen():
    T = lex_ring(("x1", "x2", "y1", "y2"))
    imgs = grading_images(R2, T, "rows-columns")
    assert ideal(R2, "z[1,1]").k_polynomial(T, imgs).to_text() == "-x1*y1 + 1"
    Q = lex_ring(("q",))
    std = grading_images(R2, Q, "standard")
    assert ideal(R2, "z[1,1]*z[2,2]").k_polynomial(Q, std).to_text() == "-q^2 + 1"
    assert MonomialIdeal(R2).k_polynomial(Q, std).to_text() == "1"
    assert ideal(R2, "1").k_polynomial(Q, std).is_zero


def test_multidegree_frozen():
    T = lex_ring(("x1", "x2", "y1", "y2"))
    imgs = grading_images(R2, T, "rows-columns")
    assert ideal(R2, "z[1,1]").multidegree(T, imgs).to_text() == "x1 + y1"
    got = ideal(R2, "z[1,1]*z[2,2]").multidegree(T, imgs)
    assert got.to_text() == "x1 + x2 + y1 + y2"


def test_rows_grading_and_errors():
    T = lex_ring(("x1", "x2"))
    imgs = grading_images(R2, T, "rows")
    assert ideal(R2, "z[2,1]").k_polynomial(T, imgs).to_text() == "-x2 + 1"
    with pytest.raises(ValueError, match="not a matrix variable"):
        grading_images(AB, T, "rows")
    with pytest.raises(ValueError, match="unknown grading"):
        grading_images(R2, T, "columns")
    with pytest.raises(ValueError, match="one grading image"):
        ideal(R2, "z[1,1]").k_polynomial(T, (T._units[0],))


def test_prime_name_round_trip():
    S = prime_from_names(R2, ("z[2,1]", "z[1,2]"))
    assert prime_names(R2, S) == ("z[1,2]", "z[2,1]")


def small_ideals(ring, max_exp, max_gens):
    exps = st.tuples(*(st.integers(0, max_exp) for _ in ring.names))
    return st.lists(exps, min_size=1, max_size=max_gens).map(
        lambda rows: MonomialIdeal(ring, (ring.encode(list(r)) for r in rows))
    )


def brute_associated_primes(J):
    """Every associated prime is a colon by a monomial dividing the
    generator lcm, so a box search is exhaustive."""
    ring = J.ring
    cap = 0
    for g in J.gens:
        cap = max(cap, max(ring.decode(g), default=0))
    found = set()
    for m in box_monomials(ring, cap):
        C = J.colon(m)
        names = set()
        ok = not C.is_zero
        for g in C.gens:
            sup = C.support(g)
            if len(sup) != 1 or ring.decode(g)[next(iter(sup))] != 1:
                ok = False
                break
            names |= sup
        if ok:
            found.add(frozenset(names))
    return found


@settings(max_examples=60, deadline=None)
@given(small_ideals(ABC, 3, 4))
def test_associated_primes_against_colon_search(J):
    if J.is_unit:
        assert J.associated_primes() == []
        return
    assert set(J.associated_primes()) == brute_associated_primes(J)


@settings(max_examples=60, deadline=None)
@given(small_ideals(AB, 4, 4))
def test_multiplicity_counts_standard_monomials(J):
    S = frozenset(range(2))
    local = J.restricted(S)
    if local.is_unit:
        assert J.multiplicity_at(S) == 0
        return
    caps = [0, 0]
    artinian = [False, False]
    for g in local.gens:
        e = AB.decode(g)
        for v in range(2):
            caps[v] = max(caps[v], e[v])
            if e[v] and not any(e[u] for u in range(2) if u != v):
                artinian[v] = True
    if not all(artinian):
        with pytest.raises(ValueError, match="infinite length"):
            J.multiplicity_at(S)
        return
    outside = sum(
        1 for m in box_monomials(AB, max(caps)) if not local.contains(m)
    )
    assert J.multiplicity_at(S) == outside


@settings(max_examples=40, deadline=None)
@given(small_ideals(AB, 3, 3), small_ideals(AB, 3, 3))
def test_k_polynomial_inclusion_exclusion(I, J):
    Q = lex_ring(("q",))
    std = grading_images(AB, Q, "standard")

    def K(X):
        return X.k_polynomial(Q, std)

    assert K(I.intersect(J)) + K(I.plus(J)) == K(I) + K(J)


def test_standard_multidegree_reads_degree_and_codim():
    Q = lex_ring(("q",))
    std = grading_images(R2, Q, "standard")
    for J in (
        ideal(R2, "z[1,1]^2*z[2,2]"),
        ideal(R2, "z[1,1]", "z[1,2]*z[2,1]"),
        ideal(R2, "z[1,2]*z[2,1]"),
    ):
        expect = Poly.constant(Q, J.degree()) * parse_poly(Q, "q") ** J.codimension()
        assert J.multidegree(Q, std) == expect
