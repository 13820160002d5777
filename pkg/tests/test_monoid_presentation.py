import random
from fractions import Fraction

import pytest

from uqcentre import (
    DomainError,
    MonoidAlgebraElement,
    build_root_system,
    generation_check,
    hilbert_basis,
    phi,
    presentation,
    verify_relations,
)

X = MonoidAlgebraElement.x


def test_phi_examples():
    a2 = build_root_system("A", 2)
    gens = hilbert_basis(a2).elements  # ((0,3), (1,1), (3,0))
    assert phi(gens, {0: 1, 2: 1}) == X((3, 3))
    assert phi(gens, {1: 3}) == X((3, 3))
    assert phi(gens, {}) == X((0, 0))
    with pytest.raises(DomainError):
        phi(gens, {7: 1})


def test_monoid_algebra_laws():
    rng = random.Random(23)

    def rand_elem():
        return MonoidAlgebraElement(
            {
                tuple(rng.randint(0, 3) for _ in range(2)): rng.randint(-3, 3)
                for _ in range(3)
            }
        )

    one = MonoidAlgebraElement.one(2)
    for _ in range(20):
        a, b, c = rand_elem(), rand_elem(), rand_elem()
        assert a * b == b * a
        assert (a * b) * c == a * (b * c)
        assert a * one == a
        assert a * (b + c) == a * b + a * c


def test_presentation_a2():
    pres = presentation(build_root_system("A", 2))
    assert len(pres.generators) == 3
    assert len(pres.relations) == 1
    rel = pres.relations[0]
    assert rel.kind == "rel1"
    # x_nu1 x_nu2 = x_mu1^3
    gens = pres.generators
    lhs = {gens[i]: e for i, e in rel.lhs}
    rhs = {gens[i]: e for i, e in rel.rhs}
    assert lhs == {(3, 0): 1, (0, 3): 1}
    assert rhs == {(1, 1): 3}


def test_presentation_d5():
    pres = presentation(build_root_system("D", 5))
    assert len(pres.relations) == 1
    rel = pres.relations[0]
    gens = pres.generators
    assert {gens[i]: e for i, e in rel.lhs} == {(0, 0, 0, 2, 0): 1, (0, 0, 0, 0, 2): 1}
    assert {gens[i]: e for i, e in rel.rhs} == {(0, 0, 0, 1, 1): 2}


def test_presentation_e6_golden():
    pres = presentation(build_root_system("E", 6))
    assert len(pres.generators) == 14
    assert len(pres.relations) == 8
    gens = pres.generators

    def norm(rel):
        lhs = frozenset((gens[i], e) for i, e in rel.lhs)
        rhs = frozenset((gens[i], e) for i, e in rel.rhs)
        return (rel.kind, lhs, rhs)

    mu1, mu3 = (1, 0, 0, 0, 0, 1), (0, 0, 1, 0, 1, 0)
    nu1, nu3 = (3, 0, 0, 0, 0, 0), (0, 0, 3, 0, 0, 0)
    nu5, nu6 = (0, 0, 0, 0, 3, 0), (0, 0, 0, 0, 0, 3)
    expected = {
        ("rel1", frozenset({(nu1, 1), (nu6, 1)}), frozenset({(mu1, 3)})),
        ("rel1", frozenset({(nu3, 1), (nu5, 1)}), frozenset({(mu3, 3)})),
        ("rel1", frozenset({((1, 0, 1, 0, 0, 0), 1), ((0, 0, 0, 0, 1, 1), 1)}),
         frozenset({(mu1, 1), (mu3, 1)})),
        ("rel1", frozenset({((1, 0, 0, 0, 2, 0), 1), ((0, 0, 2, 0, 0, 1), 1)}),
         frozenset({(mu1, 1), (mu3, 2)})),
        ("rel1", frozenset({((2, 0, 0, 0, 1, 0), 1), ((0, 0, 1, 0, 0, 2), 1)}),
         frozenset({(mu1, 2), (mu3, 1)})),
        ("rel2", frozenset({((1, 0, 1, 0, 0, 0), 3)}),
         frozenset({(nu1, 1), (nu3, 1)})),
        ("rel2", frozenset({((1, 0, 0, 0, 2, 0), 3)}),
         frozenset({(nu1, 1), (nu5, 2)})),
        ("rel2", frozenset({((2, 0, 0, 0, 1, 0), 3)}),
         frozenset({(nu1, 2), (nu5, 1)})),
    }
    assert {norm(r) for r in pres.relations} == expected


def test_presentation_type_i_has_no_relations():
    for fam, n in [("G", 2), ("B", 3), ("C", 3), ("A", 1), ("E", 7)]:
        pres = presentation(build_root_system(fam, n))
        assert pres.relations == ()
        assert len(pres.generators) == n


def test_rel2_skipped_for_scaled_fundamentals():
    # A3: the only pair is {2w1, 2w3} = {nu1, nu3}; rel2 would be trivial
    pres = presentation(build_root_system("A", 3))
    assert [r.kind for r in pres.relations] == ["rel1"]
    # A4 has 6 pairs of which 2 are nu-pairs: 6 rel1 + 4 rel2
    pres = presentation(build_root_system("A", 4))
    kinds = [r.kind for r in pres.relations]
    assert kinds.count("rel1") == 6
    assert kinds.count("rel2") == 4


def test_verify_relations_all_type_ii():
    for fam, n in [("A", 2), ("A", 3), ("A", 4), ("A", 5), ("A", 6),
                   ("D", 5), ("E", 6)]:
        rep = verify_relations(build_root_system(fam, n))
        assert rep.ok, (fam, n, rep.lines())


def test_verify_relations_vacuous_for_type_i():
    rep = verify_relations(build_root_system("B", 2))
    assert rep.ok and rep.items == []


def test_generation_check():
    a2 = build_root_system("A", 2)
    rep, counts = generation_check(a2, 4)
    assert rep.ok
    assert counts[(3, 3)] >= 2  # witnesses the relation
    assert counts[(0, 0)] == 1
    rep0, counts0 = generation_check(a2, 0)
    assert rep0.ok and counts0 == {(0, 0): 1}

    d5 = build_root_system("D", 5)
    rep, counts = generation_check(d5, 2)
    assert rep.ok and all(c >= 1 for c in counts.values())


def test_freeness_type_i_monomials_injective():
    # distinct degree <= 5 monomials in the generators give distinct weights
    for fam, n in [("G", 2), ("B", 3), ("C", 4), ("A", 1)]:
        rsys = build_root_system(fam, n)
        gens = hilbert_basis(rsys).elements
        seen = {}
        import itertools
        exps = [
            e
            for e in itertools.product(range(6), repeat=len(gens))
            if sum(e) <= 5
        ]
        for e in exps:
            img = phi(gens, dict(enumerate(e)))
            key = next(iter(img.terms))
            assert key not in seen or seen[key] == e
            seen[key] = e
        assert len(seen) == len(exps)


def test_presentation_json_and_render():
    pres = presentation(build_root_system("A", 2))
    js = pres.to_json()
    assert js["type"] == "A" and len(js["generators"]) == 3
    assert js["relations"][0]["kind"] == "rel1"
    text = pres.render()
    assert text == ["x_{ν1}·x_{ν2} = x_{μ1}^3"]
