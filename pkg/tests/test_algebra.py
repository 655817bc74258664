import dataclasses
import itertools

import pytest

from girale.algebra import (
    NotResiduated,
    algebra_from_json,
    algebra_to_json,
    check_class,
    congruence_set,
    direct_product,
    enumerate_homs,
    ExpansionError,
    factor_partitions,
    girale_expand,
    identity_alg_hom,
    compose_alg_homs,
    is_congruence,
    meet_partitions,
    negative_cone,
    refines,
    residuals_from_mult,
    tag_for_signature,
    trivial_algebra,
)
from girale.construct import SIGNATURE_FULL, build_R
from girale.group import make_group

from tests.conftest import bounded_involutive_chain

Z2 = make_group([2])
Z3 = make_group([3])


def R(group, sig=frozenset()):
    return build_R(group, sig)


def test_residuals_on_flat_expansion():
    a = R(Z2)
    bot, top, one = 2, 3, 0
    assert a.imp[top][one] == bot
    b = R(Z3)
    # the residual of a group element is its inverse times the target
    assert b.imp[1][2] == 1  # a -> a2 = a
    assert b.imp[2][1] == 2  # a2 -> a = a2


def test_residuals_two_element_chain():
    meet = ((0, 0), (0, 1))
    join = ((0, 1), (1, 1))
    imp = residuals_from_mult(meet, join, meet)
    assert imp[0][0] == 1


def test_residuals_reject_nondistributive_meet():
    # diamond with three atoms: meet against its own order has no residual
    order = {0: set(), 1: {0}, 2: {0}, 3: {0}, 4: {0, 1, 2, 3}}
    n = 5

    def leq(x, y):
        return x == y or x in order[y]

    def meet_of(x, y):
        lowers = [z for z in range(n) if leq(z, x) and leq(z, y)]
        return max(lowers, key=lambda z: len([w for w in lowers if leq(w, z)]))

    meet = tuple(tuple(meet_of(x, y) for y in range(n)) for x in range(n))
    join = tuple(
        tuple(min((z for z in range(n) if leq(x, z) and leq(y, z)),
                  key=lambda z: sum(leq(w, z) for w in range(n)))
              for y in range(n))
        for x in range(n)
    )
    with pytest.raises(NotResiduated) as err:
        residuals_from_mult(meet, join, meet)
    assert len(err.value.maximal) > 1


def test_check_class_girale():
    assert check_class(R(Z3, SIGNATURE_FULL), "girale").passed


def test_check_class_reports_bang_violations():
    good = R(Z2, SIGNATURE_FULL)
    bad = dataclasses.replace(good, bang=(good.top,) * good.size)
    report = check_class(bad, "girale")
    assert not report.passed
    laws = {v.law for v in report.violations}
    assert "G1" in laws and "G2" in laws
    # the unit itself witnesses the decrease failure: !1 = top is not below 1
    assert any(v.law == "G2" and v.witness == (good.one,) for v in report.violations)


def test_trivial_algebra_passes_every_tag():
    t = trivial_algebra(SIGNATURE_FULL)
    for tag in ("crl", "prl", "bounded_prl", "a_algebra", "girale"):
        assert check_class(t, tag).passed


def test_check_class_signature_mismatch():
    with pytest.raises(ValueError):
        check_class(R(Z2), "girale")


def test_tag_for_signature():
    assert tag_for_signature(frozenset()) == "crl"
    assert tag_for_signature(frozenset({"0"})) == "prl"
    assert tag_for_signature(frozenset({"0", "bot", "top"})) == "a_algebra"
    assert tag_for_signature(SIGNATURE_FULL) == "girale"


def test_girale_expand_matches_builtin():
    base = build_R(Z3, frozenset({"0", "bot", "top"}))
    expanded = girale_expand(base)
    assert expanded.bang == build_R(Z3, SIGNATURE_FULL).bang
    assert check_class(expanded, "girale").passed
    bang = expanded.bang
    bot, one, top = 3, 0, 4
    assert bang[one] == one and bang[top] == one
    assert bang[1] == bang[2] == bang[bot] == bot


def test_girale_expand_trivial():
    assert girale_expand(trivial_algebra({"0", "bot", "top"})).bang == (0,)


def test_girale_expand_rejects_nonidempotent_negatives():
    chain = bounded_involutive_chain()
    assert check_class(chain, "a_algebra").passed
    with pytest.raises(ExpansionError) as err:
        girale_expand(chain)
    assert err.value.witness in (1, 2)


def test_negative_cone_two_elements():
    for group in (Z2, Z3, make_group([2, 2])):
        cone = negative_cone(R(group))
        assert cone.size == 2
        assert check_class(cone, "crl").passed
    assert negative_cone(trivial_algebra()).size == 1


def test_negative_cone_truncated_residual():
    cone = negative_cone(R(Z3))
    # elements are bot then 1; (bot -> bot) /\ 1 = 1
    assert cone.imp[0][0] == cone.one


def test_congruences_simple():
    result = congruence_set(R(Z2))
    assert result.count == 2
    assert result.is_simple() and result.is_fsi()


def test_congruences_trivial_algebra():
    result = congruence_set(trivial_algebra())
    assert result.count == 1
    assert not result.is_simple()
    assert result.is_fsi()


def test_congruences_product_not_simple():
    product = direct_product(R(Z2), R(Z2))
    result = congruence_set(product)
    assert result.count >= 4
    assert not result.is_simple()
    assert not result.is_fsi()
    left, right = factor_partitions(4, 4)
    assert is_congruence(product, left) and is_congruence(product, right)
    delta = tuple(range(16))
    assert meet_partitions(left, right) == delta
    assert refines(delta, left)


def test_cone_congruence_count_matches():
    for group in (Z2, Z3, make_group([4])):
        algebra = R(group)
        assert congruence_set(algebra).count == congruence_set(negative_cone(algebra)).count
    product = direct_product(R(Z2), R(Z2))
    con_a = congruence_set(product)
    con_cone = congruence_set(negative_cone(product))
    assert con_a.count == con_cone.count
    assert _order_isomorphic(con_a.congruences, con_cone.congruences)


def _order_isomorphic(first, second):
    if len(first) != len(second):
        return False
    for perm in itertools.permutations(range(len(second))):
        ok = True
        for i in range(len(first)):
            for j in range(len(first)):
                if refines(first[i], first[j]) != refines(second[perm[i]], second[perm[j]]):
                    ok = False
                    break
            if not ok:
                break
        if ok:
            return True
    return False


def test_enumerate_homs_unbounded_expansion():
    homs = enumerate_homs(R(Z2), R(Z2))
    mappings = {h.mapping for h in homs}
    # constants must be preserved, so only the collapse to 1 joins the identity
    assert mappings == {(0, 1, 2, 3), (0, 0, 0, 0)}


def test_enumerate_homs_bounded_expansion_rigid():
    bounded = R(Z2, frozenset({"bot", "top"}))
    homs = enumerate_homs(bounded, bounded)
    assert [h.mapping for h in homs] == [(0, 1, 2, 3)]


def test_enumerate_homs_from_trivial():
    triv = trivial_algebra()
    assert [h.mapping for h in enumerate_homs(triv, triv, injective_only=True)] == [(0,)]
    into = enumerate_homs(triv, R(Z2), injective_only=True)
    assert [h.mapping for h in into] == [(0,)]


def test_hom_composition_closed():
    algebra = R(Z2)
    homs = enumerate_homs(algebra, algebra)
    mappings = {h.mapping for h in homs}
    for f in homs:
        for g in homs:
            assert compose_alg_homs(g, f).mapping in mappings
    assert identity_alg_hom(algebra).mapping in mappings


def test_residuation_corollaries():
    for group in (Z2, Z3):
        algebra = R(group)
        for a in range(algebra.size):
            for b in range(algebra.size):
                assert algebra.leq(algebra.mult[a][algebra.imp[a][b]], b)
                assert algebra.leq(a, algebra.imp[b][algebra.mult[b][a]])


def test_involution_on_pointed_expansions():
    for group in (Z2, Z3, make_group([2, 2])):
        algebra = build_R(group, frozenset({"0", "bot", "top"}))
        for a in range(algebra.size):
            neg = algebra.imp[a][algebra.zero]
            assert algebra.imp[neg][algebra.zero] == a


def test_girale_guard_image_properties():
    algebra = build_R(Z3, SIGNATURE_FULL)
    image = set(algebra.bang)
    for a in image:
        assert algebra.leq(a, algebra.one)
        for b in image:
            assert algebra.mult[a][b] in image


def test_capacity_guards():
    from girale.capacity import CapacityError

    big = build_R(make_group([12]))
    with pytest.raises(CapacityError):
        congruence_set(big, max_size=8)
    with pytest.raises(CapacityError):
        enumerate_homs(big, big, max_size=8)


def test_algebra_json_round_trip():
    algebra = build_R(Z3, SIGNATURE_FULL)
    again = algebra_from_json(algebra_to_json(algebra))
    assert again == algebra
    assert again.names == algebra.names
