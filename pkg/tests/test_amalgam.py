import pytest

from girale.algebra import AlgHom, identity_alg_hom, trivial_algebra
from girale.amalgam import (
    Amalgam,
    Span,
    amalgamate,
    class_catalog,
    span_catalog,
    verify_amalgam,
)
from girale.construct import KClassQuery, build_R, member_K, split_R
from girale.group import PrimeSet, group_homs, make_group

Z3 = make_group([3])
Z5 = make_group([5])
Z9 = make_group([9])


def unit_map(target):
    return AlgHom(trivial_algebra(), target, (target.one,))


def test_amalgamate_coprime_over_trivial():
    query = KClassQuery(PrimeSet.of(2), frozenset())
    b, c = build_R(Z3), build_R(Z5)
    span = Span(trivial_algebra(), b, c, unit_map(b), unit_map(c))
    amalgam = amalgamate(span, query)
    assert amalgam.D.size == 17
    assert split_R(amalgam.D).group.invariant_factors == (15,)
    report = verify_amalgam(span, amalgam, strong=True)
    assert report.passed and report.strong_checked
    assert member_K(amalgam.D, query).member


def test_amalgamate_identity_span():
    query = KClassQuery(PrimeSet.of(2), frozenset())
    algebra = build_R(Z3)
    span = Span(algebra, algebra, algebra, identity_alg_hom(algebra), identity_alg_hom(algebra))
    amalgam = amalgamate(span, query)
    assert split_R(amalgam.D).group.invariant_factors == (3,)
    assert verify_amalgam(span, amalgam, strong=True).passed


def test_amalgamate_absorbs_bigger_leg():
    query = KClassQuery(PrimeSet.of(2), frozenset())
    small, big = build_R(Z3), build_R(Z9)
    from girale.construct import lift_embedding

    alpha = group_homs(Z3, Z9, injective_only=True)[0]
    lifted = lift_embedding(alpha)
    span = Span(
        small,
        small,
        big,
        identity_alg_hom(small),
        AlgHom(small, big, lifted.mapping),
    )
    amalgam = amalgamate(span, query)
    assert split_R(amalgam.D).group.invariant_factors == (9,)
    assert verify_amalgam(span, amalgam).passed


def test_amalgamate_symmetric_up_to_iso():
    query = KClassQuery(PrimeSet.of(5), frozenset({"0"}))
    b = build_R(make_group([2]), query.signature)
    c = build_R(make_group([4]), query.signature)
    t = trivial_algebra(query.signature)
    one = amalgamate(Span(t, b, c, unit_map_sig(b), unit_map_sig(c)), query)
    other = amalgamate(Span(t, c, b, unit_map_sig(c), unit_map_sig(b)), query)
    assert (
        split_R(one.D).group.invariant_factors
        == split_R(other.D).group.invariant_factors
    )


def unit_map_sig(target):
    triv = trivial_algebra(target.signature)
    return AlgHom(triv, target, (target.one,))


def test_amalgamate_all_trivial():
    sig = frozenset({"bot", "top", "0"})
    query = KClassQuery(PrimeSet.of(3), sig)
    t = trivial_algebra(sig)
    span = Span(t, t, t, AlgHom(t, t, (0,)), AlgHom(t, t, (0,)))
    amalgam = amalgamate(span, query)
    assert amalgam.D.size == 1
    assert verify_amalgam(span, amalgam, strong=True).passed


def test_amalgamate_rejects_non_members():
    query = KClassQuery(PrimeSet.of(3), frozenset())
    algebra = build_R(Z3)  # has an order-3 element, so it is out for P={3}
    span = Span(algebra, algebra, algebra, identity_alg_hom(algebra), identity_alg_hom(algebra))
    with pytest.raises(ValueError):
        amalgamate(span, query)


def test_amalgamate_rejects_broken_span():
    query = KClassQuery(PrimeSet.of(2), frozenset())
    algebra = build_R(Z3)
    mapping = list(range(algebra.size))
    mapping[0], mapping[1] = mapping[1], mapping[0]
    crooked = AlgHom(algebra, algebra, tuple(mapping))  # moves the unit: not a hom
    span = Span(algebra, algebra, algebra, crooked, identity_alg_hom(algebra))
    with pytest.raises(ValueError):
        amalgamate(span, query)


def test_verify_amalgam_catches_corruption():
    query = KClassQuery(PrimeSet.of(2), frozenset())
    b, c = build_R(Z3), build_R(Z5)
    span = Span(trivial_algebra(), b, c, unit_map(b), unit_map(c))
    amalgam = amalgamate(span, query)
    mapping = list(amalgam.psi1.mapping)
    mapping[0], mapping[1] = mapping[1], mapping[0]
    corrupted = Amalgam(amalgam.D, AlgHom(b, amalgam.D, tuple(mapping)), amalgam.psi2)
    report = verify_amalgam(span, corrupted)
    failed = {item.name for item in report.failures()}
    assert "psi1-hom" in failed
    witnessed = [item for item in report.failures() if item.name == "psi1-hom"]
    assert witnessed[0].witness != ()


def test_identity_amalgam_is_strong():
    query = KClassQuery(PrimeSet.of(2), frozenset())
    algebra = build_R(Z3)
    span = Span(algebra, algebra, algebra, identity_alg_hom(algebra), identity_alg_hom(algebra))
    amalgam = Amalgam(algebra, identity_alg_hom(algebra), identity_alg_hom(algebra))
    report = verify_amalgam(span, amalgam, strong=True)
    assert report.passed and report.strong


def test_trivial_spans_are_weak_but_amalgamate():
    query = KClassQuery(PrimeSet.of(2), frozenset())
    b = build_R(Z3)
    span = Span(trivial_algebra(), b, b, unit_map(b), unit_map(b))
    amalgam = amalgamate(span, query)
    report = verify_amalgam(span, amalgam, strong=True)
    assert report.passed
    assert not report.strong  # bounds meet outside the image of the trivial core


def test_span_catalog_small_sweep():
    primes = PrimeSet.of(2)
    sig = frozenset()
    query = KClassQuery(primes, sig)
    count = 0
    for span in span_catalog(primes, sig, 5):
        amalgam = amalgamate(span, query)
        assert verify_amalgam(span, amalgam).passed
        assert member_K(amalgam.D, query).member
        count += 1
    assert count == 45


def test_class_catalog_respects_sigma():
    members = class_catalog(PrimeSet.of(2), frozenset(), 7)
    labels = [label for label, _, _ in members]
    assert labels == ["T", "Z1", "Z3", "Z5", "Z7"]
