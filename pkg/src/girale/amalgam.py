"""Spans of class members and the constructive amalgamation procedure.

A span is amalgamated by dropping to the group subreducts, pushing out, and
lifting back.  Trivial members (legal only when the signature carries no
bounds) are treated as expansions of the one-element group.  Strong
amalgamation is measured and reported, never asserted.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterator

from .algebra import AlgHom, FiniteAlgebra, trivial_algebra
from .construct import KClassQuery, MembershipResult, build_R, lift_embedding, member_K, restrict_embedding
from .group import (
    FiniteGroup,
    GroupHom,
    PrimeSet,
    abelian_group_catalog,
    check_sigma,
    group_homs,
    make_group,
    pushout,
)


@dataclass(frozen=True)
class Span:
    """Two embeddings out of a common algebra: left A -> B, right A -> C."""

    A: FiniteAlgebra
    B: FiniteAlgebra
    C: FiniteAlgebra
    phi1: AlgHom
    phi2: AlgHom


@dataclass(frozen=True)
class Amalgam:
    D: FiniteAlgebra
    psi1: AlgHom
    psi2: AlgHom


@dataclass(frozen=True)
class CheckItem:
    name: str
    passed: bool
    witness: tuple[int, ...] = ()


@dataclass(frozen=True)
class AmalgamReport:
    checks: tuple[CheckItem, ...]
    strong_checked: bool

    @property
    def passed(self) -> bool:
        """Amalgam validity: homs, injectivity, endpoints, commuting square."""
        return all(
            item.passed for item in self.checks if item.name != "strong-intersection"
        )

    @property
    def strong(self) -> bool:
        """Whether the image-intersection equality held; diagnostic, not required."""
        return all(
            item.passed for item in self.checks if item.name == "strong-intersection"
        )

    def failures(self) -> list[CheckItem]:
        return [item for item in self.checks if not item.passed]


def validate_span(span: Span) -> list[str]:
    problems = []
    sigs = {span.A.signature, span.B.signature, span.C.signature}
    if len(sigs) != 1:
        problems.append("signatures differ across the span")
    for name, hom, src, tgt in (
        ("phi1", span.phi1, span.A, span.B),
        ("phi2", span.phi2, span.A, span.C),
    ):
        if hom.source != src or hom.target != tgt:
            problems.append(f"{name} endpoints do not match the span")
            continue
        bad = hom.violations()
        if bad:
            problems.append(f"{name} is not a homomorphism ({bad[0].describe()})")
        if not hom.is_injective():
            problems.append(f"{name} is not injective")
    return problems


def _group_data(result: MembershipResult):
    if result.trivial:
        return make_group([1]), None
    return result.group, result.canon


def _leg_group_hom(
    src: MembershipResult, phi: AlgHom, tgt: MembershipResult
) -> GroupHom:
    """Group embedding induced on subreducts by an algebra embedding."""
    tgt_group, tgt_canon = _group_data(tgt)
    src_group, src_canon = _group_data(src)
    if src_canon is None:
        return GroupHom(src_group, tgt_group, (tgt_group.identity,))
    assert tgt_canon is not None
    inverse = [0] * len(src_canon.mapping)
    for x, v in enumerate(src_canon.mapping):
        inverse[v] = x
    mapping = tuple(
        tgt_canon.mapping[phi.mapping[inverse[i]]] for i in range(len(inverse))
    )
    composite = AlgHom(src_canon.target, tgt_canon.target, mapping)
    return restrict_embedding(composite)


def amalgamate(span: Span, query: KClassQuery, max_size: int | None = None) -> Amalgam:
    """Amalgamate a span of class members; the result is again a member."""
    problems = validate_span(span)
    if problems:
        raise ValueError("Invalid span: " + "; ".join(problems))
    results = {}
    for name, algebra in (("A", span.A), ("B", span.B), ("C", span.C)):
        result = member_K(algebra, query)
        if not result.member:
            raise ValueError(f"Span algebra {name} is not in the class: {result.describe()}.")
        results[name] = result

    if results["B"].trivial and results["C"].trivial:
        D = span.B
        psi1 = AlgHom(span.B, D, (0,))
        psi2 = AlgHom(span.C, D, (0,))
        return Amalgam(D, psi1, psi2)

    alpha1 = _leg_group_hom(results["A"], span.phi1, results["B"])
    alpha2 = _leg_group_hom(results["A"], span.phi2, results["C"])
    po = pushout(alpha1, alpha2, max_size=max_size)
    D = build_R(po.group, query.signature, max_size=max_size)

    def lifted_leg(endpoint: FiniteAlgebra, result: MembershipResult, leg: GroupHom) -> AlgHom:
        if result.trivial:
            return AlgHom(endpoint, D, (D.one,))
        assert result.canon is not None
        lifted = lift_embedding(leg, query.signature)
        mapping = tuple(
            lifted.mapping[result.canon.mapping[x]] for x in range(endpoint.size)
        )
        return AlgHom(endpoint, D, mapping)

    psi1 = lifted_leg(span.B, results["B"], po.into_left)
    psi2 = lifted_leg(span.C, results["C"], po.into_right)
    return Amalgam(D, psi1, psi2)


def class_catalog(
    primes: PrimeSet, signature: frozenset[str], max_order: int
) -> list[tuple[str, FiniteAlgebra, FiniteGroup | None]]:
    """Class members with group parts up to max_order, plus the trivial algebra.

    Entries are (label, algebra, group); the trivial algebra carries None.
    """
    members: list[tuple[str, FiniteAlgebra, FiniteGroup | None]] = [
        ("T", trivial_algebra(signature), None)
    ]
    for chain in abelian_group_catalog(max_order):
        group = make_group(chain or [1])
        if not check_sigma(group, primes).passed:
            continue
        members.append((group.describe(), build_R(group, signature), group))
    return members


def _member_embeddings(
    source: tuple[str, FiniteAlgebra, FiniteGroup | None],
    target: tuple[str, FiniteAlgebra, FiniteGroup | None],
    signature: frozenset[str],
) -> list[AlgHom]:
    """Embeddings between catalog members: unit maps out of the trivial algebra
    and lifted group embeddings between expansions (complete by uniqueness)."""
    _, src_alg, src_group = source
    _, tgt_alg, tgt_group = target
    if src_group is None:
        candidate = AlgHom(src_alg, tgt_alg, (tgt_alg.one,))
        return [candidate] if not candidate.violations() else []
    if tgt_group is None:
        return []
    out = []
    for alpha in group_homs(src_group, tgt_group, injective_only=True):
        lifted = lift_embedding(alpha, signature)
        out.append(AlgHom(src_alg, tgt_alg, lifted.mapping))
    return out


def span_catalog(
    primes: PrimeSet,
    signature: frozenset[str],
    max_order: int,
    include_trivial: bool = True,
) -> Iterator[Span]:
    """Every span over the class catalog, in a deterministic order."""
    members = class_catalog(primes, signature, max_order)
    if not include_trivial:
        members = [m for m in members if m[2] is not None]
    emb_cache: dict[tuple[int, int], list[AlgHom]] = {}

    def embeddings(i: int, j: int) -> list[AlgHom]:
        if (i, j) not in emb_cache:
            emb_cache[(i, j)] = _member_embeddings(members[i], members[j], signature)
        return emb_cache[(i, j)]

    for a in range(len(members)):
        for b in range(len(members)):
            first = embeddings(a, b)
            if not first:
                continue
            for c in range(len(members)):
                second = embeddings(a, c)
                for phi1 in first:
                    for phi2 in second:
                        yield Span(
                            members[a][1], members[b][1], members[c][1], phi1, phi2
                        )


def verify_amalgam(span: Span, amalgam: Amalgam, strong: bool = False) -> AmalgamReport:
    """Re-check every amalgam requirement from the raw tables; nothing is trusted."""
    checks: list[CheckItem] = []

    for name, hom in (
        ("phi1", span.phi1),
        ("phi2", span.phi2),
        ("psi1", amalgam.psi1),
        ("psi2", amalgam.psi2),
    ):
        bad = hom.violations()
        checks.append(CheckItem(f"{name}-hom", not bad, bad[0].witness if bad else ()))
        checks.append(CheckItem(f"{name}-injective", hom.is_injective()))

    endpoint_ok = (
        amalgam.psi1.source == span.B
        and amalgam.psi2.source == span.C
        and amalgam.psi1.target == amalgam.D
        and amalgam.psi2.target == amalgam.D
    )
    checks.append(CheckItem("endpoints", endpoint_ok))

    commute_witness: tuple[int, ...] = ()
    commutes = True
    if endpoint_ok:
        for a in range(span.A.size):
            if amalgam.psi1.mapping[span.phi1.mapping[a]] != amalgam.psi2.mapping[
                span.phi2.mapping[a]
            ]:
                commutes = False
                commute_witness = (a,)
                break
    else:
        commutes = False
    checks.append(CheckItem("square-commutes", commutes, commute_witness))

    if strong:
        through = {
            amalgam.psi1.mapping[span.phi1.mapping[a]] for a in range(span.A.size)
        }
        left_image = set(amalgam.psi1.mapping)
        right_image = set(amalgam.psi2.mapping)
        overlap = left_image & right_image
        witness = tuple(sorted(overlap.symmetric_difference(through)))
        checks.append(CheckItem("strong-intersection", overlap == through, witness))

    return AmalgamReport(tuple(checks), strong_checked=strong)
