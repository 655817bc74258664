"""Finite algebra kernel: tables, law checkers, residuals, cones, congruences, homs.

An algebra lives on indices 0..n-1 with binary tables for meet, join,
fusion, and implication, the unit constant, and optional extras (the
pointed constant, bounds, and the unary guard).  Law checking is separate
from construction so that deliberately broken tables can be built and
reported on.
"""

from __future__ import annotations

import dataclasses
from dataclasses import dataclass
from typing import Iterable, Sequence

from .capacity import guard

Table = tuple[tuple[int, ...], ...]

OPTIONAL_SYMBOLS = ("0", "bot", "top", "bang")
CLASS_TAGS = ("crl", "prl", "bounded_prl", "a_algebra", "girale")

_TAG_REQUIRES = {
    "crl": frozenset(),
    "prl": frozenset({"0"}),
    "bounded_prl": frozenset({"0", "bot", "top"}),
    "a_algebra": frozenset({"0", "bot", "top"}),
    "girale": frozenset({"0", "bot", "top", "bang"}),
}


@dataclass(frozen=True)
class FiniteAlgebra:
    size: int
    meet: Table
    join: Table
    mult: Table
    imp: Table
    one: int
    zero: int | None = None
    bot: int | None = None
    top: int | None = None
    bang: tuple[int, ...] | None = None
    names: tuple[str, ...] | None = dataclasses.field(default=None, compare=False)

    def __post_init__(self) -> None:
        n = self.size
        for label in ("meet", "join", "mult", "imp"):
            table = getattr(self, label)
            if len(table) != n or any(len(row) != n for row in table):
                raise ValueError(f"{label} table is not {n}x{n}.")
            if any(not 0 <= v < n for row in table for v in row):
                raise ValueError(f"{label} table entry out of range.")
        for label in ("one", "zero", "bot", "top"):
            v = getattr(self, label)
            if v is not None and not 0 <= v < n:
                raise ValueError(f"Constant {label}={v} out of range.")
        if self.bang is not None:
            if len(self.bang) != n or any(not 0 <= v < n for v in self.bang):
                raise ValueError("bang table malformed.")
        if self.names is not None and len(self.names) != n:
            raise ValueError("names length does not match size.")

    @property
    def signature(self) -> frozenset[str]:
        present = set()
        if self.zero is not None:
            present.add("0")
        if self.bot is not None:
            present.add("bot")
        if self.top is not None:
            present.add("top")
        if self.bang is not None:
            present.add("bang")
        return frozenset(present)

    def leq(self, a: int, b: int) -> bool:
        return self.meet[a][b] == a

    def name_of(self, a: int) -> str:
        if self.names is None:
            return f"e{a}"
        return self.names[a]


@dataclass(frozen=True)
class Violation:
    law: str
    witness: tuple[int, ...]

    def describe(self, algebra: FiniteAlgebra | None = None) -> str:
        if algebra is None:
            args = ",".join(str(w) for w in self.witness)
        else:
            args = ",".join(algebra.name_of(w) for w in self.witness)
        return f"{self.law}({args})"


@dataclass(frozen=True)
class ClassReport:
    passed: bool
    violations: tuple[Violation, ...]

    def summary(self) -> str:
        if self.passed:
            return "pass"
        return "; ".join(v.describe() for v in self.violations[:8])


class NotResiduated(Exception):
    """The fusion table has no largest residual for some argument pair."""

    def __init__(self, a: int, c: int, maximal: tuple[int, ...]) -> None:
        super().__init__(
            f"No maximum b with {a}*b <= {c}; maximal candidates {list(maximal)}."
        )
        self.a = a
        self.c = c
        self.maximal = maximal


def residuals_from_mult(meet: Table, join: Table, mult: Table) -> Table:
    """Implication table with entry (a,c) the largest b such that a*b <= c.

    Raises NotResiduated listing the maximal candidates when no largest
    element exists (the fusion is not residuated against this order).
    """
    n = len(meet)

    def leq(x: int, y: int) -> bool:
        return meet[x][y] == x

    imp_rows = []
    for a in range(n):
        row = []
        for c in range(n):
            candidates = [b for b in range(n) if leq(mult[a][b], c)]
            if not candidates:
                raise NotResiduated(a, c, ())
            best = candidates[0]
            for b in candidates[1:]:
                best = join[best][b]
            if best not in candidates or not leq(mult[a][best], c):
                maximal = tuple(
                    b
                    for b in candidates
                    if all(other == b or not leq(b, other) for other in candidates)
                )
                raise NotResiduated(a, c, maximal)
            row.append(best)
        imp_rows.append(tuple(row))
    return tuple(imp_rows)


def _lattice_violations(A: FiniteAlgebra) -> list[Violation]:
    n = A.size
    out = []
    for label in ("meet", "join"):
        t = getattr(A, label)
        for a in range(n):
            if t[a][a] != a:
                out.append(Violation(f"{label}-idempotent", (a,)))
            for b in range(a + 1, n):
                if t[a][b] != t[b][a]:
                    out.append(Violation(f"{label}-commutative", (a, b)))
        for a in range(n):
            for b in range(n):
                ab = t[a][b]
                for c in range(n):
                    if t[ab][c] != t[a][t[b][c]]:
                        out.append(Violation(f"{label}-associative", (a, b, c)))
    for a in range(n):
        for b in range(n):
            if A.meet[a][A.join[a][b]] != a:
                out.append(Violation("absorption-meet-join", (a, b)))
            if A.join[a][A.meet[a][b]] != a:
                out.append(Violation("absorption-join-meet", (a, b)))
    return out


def _monoid_violations(A: FiniteAlgebra) -> list[Violation]:
    n = A.size
    out = []
    for a in range(n):
        if A.mult[A.one][a] != a or A.mult[a][A.one] != a:
            out.append(Violation("unit", (a,)))
        for b in range(a + 1, n):
            if A.mult[a][b] != A.mult[b][a]:
                out.append(Violation("mult-commutative", (a, b)))
    for a in range(n):
        for b in range(n):
            ab = A.mult[a][b]
            for c in range(n):
                if A.mult[ab][c] != A.mult[a][A.mult[b][c]]:
                    out.append(Violation("mult-associative", (a, b, c)))
    return out


def _residuation_violations(A: FiniteAlgebra) -> list[Violation]:
    n = A.size
    out = []
    for a in range(n):
        for b in range(n):
            ab = A.mult[a][b]
            for c in range(n):
                if A.leq(ab, c) != A.leq(a, A.imp[b][c]):
                    out.append(Violation("residuation", (a, b, c)))
    return out


def _bounds_violations(A: FiniteAlgebra) -> list[Violation]:
    out = []
    for a in range(A.size):
        if A.bot is not None and not A.leq(A.bot, a):
            out.append(Violation("bot-least", (a,)))
        if A.top is not None and not A.leq(a, A.top):
            out.append(Violation("top-greatest", (a,)))
    return out


def _negation_violations(A: FiniteAlgebra) -> list[Violation]:
    assert A.zero is not None
    n = A.size
    out = []
    neg = [A.imp[a][A.zero] for a in range(n)]
    for a in range(n):
        if A.imp[neg[a]][A.zero] != a:
            out.append(Violation("double-negation", (a,)))
    for a in range(n):
        for b in range(n):
            if A.imp[a][neg[b]] != A.imp[b][neg[a]]:
                out.append(Violation("negation-symmetry", (a, b)))
    return out


def _bang_violations(A: FiniteAlgebra) -> list[Violation]:
    assert A.bang is not None
    n = A.size
    out = []
    if A.bang[A.one] != A.one:
        out.append(Violation("G1", (A.one,)))
    for a in range(n):
        if not A.leq(A.bang[a], A.meet[a][A.one]):
            out.append(Violation("G2", (a,)))
        if A.bang[A.bang[a]] != A.bang[a]:
            out.append(Violation("G4", (a,)))
        for b in range(n):
            if A.mult[A.bang[a]][A.bang[b]] != A.bang[A.meet[a][b]]:
                out.append(Violation("G3", (a, b)))
    return out


def check_class(A: FiniteAlgebra, tag: str) -> ClassReport:
    """Report every law violation for the named class; all tuples are scanned."""
    if tag not in CLASS_TAGS:
        raise ValueError(f"Unknown class tag {tag!r}; expected one of {CLASS_TAGS}.")
    missing = _TAG_REQUIRES[tag] - A.signature
    if missing:
        raise ValueError(f"Class {tag!r} needs symbols {sorted(missing)} in the signature.")
    violations = _lattice_violations(A) + _monoid_violations(A) + _residuation_violations(A)
    if tag in ("bounded_prl", "a_algebra", "girale"):
        violations += _bounds_violations(A)
    if tag in ("a_algebra", "girale"):
        violations += _negation_violations(A)
    if tag == "girale":
        violations += _bang_violations(A)
    return ClassReport(not violations, tuple(violations))


def tag_for_signature(signature: Iterable[str]) -> str:
    """The named class matching an optional-symbol set."""
    sig = frozenset(signature)
    if {"0", "bot", "top", "bang"} <= sig:
        return "girale"
    if {"0", "bot", "top"} <= sig:
        return "a_algebra"
    if "0" in sig:
        return "prl"
    return "crl"


def check_signature_laws(A: FiniteAlgebra) -> ClassReport:
    """Core residuated-lattice laws plus the laws of every optional symbol present."""
    violations = _lattice_violations(A) + _monoid_violations(A) + _residuation_violations(A)
    if A.bot is not None or A.top is not None:
        violations += _bounds_violations(A)
    if {"0", "bot", "top"} <= A.signature:
        violations += _negation_violations(A)
    if A.bang is not None:
        violations += _bang_violations(A)
    return ClassReport(not violations, tuple(violations))


class ExpansionError(ValueError):
    def __init__(self, message: str, witness: int) -> None:
        super().__init__(message)
        self.witness = witness


def girale_expand(A: FiniteAlgebra) -> FiniteAlgebra:
    """Add the guard !a = a /\\ 1 when every negative element is idempotent."""
    report = check_class(A, "a_algebra")
    if not report.passed:
        raise ValueError(f"Input fails the bounded involutive laws: {report.summary()}.")
    for a in range(A.size):
        m = A.meet[a][A.one]
        if A.mult[m][m] != m:
            raise ExpansionError(
                f"Element {A.name_of(a)}: its negative part is not idempotent.", a
            )
    bang = tuple(A.meet[a][A.one] for a in range(A.size))
    return dataclasses.replace(A, bang=bang)


def negative_cone(A: FiniteAlgebra) -> FiniteAlgebra:
    """Subalgebra of elements <= 1 with the truncated residual (a -> b) /\\ 1."""
    keep = [a for a in range(A.size) if A.leq(a, A.one)]
    index = {a: i for i, a in enumerate(keep)}

    def restrict(table: Table) -> Table:
        for a in keep:
            for b in keep:
                if table[a][b] not in index:
                    raise ValueError("Negative elements are not closed under the tables.")
        return tuple(tuple(index[table[a][b]] for b in keep) for a in keep)

    imp = tuple(
        tuple(index[A.meet[A.imp[a][b]][A.one]] for b in keep) for a in keep
    )
    names = tuple(A.name_of(a) for a in keep) if A.names is not None else None
    return FiniteAlgebra(
        size=len(keep),
        meet=restrict(A.meet),
        join=restrict(A.join),
        mult=restrict(A.mult),
        imp=imp,
        one=index[A.one],
        names=names,
    )


# --- congruences ---------------------------------------------------------

Partition = tuple[int, ...]


def _canonical(labels: Iterable) -> Partition:
    relabel: dict = {}
    out = []
    for x in labels:
        if x not in relabel:
            relabel[x] = len(relabel)
        out.append(relabel[x])
    return tuple(out)


def _binary_tables(A: FiniteAlgebra) -> tuple[Table, ...]:
    return (A.meet, A.join, A.mult, A.imp)


def _congruence_closure(A: FiniteAlgebra, pairs: Iterable[tuple[int, int]]) -> Partition:
    n = A.size
    parent = list(range(n))

    def find(x: int) -> int:
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    queue: list[tuple[int, int]] = []

    def union(x: int, y: int) -> None:
        rx, ry = find(x), find(y)
        if rx != ry:
            parent[ry] = rx
            queue.append((x, y))

    blocks = n
    for x, y in pairs:
        union(x, y)
    tables = _binary_tables(A)
    while queue:
        # every merged pair must be propagated once, even if later unions
        # already joined the classes by another route
        x, y = queue.pop()
        for t in tables:
            for z in range(n):
                union(t[x][z], t[y][z])
                union(t[z][x], t[z][y])
        if A.bang is not None:
            union(A.bang[x], A.bang[y])
        roots = {find(v) for v in range(n)}
        blocks = len(roots)
        if blocks == 1:
            break
    return _canonical([find(v) for v in range(n)])


def principal_congruence(A: FiniteAlgebra, a: int, b: int) -> Partition:
    return _congruence_closure(A, [(a, b)])


def join_partitions(A: FiniteAlgebra, p: Partition, q: Partition) -> Partition:
    pairs = []
    for labels in (p, q):
        first: dict[int, int] = {}
        for x, lab in enumerate(labels):
            if lab in first:
                pairs.append((first[lab], x))
            else:
                first[lab] = x
    return _congruence_closure(A, pairs)


def meet_partitions(p: Partition, q: Partition) -> Partition:
    return _canonical((p[x], q[x]) for x in range(len(p)))


def refines(p: Partition, q: Partition) -> bool:
    """True iff every p-block is inside a q-block (p <= q in the congruence order)."""
    seen: dict[int, int] = {}
    for x in range(len(p)):
        if p[x] in seen:
            if q[x] != seen[p[x]]:
                return False
        else:
            seen[p[x]] = q[x]
    return True


def is_congruence(A: FiniteAlgebra, labels: Sequence[int]) -> bool:
    n = A.size
    first: dict[int, int] = {}
    for x in range(n):
        lab = labels[x]
        if lab not in first:
            first[lab] = x
            continue
        r = first[lab]
        for t in _binary_tables(A):
            for z in range(n):
                if labels[t[x][z]] != labels[t[r][z]]:
                    return False
                if labels[t[z][x]] != labels[t[z][r]]:
                    return False
        if A.bang is not None and labels[A.bang[x]] != labels[A.bang[r]]:
            return False
    return True


@dataclass(frozen=True)
class CongruenceSet:
    """The complete congruence set of a finite algebra, as canonical partitions."""

    congruences: tuple[Partition, ...]

    @property
    def count(self) -> int:
        return len(self.congruences)

    @property
    def delta(self) -> Partition:
        return min(self.congruences, key=lambda p: -len(set(p)))

    def is_simple(self) -> bool:
        return self.count == 2

    def is_fsi(self) -> bool:
        delta = self.delta
        for p in self.congruences:
            if p == delta:
                continue
            for q in self.congruences:
                if q == delta:
                    continue
                if meet_partitions(p, q) == delta:
                    return False
        return True


def congruence_set(A: FiniteAlgebra, max_size: int = 32) -> CongruenceSet:
    """All congruences, by closing the principal ones under pairwise joins."""
    guard(A.size, "congruence computation", max_size)
    n = A.size
    delta = _canonical(range(n))
    found = {delta}
    for a in range(n):
        for b in range(a + 1, n):
            found.add(principal_congruence(A, a, b))
    worklist = sorted(found)
    while worklist:
        fresh = []
        current = sorted(found)
        for p in worklist:
            for q in current:
                j = join_partitions(A, p, q)
                if j not in found:
                    found.add(j)
                    fresh.append(j)
        worklist = fresh
    return CongruenceSet(tuple(sorted(found)))


# --- products and homomorphisms ------------------------------------------


def direct_product(A: FiniteAlgebra, B: FiniteAlgebra) -> FiniteAlgebra:
    """Componentwise product; optional constants kept when both factors have them."""
    nA, nB = A.size, B.size

    def combine(tA: Table, tB: Table) -> Table:
        rows = []
        for a1 in range(nA):
            for b1 in range(nB):
                row = []
                for a2 in range(nA):
                    ta = tA[a1][a2]
                    for b2 in range(nB):
                        row.append(ta * nB + tB[b1][b2])
                rows.append(tuple(row))
        return tuple(rows)

    def const(cA: int | None, cB: int | None) -> int | None:
        if cA is None or cB is None:
            return None
        return cA * nB + cB

    bang = None
    if A.bang is not None and B.bang is not None:
        bang = tuple(
            A.bang[a] * nB + B.bang[b] for a in range(nA) for b in range(nB)
        )
    names = tuple(
        f"({A.name_of(a)}|{B.name_of(b)})" for a in range(nA) for b in range(nB)
    )
    return FiniteAlgebra(
        size=nA * nB,
        meet=combine(A.meet, B.meet),
        join=combine(A.join, B.join),
        mult=combine(A.mult, B.mult),
        imp=combine(A.imp, B.imp),
        one=A.one * nB + B.one,
        zero=const(A.zero, B.zero),
        bot=const(A.bot, B.bot),
        top=const(A.top, B.top),
        bang=bang,
        names=names,
    )


def factor_partitions(nA: int, nB: int) -> tuple[Partition, Partition]:
    """Kernels of the two projections of an nA x nB product, as partitions."""
    left = tuple(x // nB for x in range(nA * nB))
    right = tuple(x % nB for x in range(nA * nB))
    return _canonical(left), _canonical(right)


@dataclass(frozen=True)
class AlgHom:
    source: FiniteAlgebra
    target: FiniteAlgebra
    mapping: tuple[int, ...]

    def __post_init__(self) -> None:
        if len(self.mapping) != self.source.size:
            raise ValueError("Mapping length does not match source size.")
        for v in self.mapping:
            if not 0 <= v < self.target.size:
                raise ValueError(f"Mapping value {v} out of target range.")

    def __call__(self, a: int) -> int:
        return self.mapping[a]

    def violations(self) -> list[Violation]:
        """Failures to preserve the operations and constants of the common signature."""
        A, B, h = self.source, self.target, self.mapping
        out = []
        if h[A.one] != B.one:
            out.append(Violation("hom-one", (A.one,)))
        for label in ("zero", "bot", "top"):
            a = getattr(A, label)
            b = getattr(B, label)
            if a is not None and b is not None and h[a] != b:
                out.append(Violation(f"hom-{label}", (a,)))
        for label in ("meet", "join", "mult", "imp"):
            tA = getattr(A, label)
            tB = getattr(B, label)
            for x in range(A.size):
                for y in range(A.size):
                    if h[tA[x][y]] != tB[h[x]][h[y]]:
                        out.append(Violation(f"hom-{label}", (x, y)))
        if A.bang is not None and B.bang is not None:
            for x in range(A.size):
                if h[A.bang[x]] != B.bang[h[x]]:
                    out.append(Violation("hom-bang", (x,)))
        return out

    def is_valid(self) -> bool:
        return not self.violations()

    def is_injective(self) -> bool:
        return len(set(self.mapping)) == len(self.mapping)


def identity_alg_hom(A: FiniteAlgebra) -> AlgHom:
    return AlgHom(A, A, tuple(range(A.size)))


def compose_alg_homs(second: AlgHom, first: AlgHom) -> AlgHom:
    if first.target.size != second.source.size:
        raise ValueError("Homs do not compose: size mismatch.")
    return AlgHom(
        first.source, second.target, tuple(second.mapping[v] for v in first.mapping)
    )


def enumerate_homs(
    source: FiniteAlgebra,
    target: FiniteAlgebra,
    injective_only: bool = False,
    max_size: int = 16,
) -> list[AlgHom]:
    """Every map preserving all operations and constants, by guided backtracking."""
    guard(source.size, "hom enumeration", max_size)
    if source.signature != target.signature:
        raise ValueError("Hom enumeration needs matching signatures.")
    n, m = source.size, target.size
    src_tables = _binary_tables(source)
    tgt_tables = _binary_tables(target)
    results: list[AlgHom] = []

    def close(mapping: list[int]) -> bool:
        changed = True
        while changed:
            changed = False
            for x in range(n):
                if mapping[x] < 0:
                    continue
                if source.bang is not None:
                    bx = source.bang[x]
                    v = target.bang[mapping[x]]  # type: ignore[index]
                    if mapping[bx] < 0:
                        mapping[bx] = v
                        changed = True
                    elif mapping[bx] != v:
                        return False
                for y in range(n):
                    if mapping[y] < 0:
                        continue
                    for ts, tt in zip(src_tables, tgt_tables):
                        c = ts[x][y]
                        v = tt[mapping[x]][mapping[y]]
                        if mapping[c] < 0:
                            mapping[c] = v
                            changed = True
                        elif mapping[c] != v:
                            return False
        return True

    def injective_ok(mapping: list[int]) -> bool:
        assigned = [v for v in mapping if v >= 0]
        return len(set(assigned)) == len(assigned)

    def search(mapping: list[int]) -> None:
        work = list(mapping)
        if not close(work):
            return
        if injective_only and not injective_ok(work):
            return
        try:
            x = work.index(-1)
        except ValueError:
            hom = AlgHom(source, target, tuple(work))
            if not hom.violations():
                results.append(hom)
            return
        for v in range(m):
            if injective_only and v in work:
                continue
            child = list(work)
            child[x] = v
            search(child)

    seed = [-1] * n
    seed[source.one] = target.one
    for label in ("zero", "bot", "top"):
        a = getattr(source, label)
        b = getattr(target, label)
        if a is not None:
            seed[a] = b
    search(seed)
    return results


def trivial_algebra(signature: Iterable[str] = ()) -> FiniteAlgebra:
    """The one-element algebra carrying the requested optional symbols."""
    sig = frozenset(signature)
    bad = sig - frozenset(OPTIONAL_SYMBOLS)
    if bad:
        raise ValueError(f"Unknown signature symbols {sorted(bad)}.")
    cell: Table = ((0,),)
    return FiniteAlgebra(
        size=1,
        meet=cell,
        join=cell,
        mult=cell,
        imp=cell,
        one=0,
        zero=0 if "0" in sig else None,
        bot=0 if "bot" in sig else None,
        top=0 if "top" in sig else None,
        bang=(0,) if "bang" in sig else None,
        names=("1",),
    )


# --- serialization --------------------------------------------------------


def algebra_to_json(A: FiniteAlgebra) -> dict:
    data: dict = {
        "size": A.size,
        "signature": sorted(A.signature),
        "meet": [list(r) for r in A.meet],
        "join": [list(r) for r in A.join],
        "mult": [list(r) for r in A.mult],
        "imp": [list(r) for r in A.imp],
        "one": A.one,
    }
    if A.zero is not None:
        data["zero"] = A.zero
    if A.bot is not None:
        data["bot"] = A.bot
    if A.top is not None:
        data["top"] = A.top
    if A.bang is not None:
        data["bang"] = list(A.bang)
    if A.names is not None:
        data["names"] = list(A.names)
    return data


def algebra_from_json(data: dict) -> FiniteAlgebra:
    to_table = lambda rows: tuple(tuple(r) for r in rows)  # noqa: E731
    names = data.get("names")
    return FiniteAlgebra(
        size=data["size"],
        meet=to_table(data["meet"]),
        join=to_table(data["join"]),
        mult=to_table(data["mult"]),
        imp=to_table(data["imp"]),
        one=data["one"],
        zero=data.get("zero"),
        bot=data.get("bot"),
        top=data.get("top"),
        bang=tuple(data["bang"]) if "bang" in data else None,
        names=tuple(names) if names is not None else None,
    )
