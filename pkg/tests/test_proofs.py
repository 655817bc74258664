import pytest

from girale.formula import free_variables, parse, render
from girale.proofs import (
    SCHEMES,
    SYSTEMS,
    HilbertSystem,
    Sequent,
    SequentProof,
    Step,
    check_derivation,
    extract_craig,
    load_hilbert_corpus,
    match_axiom,
    parse_sequent,
    prove_sequent,
    sequent_to_formula,
    steps_from_json,
    steps_to_json,
    validate_proof,
)
from girale.semantics import valid

LL = SYSTEMS["LL"]
RLE = SYSTEMS["RLe"]


def test_match_axiom_examples():
    hit = match_axiom(parse("(y * z) -> (y * z)"), SCHEMES["A1"])
    assert hit == {"alpha": parse("y * z")}
    assert match_axiom(parse("x -> y"), SCHEMES["A1"]) is None
    hit = match_axiom(parse("!(x -> y) -> (!x -> !y)"), SCHEMES["!K"])
    assert hit == {"alpha": parse("x"), "beta": parse("y")}


def test_match_axiom_requires_consistent_bindings():
    assert match_axiom(parse("x /\\ y -> z"), SCHEMES["A2"]) is None


def test_check_derivation_mp():
    steps = (
        Step(parse("1"), "A12"),
        Step(parse("1 -> (x -> x)"), "A13"),
        Step(parse("x -> x"), "mp", (1, 2)),
    )
    assert check_derivation(steps, RLE).valid


def test_check_derivation_premise_and_nec():
    steps = (
        Step(parse("x"), "premise", (0,)),
        Step(parse("!x"), "nec", (1,)),
    )
    report = check_derivation(steps, LL, [parse("x")])
    assert report.valid


def test_check_derivation_rejects_wrong_axiom():
    report = check_derivation((Step(parse("x -> y"), "A1"),), RLE)
    assert not report.valid
    assert report.step == 1
    assert "no matching substitution" in report.reason


def test_check_derivation_rejects_forward_refs():
    steps = (
        Step(parse("x -> x"), "mp", (1, 2)),
        Step(parse("1"), "A12"),
    )
    report = check_derivation(steps, RLE)
    assert not report.valid and report.step == 1


def test_check_derivation_language_guard():
    report = check_derivation((Step(parse("!x -> x"), "!T"),), RLE)
    assert not report.valid
    assert "language" in report.reason


def test_system_coherence():
    with pytest.raises(ValueError):
        HilbertSystem("broken", ("A1",), frozenset({"mp", "nec"}), frozenset())
    with pytest.raises(ValueError):
        HilbertSystem("broken", ("A1", "!T"), frozenset({"mp"}), frozenset({"bang"}))


def test_extra_axioms():
    system = HilbertSystem(
        "RLe+",
        tuple(f"A{i}" for i in range(1, 14)),
        frozenset({"mp", "adj"}),
        frozenset(),
        extra_axioms=(("weaken", parse("alpha -> (beta -> alpha)")),),
    )
    steps = (Step(parse("x -> (y * z -> x)"), "weaken"),)
    assert check_derivation(steps, system).valid


def test_corpus_loads_and_checks():
    corpus = load_hilbert_corpus()
    assert len(corpus) >= 50
    for entry in corpus:
        report = check_derivation(entry["steps"], SYSTEMS[entry["system"]])
        assert report.valid, (entry["name"], report.describe())
    rules = {step.rule for entry in corpus for step in entry["steps"]}
    assert {"mp", "adj", "nec"} <= rules
    assert set(SCHEMES) <= rules


def test_steps_json_round_trip():
    corpus = load_hilbert_corpus()
    steps = corpus[0]["steps"]
    assert steps_from_json(steps_to_json(steps)) == steps


def test_parse_sequent():
    seq = parse_sequent("x, x -> y => y")
    assert len(seq.antecedent) == 2
    assert seq.succedent == parse("y")
    assert parse_sequent("0 =>").succedent is None
    assert parse_sequent("=> 1").antecedent == ()
    with pytest.raises(ValueError):
        parse_sequent("x, y")


def test_prove_sequent_axioms():
    proof = prove_sequent(parse_sequent("x => x"), 2)
    assert proof is not None and proof.rule == "id"
    proof = prove_sequent(parse_sequent("=> 1"), 2)
    assert proof is not None and proof.rule == "1r"


def test_prove_sequent_fusion():
    proof = prove_sequent(parse_sequent("x, y => x * y"), 4)
    assert proof is not None
    assert proof.rule == "*r"
    assert {child.rule for child in proof.children} == {"id"}
    assert not validate_proof(proof)


def test_prove_sequent_no_contraction():
    for bound in (4, 8, 12):
        assert prove_sequent(parse_sequent("x => x * x"), bound) is None


def test_prove_requires_fragment():
    with pytest.raises(ValueError):
        prove_sequent(parse_sequent("!x => x"), 4)
    with pytest.raises(ValueError):
        prove_sequent(parse_sequent("x => top"), 4)
    with pytest.raises(ValueError):
        prove_sequent(parse_sequent("x => x"), 0)


def test_exchange_flag_matters():
    swapped = parse_sequent("x * y => y * x")
    assert prove_sequent(swapped, 10) is not None
    assert prove_sequent(swapped, 10, with_exchange=False) is None
    straight = parse_sequent("x * y => x * y")
    assert prove_sequent(straight, 10, with_exchange=False) is not None


def test_sequence_mode_left_residual():
    # with -> as the left residual, the argument must sit immediately left
    assert prove_sequent(parse_sequent("x, x -> y => y"), 8, with_exchange=False) is not None
    assert prove_sequent(parse_sequent("x -> y, x => y"), 8, with_exchange=False) is None


def test_zero_rules():
    assert prove_sequent(parse_sequent("0 =>"), 2) is not None
    assert prove_sequent(parse_sequent("x, x -> 0 =>"), 6) is not None
    assert prove_sequent(parse_sequent("x, x -> 0 => 0"), 6) is not None


def test_validate_proof_rejects_corruption():
    proof = prove_sequent(parse_sequent("x, y => x * y"), 4)
    corrupted = SequentProof(proof.sequent, "id", (), None)
    assert validate_proof(corrupted)
    relabeled = SequentProof(proof.sequent, "/\\r", proof.children, proof.principal)
    assert validate_proof(relabeled)


def test_returned_proofs_revalidate():
    fixtures = [
        "x, y -> z, x -> y => z",
        "x * (y \\/ z) => (x * y) \\/ (x * z)",
        "x => x /\\ x",
    ]
    for text in fixtures:
        proof = prove_sequent(parse_sequent(text), 10)
        assert proof is not None
        assert not validate_proof(proof)


def test_extract_craig_modus_ponens():
    proof = prove_sequent(parse_sequent("x, x -> y => y"), 8)
    result = extract_craig(proof, {"x"}, {"x", "y"})
    assert result.left_proved and result.right_proved and result.semantically_valid
    assert free_variables(result.interpolant) <= {"x"}


def test_extract_craig_identity():
    proof = prove_sequent(parse_sequent("x => x"), 2)
    result = extract_craig(proof, {"x"}, {"x"})
    assert render(result.interpolant) == "x"
    assert result.left_proved and result.right_proved


def test_extract_craig_disjoint_antecedents():
    proof = prove_sequent(parse_sequent("x, y => x * y"), 4)
    result = extract_craig(proof, {"x"}, {"y"})
    assert free_variables(result.interpolant) <= {"x"}
    assert result.left_proved and result.right_proved and result.semantically_valid


def test_extract_craig_unsplittable():
    proof = prove_sequent(parse_sequent("x * y, z => z * (x * y)"), 8)
    with pytest.raises(ValueError):
        extract_craig(proof, {"x"}, {"z"})


def test_sequent_hilbert_semantic_agreement(girales_upto_6):
    """Sequent-provable theorems match checkable derivations and validity."""
    corpus = {entry["name"]: entry for entry in load_hilbert_corpus()}
    paired = {
        "mp-identity": "=> x -> x",
        "identity-fusion-instance": "=> x * y -> x * y",
        "meet-reflexive": "=> x /\\ y -> x /\\ y",
        "axiom-A2": "=> x /\\ y -> x",
        "axiom-A10": "=> x -> (y -> x * y)",
    }
    for name, sequent_text in paired.items():
        entry = corpus[name]
        assert check_derivation(entry["steps"], SYSTEMS[entry["system"]]).valid
        proof = prove_sequent(parse_sequent(sequent_text), 10)
        assert proof is not None, name
        theorem = entry["steps"][-1].formula
        for algebra in girales_upto_6:
            assert valid(algebra, theorem).holds


def test_sequent_to_formula():
    assert render(sequent_to_formula(parse_sequent("x, y => z"))) == "x * y -> z"
    assert render(sequent_to_formula(parse_sequent("x =>"))) == "x -> 0"
    assert render(sequent_to_formula(parse_sequent("=> x"))) == "1 -> x"
