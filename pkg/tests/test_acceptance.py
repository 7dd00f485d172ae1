"""Acceptance gate: the nine headline checks, one printed line each.

Each test prints "ACCEPTANCE <n> <name>: PASS" on success; any assertion
failure marks the corresponding criterion red.
"""

import json

from fuchs import classify, verifier


def _passed(n: int, name: str) -> None:
    print(f"ACCEPTANCE {n} {name}: PASS")


def test_acceptance_1_classification_table():
    """Every row of the classification table is rebuilt and re-verified,
    with Mersenne instantiations 3, 7, 31, 127 and Fermat 5, 17, 257."""
    report = verifier.verify_classification_table()
    failing = [c for c in report.cases if not c["passed"]]
    assert report.passed, failing
    labels = {c.get("witness") for c in report.cases}
    assert {"Z", "Z[i]", "F4", "F8", "F32", "F128", "F9", "F257",
            "F257 x F2"} <= labels
    assert len(report.cases) == 21
    _passed(1, "classification-table")


def test_acceptance_2_truncated_polynomial_units():
    """|F_2[x]/(x^t)*| = 2^(t-1) for t = 1..8, with the two distinct
    involutions 1 + x^(t-1), 1 + x^(t-2) whenever t >= 4."""
    report = verifier.verify_char2_quotients()
    assert report.passed, [c for c in report.cases if not c["passed"]]
    assert [c["unit_count"] for c in report.cases] == [2**t for t in range(8)]
    _passed(2, "char-2-unit-counts")


def test_acceptance_3_char0_obstruction():
    """Exact char-0 identities: the inverse computation mod x^4 + 1, the
    zeta_8 modulus 3 + 2*sqrt(2), and irreducibility of x^4 + 1 over Q."""
    report = verifier.verify_char0_obstruction()
    assert report.passed, [c for c in report.cases if not c["passed"]]
    _passed(3, "char-0-obstruction")


def test_acceptance_4_cyclotomic_cases():
    """All eight cyclotomic quotients: enumerated unit structure equals the
    field-product prediction."""
    report = verifier.verify_cyclotomic_cases()
    assert report.passed, [c for c in report.cases if not c["passed"]]
    assert len(report.cases) == 8
    _passed(4, "cyclotomic-decompositions")


def test_acceptance_5_power_equation_scan():
    """q^m - 1 = p^r for prime q <= 50, m <= 30: every solution matches the
    Fermat/Mersenne dichotomy, no exceptions."""
    report = verifier.verify_lemma_power_equations()
    assert report.passed, report.cases
    assert report.cases[0]["exceptions"] == []
    _passed(5, "power-equation-dichotomy")


def test_acceptance_6_bounded_census():
    """Census of all rings of order <= 16: no characteristic-4 ring has
    unit group C_8, and the indecomposable unit groups seen are exactly
    C_1, C_2, C_3, C_4, C_7, C_8."""
    char4 = verifier.verify_char4_no_C8(order_bound=16)
    assert char4.passed, [c for c in char4.cases if not c["passed"]]
    census = verifier.verify_census_predictions(order_bound=16)
    assert census.passed, census.cases
    assert census.cases[0]["census"] == [1, 2, 3, 4, 7, 8]
    _passed(6, "bounded-ring-census")


def test_acceptance_7_torsion_free_sampling():
    """10^4 sampled pairs per property over Z, Z^2 (lex), and Z[1/2]:
    order axioms hold and F_2[G] has only the trivial units."""
    report = verifier.verify_ordered_group_properties(seed=0, trials=10_000)
    assert report.passed, [c for c in report.cases if not c["passed"]]
    names = {c["case"].split(":")[0] for c in report.cases}
    assert names == {"Z", "Z^2", "Z[1/2]"}
    _passed(7, "torsion-free-sampling")


def test_acceptance_8_specialization_pairs():
    """Realizability is not inherited by subgroups: (C_256, C_128) and
    (C_10, C_5) are confirmed counterexample pairs."""
    pairs = classify.specialization_counterexamples(256)
    assert (256, 128) in pairs
    assert (10, 5) in pairs
    report = verifier.verify_specialization()
    assert report.passed
    _passed(8, "specialization-counterexamples")


def test_acceptance_9_deterministic_output():
    """Census JSON is byte-identical across worker counts and repeat runs."""
    blobs = []
    for workers in (1, 2, 4):
        entries = verifier.enumerate_rings((4, 2, 2), workers=workers)
        blobs.append(json.dumps([e.to_json() for e in entries],
                                sort_keys=True, separators=(",", ":")))
    assert blobs[0] == blobs[1] == blobs[2]
    repeat = json.dumps(
        [e.to_json() for e in verifier.enumerate_rings((4, 2, 2), workers=1)],
        sort_keys=True, separators=(",", ":"))
    assert repeat == blobs[0]
    verdicts = [
        json.dumps(classify.verdict_json(
            classify.cyclic(8), None, classify.realizable_cyclic(2, 3)),
            sort_keys=True, separators=(",", ":"))
        for _ in range(3)
    ]
    assert len(set(verdicts)) == 1
    _passed(9, "deterministic-output")
