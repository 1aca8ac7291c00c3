"""Acceptance gate: the nine headline claims, in exact arithmetic.

Each criterion is one test, so a verbose run prints one pass/fail line
per criterion.  Every comparison is exact -- no tolerances anywhere.
"""

from __future__ import annotations

import csv
import io
import json
import random
import time
from fractions import Fraction

from hurwitzq.cli import main
from hurwitzq.decompose import (
    diff_decompositions,
    doublet_search,
    sum_decompositions,
    unit_coverage_report,
)
from hurwitzq.groups import (
    group_q8,
    group_q24,
    group_q48,
    group_q120,
    is_permutable,
    normal_subgroups,
)
from hurwitzq.lattices import (
    conjugation_classes,
    hurwitz_units,
    is_hurwitz_integer,
    parity_survivors,
    trit_quaternions,
    unit_named,
)
from hurwitzq.particles import (
    check_vertex,
    color_violating_control,
    electric_charge,
    fermion_number,
    particle,
    registry,
    vertex_catalog,
    verify_parity_rule,
)
from hurwitzq.quaternions import ONE, Quaternion, parse_quaternion
from hurwitzq.scalars import QuadScalar
from hurwitzq.verify import TABLE1_EXPECTED, TABLE2_EXPECTED


def report(criterion: int, summary: str) -> None:
    print(f"criterion {criterion}: PASS - {summary}")


def test_criterion_1_particle_table_reproduction():
    rows = registry()
    assert len(rows) == 28
    for p in rows:
        expected_f, expected_z = TABLE1_EXPECTED[p.name]
        assert fermion_number(p.charge) == expected_f, p.name
        assert electric_charge(p.charge) == expected_z, p.name
        assert p.electric_charge == p.baryon_number / 2 + p.isospin_z, p.name
    report(1, "28 rows recompute exactly; Z = N/2 + I_z holds for every row")


def test_criterion_2_unit_table_reproduction():
    units = hurwitz_units()
    assert len(units) == 24
    for atom in units:
        expected_f, expected_z = TABLE2_EXPECTED[atom.name]
        assert fermion_number(atom.value) == expected_f, atom.name
        assert electric_charge(atom.value) == expected_z, atom.name
    assert TABLE2_EXPECTED["h2"] == (Fraction(1, 2), Fraction(1, 6))
    report(2, "24 Hurwitz units with exact quantum numbers")


def test_criterion_3_expression_table_reproduction():
    expected_doublets = {
        ("nu", "e-"): ("h8", "h1"),
        ("u_R", "d_R"): ("h5", "h1"),
        ("u_B", "d_B"): ("h3", "h1"),
        ("u_G", "d_G"): ("h2", "h1"),
    }
    for (up, down), pair in expected_doublets.items():
        matches = doublet_search(particle(up).charge, particle(down).charge)
        assert [(n.name, m.name) for n, m in matches] == [pair], (up, down)

    h1, h8 = unit_named("h1").value, unit_named("h8").value
    assert h1 - h8 == particle("W+").charge
    assert h8 - h1 == particle("W-").charge
    w_pairs = {(a.name, b.name) for a, b in diff_decompositions(particle("W+").charge).pairs}
    assert ("h1", "h8") in w_pairs

    gluon_pairs = {
        (a.name, b.name)
        for a, b in diff_decompositions(particle("g_BbarG").charge).pairs
    }
    assert ("h2", "h3") in gluon_pairs
    assert ("h6", "h7") in gluon_pairs

    assert unit_coverage_report().complete
    report(3, "doublets unique, W and gluon identities hold, all 24 units covered")


def test_criterion_4_parity_rule():
    checks = verify_parity_rule()
    assert len(checks) == 24
    assert all(c.passed for c in checks)
    assert len(parity_survivors()) == 37
    assert len(conjugation_classes(trit_quaternions())) == 42
    report(4, "24 nonzero charges pass; 37 of 81 survive; 42 conjugation classes")


def test_criterion_5_vertex_conservation():
    catalog = vertex_catalog()
    assert len(catalog) >= 20
    for vertex in catalog:
        assert check_vertex(vertex).passed, vertex.label
    assert not check_vertex(color_violating_control()).passed
    report(5, f"{len(catalog)} vertices conserve exactly; color-violating control fails")


def test_criterion_6_group_structure():
    group_q120.cache_clear()  # time the full construction, not a cached copy
    started = time.perf_counter()
    q120 = group_q120()
    assert q120.order == 120
    assert q120.is_latin_square()
    assert sorted(len(c) for c in q120.conjugacy_classes()) == [
        1, 1, 12, 12, 12, 12, 20, 20, 30,
    ]
    assert [g.order for g in normal_subgroups(q120)] == [1, 2, 120]
    elapsed = time.perf_counter() - started
    assert elapsed < 10.0, f"Q120 checks took {elapsed:.1f}s"

    q8, q24, q48 = group_q8(), group_q24(), group_q48()
    assert (q8.order, q24.order, q48.order) == (8, 24, 48)
    assert q8.is_latin_square() and q24.is_latin_square() and q48.is_latin_square()
    assert is_permutable(q8, q24)
    assert is_permutable(q8, q48)
    assert is_permutable(q24, q48)
    report(6, f"orders 8/24/48/120, normality as claimed; Q120 checks in {elapsed:.1f}s")


def test_criterion_7_hurwitz_ring_closure():
    units = [atom.value for atom in hurwitz_units()]
    unit_set = set(units)
    products = 0
    for a in units:
        for b in units:
            assert a * b in unit_set
            products += 1
    assert products == 576

    rng = random.Random(1746)

    def random_hurwitz() -> Quaternion:
        if rng.random() < 0.5:
            parts = [Fraction(rng.randint(-9, 9)) for _ in range(4)]
        else:
            parts = [Fraction(2 * rng.randint(-5, 4) + 1, 2) for _ in range(4)]
        return Quaternion(*parts)

    for _ in range(1000):
        p, q = random_hurwitz(), random_hurwitz()
        assert is_hurwitz_integer(p + q)
        assert is_hurwitz_integer(p * q)
    report(7, "576 unit products closed; 1000 random sums and products stay integral")


def test_criterion_8_decomposition_multiplicities():
    expected_sums = {
        "nu": 4,
        "e-": 1,
        "u_R": 1,
        "u_B": 1,
        "u_G": 1,
        "d_R": 3,
        "d_B": 3,
        "d_G": 3,
    }
    for name, multiplicity in expected_sums.items():
        assert sum_decompositions(particle(name).charge).multiplicity == multiplicity, name
    for name in ("W+", "W-"):
        assert diff_decompositions(particle(name).charge).multiplicity == 2, name
    for name in ("g_BbarG", "g_GbarR", "g_RbarB", "g_GbarB", "g_RbarG", "g_BbarR"):
        assert diff_decompositions(particle(name).charge).multiplicity == 6, name
    report(8, "sum multiplicities 4/1/1/3 and difference multiplicities 2/6 as frozen")


def test_criterion_9_determinism_and_round_trip(capsys):
    assert main(["verify"]) == 0
    first = capsys.readouterr().out
    assert main(["verify"]) == 0
    second = capsys.readouterr().out
    assert first == second and first

    for which in ("1", "2", "3"):
        assert main(["tables", which, "--format", "csv"]) == 0
        csv_rows = list(csv.reader(io.StringIO(capsys.readouterr().out)))
        assert main(["tables", which, "--format", "json"]) == 0
        data = json.loads(capsys.readouterr().out)
        assert csv_rows[0] == data["payload"]["columns"]
        assert csv_rows[1:] == data["payload"]["rows"]

    rng = random.Random(90210)
    for _ in range(1000):
        d = rng.choice((1, 2, 5))
        if d == 1:
            parts = [
                QuadScalar(Fraction(rng.randint(-9, 9), rng.randint(1, 8)))
                for _ in range(4)
            ]
        else:
            parts = [
                QuadScalar(
                    Fraction(rng.randint(-9, 9), rng.randint(1, 8)),
                    Fraction(rng.randint(-9, 9), rng.randint(1, 8)),
                    d,
                )
                for _ in range(4)
            ]
        q = Quaternion(*parts)
        assert parse_quaternion(str(q)) == q
    assert parse_quaternion(str(ONE)) == ONE
    report(9, "verify is byte-identical; csv/json agree; 1000 parse round-trips hold")
