"""Certificate checks: class enumeration, exact rederivation of the
coordinate tables, linear algebra, and the two-route numeric evaluation."""

import dataclasses
import shutil
from fractions import Fraction as F

import numpy as np
import pytest

from commonality.certificate import (
    EXPRESSION_KEYS,
    check_derivation,
    class_density_totals,
    class_of_mask,
    conclude_commonality,
    cross_validate_columns,
    data_path,
    derived_coordinates,
    enumerate_partition_classes,
    evaluate_all_expressions,
    evaluate_expression,
    load_certificate,
    verify_linear_algebra,
)
from commonality.density import m
from commonality.graphs import are_isomorphic, catalog, drop_isolated
from commonality.graphons import (
    StepGraphon,
    constant_graphon,
    corner_graphons,
    half,
    random_suite,
)

RATIONAL_W = StepGraphon([[F(1, 3), F(2, 3)], [F(2, 3), F(1, 5)]], [F(1, 4), F(3, 4)])

EXPECTED_SIZES = (2, 20, 60, 30, 40, 20, 60, 120, 10, 120, 120, 120, 30, 20, 60, 120, 60, 12)


def test_partition_classes_cover_everything():
    classes = enumerate_partition_classes()
    assert len(classes) == 18
    assert tuple(c.size for c in classes) == EXPECTED_SIZES
    assert sum(c.size for c in classes) == 1024
    assert [c.index for c in classes if c.self_complementary] == [17, 18]


def test_representatives_are_the_expected_graphs():
    classes = enumerate_partition_classes()
    assert are_isomorphic(classes[16].representative, catalog("bull"))
    assert are_isomorphic(classes[17].representative, catalog("c5"))
    assert are_isomorphic(drop_isolated(classes[8].representative), catalog("k1,4"))
    assert are_isomorphic(drop_isolated(classes[12].representative), catalog("c4"))
    assert are_isomorphic(drop_isolated(classes[7].representative), catalog("p4"))
    assert are_isomorphic(drop_isolated(classes[1].representative), catalog("k2"))


def test_class_assignment_is_complement_invariant():
    owner = class_of_mask()
    assert owner.min() == 1
    for mask in range(1024):
        assert owner[mask] == owner[1023 ^ mask]


def test_derivation_matches_shipped_tables():
    # every one of the 18*16 + 2*18 coordinates, exactly
    assert check_derivation(load_certificate()) == []


def test_target_vector_frozen():
    assert derived_coordinates("vA") == (
        465, 177, 33, 81, -15, -15, 17, 1, -15, -15, -15, -7, -15, -15, -15, -15, -15, -15)
    assert derived_coordinates("vB") == (
        945, 273, 17, 113, -15, -15, 17, -15, -15, -15, -15, -15, -15, -15, -15, -15, -15, -15)


def test_loader_rejects_corrupted_table(tmp_path):
    src = data_path()
    text = open(src).read()
    # bump one matrix entry; the row-sum check has to notice
    bad = text.replace("465 465 45 10 490", "465 466 45 10 490")
    assert bad != text
    p = tmp_path / "tables.txt"
    p.write_text(bad)
    shutil.copy(data_path("certificate_tables.sums"), tmp_path / "tables.sums")
    with pytest.raises(ValueError, match="checksum"):
        load_certificate(str(p), str(tmp_path / "tables.sums"))


def test_loader_rejects_missing_section(tmp_path):
    text = open(data_path()).read().replace("[xB]", "[xC]")
    p = tmp_path / "tables.txt"
    p.write_text(text)
    with pytest.raises(ValueError, match="xB"):
        load_certificate(str(p), data_path("certificate_tables.sums"))


def test_linear_algebra_verifies():
    rep = verify_linear_algebra(load_certificate())
    assert rep.rank_a == 15 and rep.rank_b == 15
    assert rep.ok


def test_linear_algebra_notices_wrong_weights():
    cert = load_certificate()
    tampered = list(cert.weights_a)
    tampered[3] += F(1, 1000)
    bad = dataclasses.replace(cert, weights_a=tuple(tampered))
    rep = verify_linear_algebra(bad)
    assert not rep.weights_match_a
    assert not rep.product_match_a
    assert not rep.ok


def test_everything_vanishes_at_half():
    # the whole certificate is tight at the all-half graphon
    for key in EXPRESSION_KEYS:
        assert evaluate_expression(key, half(), exact=True) == 0


def test_squares_six_and_seven_vanish_on_constants():
    for p in (F(1, 3), F(2, 5), F(9, 10)):
        w = constant_graphon(p)
        assert evaluate_expression(6, w, exact=True) == 0
        assert evaluate_expression(7, w, exact=True) == 0
    # while the neighbouring square does not
    assert evaluate_expression(4, constant_graphon(F(2, 5)), exact=True) == F(5054, 78125)


EXACT_VALUES = {
    1: F(331676587, 12150000),
    3: F(153097, 54000),
    4: F(4969401163, 21870000000),
    6: F(335921, 108000),
    7: F(386731, 324000),
    13: F(21697, 54000),
    15: F(11137, 54000),
    "vA": F(79075423, 3037500),
    "vB": F(134170921, 3037500),
}


def test_exact_values_frozen():
    for key, want in EXACT_VALUES.items():
        assert evaluate_expression(key, RATIONAL_W, exact=True) == want


def test_exact_matches_float():
    for key in EXACT_VALUES:
        ex = float(evaluate_expression(key, RATIONAL_W, exact=True))
        fl = evaluate_expression(key, RATIONAL_W, exact=False)
        assert abs(ex - fl) < 1e-10


def test_excess_columns_agree_with_plain_density_route():
    for w in random_suite(6, 1812) + [half()]:
        got = evaluate_expression(1, w, exact=False)
        want = 480 * (m(catalog("h1"), w) - 2.0 ** -5)
        assert abs(got - want) < 1e-10
        got = evaluate_expression("vB", w, exact=False)
        want = 960 * (m(catalog("h4"), w) - 2.0 ** -6)
        assert abs(got - want) < 1e-10


def test_class_totals_partition_unity():
    for w in random_suite(5, 4) + corner_graphons():
        totals = class_density_totals(w)
        assert abs(totals.sum() - 1.0) < 1e-9
        assert totals.min() > -1e-12


def test_columns_nonnegative_on_suite():
    floor = 0.0
    for w in random_suite(30, 77) + corner_graphons():
        vals = evaluate_all_expressions(w)
        floor = min(floor, float(vals.min()))
    assert floor >= -1e-9


def test_certificate_identity_pointwise():
    cert = load_certificate()
    wa = np.array([float(x) for x in cert.weights_a])
    wb = np.array([float(x) for x in cert.weights_b])
    keep_a = [j for j in range(16) if j != 15]
    keep_b = [j for j in range(16) if j != 14]
    pos_a = EXPRESSION_KEYS.index("vA")
    pos_b = EXPRESSION_KEYS.index("vB")
    for w in random_suite(30, 402) + corner_graphons():
        vals = evaluate_all_expressions(w)
        assert abs(float(vals[keep_a] @ wa) - float(vals[pos_a])) < 1e-8
        assert abs(float(vals[keep_b] @ wb) - float(vals[pos_b])) < 1e-8


def test_cross_validation_routes_agree():
    rep = cross_validate_columns(count=40, seed=913)
    assert rep.route_gap <= 1e-8
    assert rep.direct_gap <= 1e-8
    assert rep.ok


def test_full_conclusion():
    rep = conclude_commonality(count=40, seed=5)
    assert rep.ok
    lines = rep.lines()
    assert "verdict\tok" in lines
    assert rep.target_floor_a >= -1e-9
    assert rep.target_floor_b >= -1e-9
