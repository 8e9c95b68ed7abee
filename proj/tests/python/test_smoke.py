from fractions import Fraction

import pytest

import tauenum


def test_level_five_row():
    rows = tauenum.enumerate(5)
    assert rows[-1] == tauenum.LevelSummary(5, 16, 18, 19)
    assert [r.level for r in rows] == [1, 2, 3, 4, 5]


def test_matches_reference_through_level_12():
    rows = tauenum.enumerate(12, threads=2)
    ref = tauenum.reference_table()[:12]
    assert rows == ref


def test_visitor_sees_admissible_tau_in_order():
    seen = []
    tauenum.enumerate(4, visitor=lambda tau, s, t: seen.append(tuple(tau)))
    level3 = [t for t in seen if len(t) == 3]
    assert level3 == [(0, 0, 0), (0, 0, 1), (0, 1, 0), (0, 1, 2)]
    assert all(tauenum.is_admissible(list(t)) for t in seen)


def test_brute_force_agrees():
    assert tauenum.brute_force_enumerate(7) == tauenum.enumerate(7)
    with pytest.raises(ValueError):
        tauenum.brute_force_enumerate(11)


def test_single_tau_counts():
    tau = [0, 1, 0, 1, 0]
    assert tauenum.spines(tau) == 2
    assert tauenum.twist_factor(tau) == 1
    assert tauenum.top(tau) == 2
    assert tauenum.markers(tau) == [2, 4]
    assert tauenum.marked_levels(tau) == [0, 1]
    assert tauenum.twist_factor([0, 0, 1, 2, 0]) == 2
    assert tauenum.moduli_sum([0, 1, 2, 0], 2) == Fraction(3, 4)
    assert tauenum.twist_period([0, 1, 2, 0], 2) == 4


def test_admissibility_and_extensions():
    assert tauenum.check_admissible([0, 2]) == (False, "B", 1)
    assert tauenum.check_admissible([0, 1, 1]) == (False, "D", 2)
    ext = tauenum.admissible_extensions([0, 0, 1])
    assert [(e["value"], e["spine_factor"]) for e in ext] == [(2, 1), (1, 1)]
    td = tauenum.tail_decomposition([0, 0, 1])
    assert td["k"] == 1 and td["images"] == [1, 0] and td["steps"] == [1, 0]
    with pytest.raises(ValueError):
        tauenum.spines([0, 1, 1])


def test_grid_roundtrip():
    text = tauenum.tau_to_grid([0, 1, 0])
    assert text == "1111\n110\n10\n1\n"
    assert tauenum.grid_to_tau(text) == [0, 1, 0]
    assert tauenum.validate_grid(text) == []
    bad = "1111\n111\n10\n1\n"  # tau = 0,1,1
    assert tauenum.validate_grid(bad)
    with pytest.raises(ValueError):
        tauenum.grid_to_tau(bad)


def test_ratios_and_tree():
    rows = tauenum.enumerate(6)
    assert tauenum.ratios(rows)[0] == (2, "2.000")
    dot = tauenum.export_prefix_tree(2)
    assert dot.startswith("digraph")
    assert dot.count("->") == 2
