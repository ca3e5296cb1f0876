import itertools
import json
from pathlib import Path

import pytest

import subshift_lab as sl

DATA = Path(__file__).resolve().parent.parent / "data"


@pytest.fixture
def sunny():
    return json.loads((DATA / "sunny_side_up.json").read_text())


@pytest.fixture
def poset():
    return json.loads((DATA / "diamond_poset.json").read_text())


def brute_count(tileset, w, h):
    """Count w x h rectangles by trying every filling against the forbidden list."""
    syms = tileset["alphabet"]
    bad = {(f["w"], f["h"], tuple(f["cells"])) for f in tileset["forbidden"]}
    total = 0
    for cells in itertools.product(syms, repeat=w * h):
        ok = True
        for fw, fh, _ in {(b[0], b[1], None) for b in bad}:
            for y in range(h - fh + 1):
                for x in range(w - fw + 1):
                    block = tuple(cells[(y + j) * w + x + i] for j in range(fh) for i in range(fw))
                    if (fw, fh, block) in bad:
                        ok = False
        total += ok
    return total


def test_rank_and_countable(sunny):
    assert sl.rank(sunny) == (2, True)
    assert sl.countable(sunny)


def test_derive_round_trips_into_rank(sunny):
    derived = sl.derive(sunny)
    assert set(derived) == {"alphabet", "states", "edges"}
    assert sl.rank(derived) == (1, True)
    assert sl.rank(sl.derive(derived))[0] == 0


def test_full_shift_is_perfect():
    full = {"alphabet": ["0", "1"], "states": ["s"], "edges": [["s", "0", "s"], ["s", "1", "s"]]}
    assert sl.language_equal(sl.derive(full), full)
    assert not sl.countable(full)


def test_cylinders(sunny):
    assert sl.cylinder_class(sunny, "1") == "Finite"
    assert sl.cylinder_class(sunny, "0") == "Infinite"
    assert sl.cylinder_class(sunny, "11") == "Empty"
    assert sl.cylinder_growth(sunny, "0", 4) == [1, 3, 5, 7, 9]


def test_context_classes_start_with_empty_word(sunny):
    classes, stabilized = sl.context_classes(sunny, 6)
    assert stabilized
    assert classes[0][0] == ""


def test_grid_counts_match_brute_force():
    grid = sl.grid_shift()
    for w, h in [(1, 1), (2, 1), (1, 2), (2, 2)]:
        assert sl.count_admissible(grid, w, h) == brute_count(grid, w, h)


def test_grid_window_and_deleted_diagonal():
    grid = sl.grid_shift()
    window = sl.grid_window(3, 0, 0, 12, 12)
    assert sl.locally_admissible(grid, window)
    header, *rows = window.splitlines()
    broken = [header] + [r.replace("d", "b") for r in rows]
    assert not sl.locally_admissible(grid, "\n".join(broken) + "\n")
    ext = sl.extend(grid, rows, 1)
    assert ext is not None and len(ext) == 14 and all(len(r) == 14 for r in ext)


def test_budget_error_carries_partial_count():
    with pytest.raises(sl.BudgetError) as info:
        sl.count_admissible(sl.grid_shift(), 6, 6, max_states=50)
    assert info.value.partial_count >= 0


def test_bad_input_is_value_error():
    with pytest.raises(ValueError):
        sl.rank({"alphabet": ["0"], "states": ["a"], "edges": [["a", "1", "a"]]})


def test_diamond_approx_derivative():
    diamond = sl.diamond_shift()
    assert not sl.approx_derivative_member(diamond, sl.diamond_core(1, 1), 7, 12)
    assert sl.approx_derivative_member(diamond, sl.diamond_core(2, 2), 9, 10)


def test_chain_direction():
    assert sl.verify_chain(1, 2) == (True, False)
    assert sl.verify_chain(2, 2) == (True, True)


def test_poset_stats_and_embedding(poset):
    stats, minimal = sl.poset_stats(poset)
    assert minimal == ["bottom"]
    assert stats["top"][2] == 5
    assert sorted(stats["top"][1]) == ["m1", "m2"]
    elems = poset["elements"]
    leq = {(a, a) for a in elems} | {tuple(p) for p in poset["leq"]}
    m = sl.verify_embedding(poset)
    for a, ea in enumerate(elems):
        for b, eb in enumerate(elems):
            assert m[a][b] == ((eb, ea) in leq)


def test_phi_is_multiset_count():
    from math import comb

    for n in range(1, 7):
        for r in range(1, 4):
            assert sl.phi(n, r) == comb(n + r - 1, r)


def test_doubling_machine_reaches_powers_of_two():
    trace = sl.simulate(None, 17)
    hits = [values[0] for state, values in trace if state == "A" and values[1] == 0]
    assert hits[:3] == [1, 2, 4]
