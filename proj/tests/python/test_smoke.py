import json

import pytest

import braidcover as bc


def test_word_basics():
    w = bc.Word(3, [1, 2, -1])
    assert w.strands == 3
    assert w.letters == [1, 2, -1]
    assert len(w) == 3
    assert w.inverse().letters == [1, -2, -1]
    assert (w * w.inverse()).strands == 3
    assert bc.free_reduce(w * w.inverse()) == bc.identity(3)


def test_word_validation():
    with pytest.raises(ValueError):
        bc.Word(3, [5])
    with pytest.raises(ValueError):
        bc.Word(0, [])


def test_parse():
    assert bc.parse("beta(3,5)", strands=3) == bc.beta(3, 5)
    assert bc.parse("d", strands=4) == bc.delta(4)
    assert bc.parse("(s1 s2)^2", strands=3) == bc.Word(3, [1, 2, 1, 2])
    with pytest.raises(ValueError):
        bc.parse("s1 (", strands=3)


def test_invariant_helpers():
    w = bc.beta(3, 5)
    assert bc.exponent_sum(w) == 18
    assert bc.components(w) == 1
    assert bc.is_positive(w)
    assert bc.cycle_type(w) == [3]
    assert bc.components(bc.full_twist(3)) == 3


def test_burau_matrices():
    m = bc.burau_at_minus1(bc.delta(3))
    assert m == [[0, 1], [-1, 1]]
    sym = bc.burau(bc.Word(2, [1]))
    # 1x1 matrix [-t] as (exponent, coefficient) pairs.
    assert sym == [[[(1, -1)]]]


def test_alexander_and_determinant():
    trefoil = bc.Word(3, [1, 2, 1, 2])
    assert bc.alexander(trefoil) == "t - 1 + t^-1"
    assert bc.alexander_pairs(trefoil) == [(-1, 1), (0, -1), (1, 1)]
    assert bc.knot_determinant(trefoil) == 3
    assert bc.h1_order(trefoil) == 3
    assert bc.knot_determinant(bc.beta(3, 5)) == 7
    with pytest.raises(ValueError):
        bc.alexander(bc.full_twist(3))


def test_big_values_are_python_ints():
    # beta(13, 15) has determinant 4*36 + 24 - 1 with k = 6; the binding must
    # hand back exact ints, not floats.
    d = bc.knot_determinant(bc.beta(13, 15))
    assert isinstance(d, int)
    assert d == 4 * 36 + 4 * 6 - 1


def test_ordering():
    assert bc.dehornoy_floor(bc.beta(3, 4)) == 3
    assert bc.compare(bc.delta(3), bc.identity(3)) == 1
    assert bc.compare(bc.identity(3), bc.delta(3)) == -1
    r = bc.handle_reduce(bc.Word(3, [1, -1]))
    assert r["sign"] == 0
    assert r["word"].letters == []


def test_fdtc():
    e = bc.fdtc(bc.beta(3, 3))
    assert e["pinned"] == "2"
    h = bc.bh_fdtc(bc.beta(3, 3))
    assert h["pinned"] == "1"
    d = bc.fdtc(bc.delta(3))
    assert d["pinned"] == "1/3"


def test_markov():
    w = bc.Word(2, [1, 1, 1])
    up = bc.stabilize(w, 1)
    assert up.strands == 3
    assert bc.destabilize(up) == w
    assert bc.destabilize(bc.Word(3, [1])) is None


def test_reports_are_plain_data():
    page = bc.page(5)
    assert page == {
        "strands": 5,
        "genus": 2,
        "boundary_components": 1,
        "euler_characteristic": -3,
    }

    report = bc.open_book_report(bc.beta(3, 3))
    assert report["binding_connected"] is True
    assert report["stein_witness"] is True
    assert report["h1_order"] == "3"
    assert report["fdtc_cover"]["pinned"] == "1"
    json.dumps(report)

    rows = bc.determinant_table(2)
    assert [r["pass"] for r in rows] == [True, True]
    assert rows[0]["det_beta_n_m"] == "7"

    pair = bc.open_book_pair_report(1)
    assert pair["pass"] is True
    assert pair["fdtc_consistent"] is True


def test_step_limit_maps_to_runtime_error():
    w = bc.Word(4, [1, 2, 3, -1, -2, -3] * 3)
    with pytest.raises(RuntimeError):
        bc.handle_reduce(w, step_limit=2)
