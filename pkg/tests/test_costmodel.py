"""Cost model: closed forms against the recursion and the pinned tables."""

import io

import pytest

from quickfourier import costmodel


def test_pinned_tables_match_formulas():
    for N, counts in costmodel.CLASSICAL_CDFT_COUNTS.items():
        assert costmodel.predicted_cost("classical", "cdft", N) == counts
    for N, counts in costmodel.IMPROVED_CDFT_COUNTS.items():
        assert costmodel.predicted_cost("improved", "cdft", N) == counts


@pytest.mark.parametrize("algorithm", ["classical", "improved"])
def test_predictions_match_measurements_cdft(algorithm):
    for p in range(1, 12):
        N = 1 << p
        pred = costmodel.predicted_cost(algorithm, "cdft", N)
        meas = costmodel.measured_cost(algorithm, "cdft", N)
        assert pred == meas, f"{algorithm} cdft N={N}: {pred} != {meas}"


@pytest.mark.parametrize("transform", ["rdft", "dct0", "dst0"])
def test_predictions_match_measurements_components(transform):
    start = 2 if transform != "dst0" else 4
    N = start
    while N <= 1024:
        pred = costmodel.predicted_cost("improved", transform, N)
        meas = costmodel.measured_cost("improved", transform, N)
        assert pred == meas, f"improved {transform} N={N}: {pred} != {meas}"
        N *= 2


def test_classical_small_size_anchors():
    # the closed form only holds from eight points; below that the
    # recursion's own counts are pinned
    assert costmodel.predicted_cost("classical", "cdft", 2) == (4, 0)
    assert costmodel.predicted_cost("classical", "cdft", 4) == (16, 0)
    assert costmodel.predicted_cost("improved", "cdft", 2) == (4, 0)


def test_validation():
    with pytest.raises(ValueError):
        costmodel.predicted_cost("classical", "rdft", 16)
    with pytest.raises(ValueError):
        costmodel.predicted_cost("improved", "cdft", 12)
    with pytest.raises(ValueError):
        costmodel.predicted_cost("improved", "dst0", 2)
    with pytest.raises(ValueError):
        costmodel.predicted_cost("fast", "cdft", 16)
    with pytest.raises(ValueError):
        costmodel.measured_cost("improved", "dft", 16)


def test_cost_rows_and_csv():
    rows = costmodel.cost_table("improved", "cdft", sizes=[16, 64])
    assert [r.N for r in rows] == [16, 64]
    assert all(r.consistent for r in rows)
    assert rows[0].flops_pred == 168
    assert rows[1].flops_meas == 1160

    buf = io.StringIO()
    costmodel.write_cost_csv(rows, buf)
    lines = buf.getvalue().strip().splitlines()
    assert lines[0] == ("algorithm,transform,N,adds_pred,adds_meas,"
                        "muls_pred,muls_meas,flops_pred,flops_meas")
    assert lines[1] == "improved,cdft,16,148,148,20,20,168,168"
    assert lines[2] == "improved,cdft,64,964,964,196,196,1160,1160"


def test_default_size_sweep():
    rows = costmodel.cost_table("classical")
    assert [r.N for r in rows] == [1 << p for p in range(2, 12)]
    assert all(r.consistent for r in rows)
