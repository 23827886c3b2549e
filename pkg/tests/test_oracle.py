import pytest

from conftest import corpus
from dwcount.errors import WorkLimitExceeded
from dwcount.oracle import approx_dw_float, brute_count_homs, cross_validate
from dwcount.seifert import SeifertData, count_homs


def test_brute_examples():
    assert brute_count_homs(SeifertData(0, ((1, 2),)), 2) == 2
    assert brute_count_homs(SeifertData(1), 2) == 8
    for M in corpus(5, seed=4):
        assert brute_count_homs(M, 1) == 1


def test_brute_limit():
    with pytest.raises(WorkLimitExceeded):
        brute_count_homs(SeifertData(0, ((1, 1),) * 4), 10, max_tuples=1000)


def test_float_examples():
    assert abs(approx_dw_float(SeifertData(0, ((1, 1),)), 3, 1) - 1 / 3) < 1e-9
    assert abs(approx_dw_float(SeifertData(1), 2, 1) - 4) < 1e-9
    assert abs(approx_dw_float(SeifertData(2, ((3, 1),)), 1, 0) - 1) < 1e-12


def test_float_limit():
    with pytest.raises(WorkLimitExceeded):
        approx_dw_float(SeifertData(0, ((1, 1),)), 50, 0, max_terms=1000)


@pytest.mark.parametrize(
    "M, m",
    [
        (SeifertData(0, ((3, 1), (5, 2))), 4),
        (SeifertData(2, ((2, 1),)), 3),
        (SeifertData(1, ((4, 2), (6, -3))), 1),
    ],
)
def test_cross_validate_examples(M, m):
    rep = cross_validate(M, m)
    assert rep.ok, rep.failures
    assert rep.extra == {"brute_hom_count": True, "float_agreement": True}


def test_cross_validate_skips_when_over_budget(monkeypatch):
    import dwcount.oracle as oracle

    def over_budget(M, m):
        raise WorkLimitExceeded(99, 1)

    monkeypatch.setattr(oracle, "brute_count_homs", over_budget)
    rep = cross_validate(SeifertData(0, ((2, 1),)), 3)
    assert rep.ok
    assert "brute_hom_count" not in rep.extra
    assert rep.skipped and rep.skipped[0].startswith("brute_hom_count")


@pytest.mark.parametrize("m", range(1, 7))
def test_brute_equals_closed_form_on_corpus(m):
    for M in corpus(40, seed=21, gmax=2):
        assert brute_count_homs(M, m) == count_homs(M, m)


def test_enumeration_order_independent():
    # relabelling the pairs permutes the enumeration but not the count
    M = SeifertData(1, ((2, 1), (4, -2), (3, 3)))
    N = SeifertData(1, tuple(reversed(M.pairs)))
    assert brute_count_homs(M, 6) == brute_count_homs(N, 6)
