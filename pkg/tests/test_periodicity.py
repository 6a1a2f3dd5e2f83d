import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from subnim.game import SubtractionSet, grundy_table, pass_grundy_table
from subnim.periodicity import (
    NoPeriodFound,
    PeriodCertificate,
    certify_game,
    default_bounds,
    detect_pass_period,
    detect_period,
    value_at,
    window_mod,
)


def _naive_least_pair(values, m, max_q, max_p):
    # lexicographic (q, p) scan with the window rule written out directly
    for q in range(max_q + 1):
        for p in range(1, max_p + 1):
            hi = q + p + m
            if hi + p >= len(values):
                continue
            if all(values[x + p] == values[x] for x in range(q + 1, hi + 1)):
                return q, p
    return None


def test_paper_family_no_pass(paper3):
    cert = detect_period(grundy_table(paper3, 2000), paper3)
    assert (cert.preperiod, cert.period) == (0, 24)
    assert cert.certified


def test_paper_family_pass_row(paper3):
    t = pass_grundy_table(paper3, 3000)
    cert = detect_pass_period(t)
    assert cert.period == 24
    assert cert.preperiod <= 44
    assert cert.loop_start == 45


def test_constant_sequence():
    rule = SubtractionSet((1,))
    cert = detect_period([0] * 20, rule, 4, 4)
    assert (cert.preperiod, cert.period) == (0, 1)


def test_length_precondition(paper3):
    with pytest.raises(ValueError):
        detect_period(grundy_table(paper3, 100), paper3)


def test_no_period_found():
    rule = SubtractionSet((1,))
    with pytest.raises(NoPeriodFound):
        detect_period(list(range(30)), rule, 5, 5)


@pytest.mark.parametrize("n", range(3, 11))
def test_period_8n(n):
    rule = SubtractionSet.paper_family(n)
    _, c0, c1 = certify_game(rule, with_pass=True)
    assert (c0.preperiod, c0.period) == (0, 8 * n)
    assert c1.period == 8 * n
    assert c1.loop_start <= 12 * n + 9


@settings(max_examples=40, deadline=None)
@given(st.lists(st.integers(1, 9), min_size=1, max_size=3, unique=True))
def test_matches_naive_scan(amounts):
    rule = SubtractionSet(sorted(amounts))
    m = rule.largest
    max_q, max_p = 3 * m * m, 2 * m * m
    values = grundy_table(rule, max_q + 2 * max_p + m).values
    cert = detect_period(values, rule, max_q, max_p)
    assert (cert.preperiod, cert.period) == _naive_least_pair(values, m, max_q, max_p)


@settings(max_examples=40, deadline=None)
@given(
    st.lists(st.integers(1, 12), min_size=1, max_size=4, unique=True),
    st.booleans(),
)
def test_certificate_soundness(amounts, with_pass):
    # extend the DP three periods beyond the verified window
    rule = SubtractionSet(sorted(amounts))
    table, c0, c1 = certify_game(rule, with_pass=with_pass)
    cert = c1 if with_pass else c0
    base = table.row1 if with_pass else table.values
    end = cert.verified_window[1]
    window = base[: end + 1]
    far = end + 3 * cert.period + rule.largest
    full = pass_grundy_table(rule, far)
    longer = full.row1 if with_pass else full.row0
    for x in range(end + 1, far + 1):
        assert value_at(x, window, cert) == longer[x]


def test_minimal_pair_is_independent_of_bounds():
    rule = SubtractionSet((3, 4, 7))
    t, c, _ = certify_game(rule)
    q, p = default_bounds(rule)
    full = detect_period(grundy_table(rule, q + 2 * p + rule.largest), rule)
    assert (c.preperiod, c.period) == (full.preperiod, full.period)


CERT = PeriodCertificate(0, 24, (1, 38))


@pytest.mark.parametrize("v, expected", [(30, 30), (-5, 19), (0, 24), (1, 1), (-24, 24), (-25, 23)])
def test_window_mod_examples(v, expected):
    assert window_mod(v, CERT) == expected


@given(st.integers(-10_000, 10_000), st.integers(0, 50), st.integers(1, 60))
def test_window_mod_properties(v, q, p):
    cert = PeriodCertificate(q, p, (q + 1, q + p))
    r = window_mod(v, cert)
    assert window_mod(r, cert) == r
    assert (r - v) % p == 0
    if v >= q + 1:
        assert r == v
    else:
        # brute force: keep adding p
        lifted = v
        while lifted < q + 1:
            lifted += p
        assert r == lifted and q + 1 <= r <= q + p


def test_uncertified_rejected():
    bad = PeriodCertificate(0, 24, (1, 38), certified=False)
    with pytest.raises(ValueError):
        window_mod(3, bad)
    with pytest.raises(ValueError):
        value_at(3, [0] * 40, bad)


def test_value_at_far_position(paper3):
    table, cert, _ = certify_game(paper3)
    x = 10**6
    extended = grundy_table(paper3, x)
    assert value_at(x, table, cert) == extended.values[x]
    assert value_at(x, table, cert) == table.values[x % 24]


def test_value_at_pass_row(paper3):
    table, _, c1 = certify_game(paper3, with_pass=True)
    short = table.row1[:69]
    assert value_at(69, short, c1) == short[45] == 3
    for x in range(len(table.row1)):
        assert value_at(x, table.row1, c1) == table.row1[x]
    with pytest.raises(ValueError):
        value_at(-1, table.row1, c1)
