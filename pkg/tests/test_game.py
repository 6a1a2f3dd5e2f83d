import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from subnim.game import (
    PASS,
    CapacityError,
    GrundyTable,
    Outcome,
    SubtractionSet,
    grundy_table,
    mex,
    moves,
    outcome_by_grundy,
    outcome_by_search,
    pass_grundy_table,
    search_outcomes,
    winning_moves,
)

rules = st.lists(st.integers(1, 20), min_size=1, max_size=4, unique=True).map(
    lambda xs: SubtractionSet(sorted(xs))
)


@pytest.mark.parametrize(
    "values, expected",
    [(set(), 0), ({1, 2, 3}, 0), ([0, 1, 2, 2], 3), ([0, 0, 0], 1), ((5, 0, 1), 2)],
)
def test_mex_examples(values, expected):
    assert mex(values) == expected


@given(st.lists(st.integers(0, 12), max_size=15))
def test_mex_contract(values):
    m = mex(values)
    assert m not in values
    assert all(k in values for k in range(m))


def test_subtraction_set_validation():
    with pytest.raises(ValueError):
        SubtractionSet([])
    with pytest.raises(ValueError):
        SubtractionSet([0, 2])
    with pytest.raises(ValueError):
        SubtractionSet([3, 2])
    with pytest.raises(ValueError):
        SubtractionSet([2, 2])
    with pytest.raises(ValueError):
        SubtractionSet.paper_family(2)
    assert SubtractionSet.parse("2, 12,14").amounts == (2, 12, 14)
    assert SubtractionSet.family("A", 2, 3) == SubtractionSet.paper_family(3)
    assert SubtractionSet.family("b", 1, 1).amounts == (1, 3, 5)
    assert SubtractionSet.family("C", 3, 2).amounts == (3, 15, 27)
    with pytest.raises(ValueError):
        SubtractionSet.family("A", 0, 1)


def test_moves(paper3):
    assert moves(0, paper3) == []
    assert moves(1, paper3) == []
    assert moves(2, paper3) == [0]
    assert moves(14, paper3) == [0, 2, 12]
    with pytest.raises(ValueError):
        moves(-1, paper3)


def test_grundy_table_spot_values(paper3):
    assert grundy_table(paper3, 3).values == (0, 0, 1, 1)
    assert grundy_table(paper3, 12).values[12] == 2
    assert grundy_table(paper3, 14).values[14] == 3
    assert grundy_table(paper3, 0).values == (0,)


def test_pass_table_spot_values(paper3):
    assert pass_grundy_table(paper3, 1).row1 == (0, 1)
    assert pass_grundy_table(paper3, 14).row1[14] == 4
    assert pass_grundy_table(paper3, 44).row1[44] == 4


def test_pass_table_matches_first_table_row(paper3):
    # first table: x = 0..7, then 4n-4 .. 4n+3 for n = 3 (8..15)
    t = pass_grundy_table(paper3, 15)
    assert t.row0 == (0, 0, 1, 1, 0, 0, 1, 1, 0, 0, 1, 1, 2, 2, 3, 3)
    assert t.row1 == (0, 1, 2, 0, 1, 1, 0, 0, 1, 1, 0, 0, 1, 3, 4, 2)


def test_capacity_error(monkeypatch, paper3):
    import subnim.game as game

    monkeypatch.setattr(game, "MAX_TABLE_LIMIT", 100)
    with pytest.raises(CapacityError):
        grundy_table(paper3, 100)
    with pytest.raises(ValueError):
        grundy_table(paper3, -1)


def _brute_grundy(rule, limit):
    # direct transcription of the recursive definition, memoised
    memo = {}

    def g(x):
        if x not in memo:
            memo[x] = mex(g(y) for y in moves(x, rule))
        return memo[x]

    return [g(x) for x in range(limit + 1)]


@settings(max_examples=40, deadline=None)
@given(rules, st.integers(0, 150))
def test_table_invariants(rule, limit):
    t = pass_grundy_table(rule, limit)
    assert list(t.row0) == _brute_grundy(rule, limit)
    assert t.row0 == grundy_table(rule, limit).values
    for x in range(limit + 1):
        opts = [t.row1[x - s] for s in rule if x >= s]
        if x >= 1:
            opts.append(t.row0[x])
        assert t.row1[x] == mex(opts)
    assert max(t.row0) <= len(rule)
    assert max(t.row1) <= len(rule) + 1


@settings(max_examples=30, deadline=None)
@given(rules, st.integers(0, 200), st.data())
def test_dp_locality(rule, limit, data):
    # each value depends only on the previous max(rule) entries
    values = list(grundy_table(rule, limit).values)
    m = rule.largest
    if limit <= m:
        return
    x = data.draw(st.integers(m, limit))
    scrambled = values[:]
    for i in range(0, x - m):
        scrambled[i] = data.draw(st.integers(0, 5))
    assert mex(scrambled[x - s] for s in rule) == values[x]


@pytest.mark.parametrize("n", range(3, 11))
def test_paper_family_value_ranges(n):
    rule = SubtractionSet.paper_family(n)
    t = pass_grundy_table(rule, 12 * n + 9 + 4 * 8 * n)
    assert set(t.row0) <= {0, 1, 2, 3}
    assert set(t.row1) <= {0, 1, 2, 3, 4}
    assert [x for x, g in enumerate(t.row1) if g == 4] == [4 * n + 2, 12 * n + 8]


def test_outcomes(paper3):
    t = grundy_table(paper3, 20)
    assert outcome_by_grundy(0, t) is Outcome.P
    assert outcome_by_grundy(2, t) is Outcome.N
    assert outcome_by_grundy(4, t) is Outcome.P
    with pytest.raises(IndexError):
        outcome_by_grundy(21, t)
    assert outcome_by_search(0, paper3) is Outcome.P
    assert outcome_by_search(14, paper3) is Outcome.N
    assert outcome_by_search(1, paper3, pass_available=True) is Outcome.N
    assert outcome_by_search(0, paper3, pass_available=True) is Outcome.P


def test_oracle_equivalence(corpus_rule):
    t = pass_grundy_table(corpus_rule, 500)
    for with_pass in (False, True):
        searched = search_outcomes(corpus_rule, 500, with_pass)
        for x in range(501):
            assert outcome_by_grundy(x, t, with_pass) is searched[x], (x, with_pass)


def test_winning_moves(paper3):
    t = grundy_table(paper3, 50)
    assert winning_moves(4, t) == []
    assert winning_moves(2, t) == [2]
    assert winning_moves(14, t) == [14]
    pt = pass_grundy_table(paper3, 50)
    assert winning_moves(1, pt, pass_available=True) == [PASS]
    assert winning_moves(1, pt, pass_available=False) == []
    with pytest.raises(IndexError):
        winning_moves(51, t)
    with pytest.raises(ValueError):
        winning_moves(3, t, SubtractionSet((1, 2)))


def test_pass_token_sorts_last():
    rule = SubtractionSet((1, 2))
    pt = pass_grundy_table(rule, 30)
    for x in range(31):
        found = winning_moves(x, pt, pass_available=True)
        if PASS in found:
            assert found[-1] == PASS
        removals = [m for m in found if m != PASS]
        assert removals == sorted(removals)


@pytest.mark.parametrize("with_pass", [False, True])
def test_n_position_iff_winning_move(corpus_rule, with_pass):
    pt = pass_grundy_table(corpus_rule, 120)
    table = pt if with_pass else grundy_table(corpus_rule, 120)
    for x in range(121):
        nonempty = bool(winning_moves(x, table, pass_available=with_pass))
        assert nonempty == (outcome_by_grundy(x, table, with_pass) is Outcome.N)


def test_tables_are_immutable(paper3):
    t = grundy_table(paper3, 5)
    assert isinstance(t, GrundyTable)
    with pytest.raises(Exception):
        t.limit = 3
    with pytest.raises(TypeError):
        t.values[0] = 1
