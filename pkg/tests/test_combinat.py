import itertools
import random
from math import comb

import pytest

from polyom.combinat import (
    all_tuples,
    exchange_table,
    lex_rank,
    lex_unrank,
    sort_with_sign,
    window_index,
)
from polyom.errors import InputError


def test_lex_rank_examples():
    assert lex_rank((1, 2, 3), 5) == 0
    assert lex_rank((1, 3, 4), 6) == 4
    assert lex_rank((4, 5, 6), 6) == comb(6, 3) - 1


def test_lex_rank_unrank_bijection():
    for n in range(1, 10):
        for r in range(1, min(n, 7) + 1):
            for i, t in enumerate(itertools.combinations(range(1, n + 1), r)):
                assert lex_rank(t, n) == i
                assert lex_unrank(i, n, r) == t


def test_lex_rank_rejects_bad_input():
    with pytest.raises(InputError):
        lex_rank((2, 1, 3), 5)
    with pytest.raises(InputError):
        lex_rank((1, 2, 9), 5)
    with pytest.raises(InputError):
        lex_unrank(comb(5, 3), 5, 3)
    with pytest.raises(InputError):
        lex_unrank(-1, 5, 3)


def test_all_tuples_is_lex_ordered():
    ts = all_tuples(7, 4)
    assert ts == sorted(ts)
    assert len(ts) == comb(7, 4)


def test_sort_with_sign_matches_inversion_parity():
    rng = random.Random(0)
    for _ in range(400):
        r = rng.randint(2, 5)
        t = [rng.randint(1, 8) for _ in range(r)]
        sign, srt = sort_with_sign(t)
        assert srt == tuple(sorted(t))
        if len(set(t)) < len(t):
            assert sign == 0
        else:
            inv = sum(
                1 for i in range(r) for j in range(i + 1, r) if t[i] > t[j]
            )
            assert sign == (-1) ** inv


def test_window_subtuples_delete_largest_first():
    wi = window_index(6, 2)
    first = wi.windows[0]
    assert wi.window_tuples[0] == (1, 2, 3, 4, 5)
    assert wi.tuples[first[0]] == (1, 2, 3, 4)
    assert wi.tuples[first[-1]] == (2, 3, 4, 5)
    for win in wi.windows:
        subs = [wi.tuples[v] for v in win]
        assert subs == sorted(subs)
        assert len(subs) == 5


def test_var_windows_consistency():
    wi = window_index(7, 3)
    for v, ws in enumerate(wi.var_windows):
        for w in ws:
            assert v in wi.windows[w]
    # every window touches exactly k+3 variables
    for win in wi.windows:
        assert len(set(win)) == 6


def test_exchange_table_shapes():
    tab = exchange_table(5, 2, False)
    assert tab.left.shape == tab.right.shape == tab.coeff.shape
    assert tab.coeff.shape[1] == 5  # k + 3 terms per pair
    assert len(tab.pair_lam) == len(tab.coeff)


def test_exchange_table_prune_drops_pivot_in_mu():
    full = exchange_table(6, 2, False)
    pruned = exchange_table(6, 2, True)
    pairs_full = set(zip(full.pair_lam.tolist(), full.pair_mu.tolist()))
    pairs_pruned = set(zip(pruned.pair_lam.tolist(), pruned.pair_mu.tolist()))
    assert pairs_pruned < pairs_full
    wi = window_index(6, 2)
    for li, mi in pairs_pruned:
        assert wi.tuples[li][0] not in wi.tuples[mi]
    for li, mi in pairs_full - pairs_pruned:
        assert wi.tuples[li][0] in wi.tuples[mi]
