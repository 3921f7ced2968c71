import itertools

import pytest
from conftest import ALL_DATA, make_ctx, make_group

from mhecke.hecke import HeckeElt, T_elt, c_elt, c_word, idem, mul
from mhecke.laurent import LaurentInt
from mhecke.monodromy import MonodromyClass, act_w, in_w_lambda, simple_fixes
from mhecke.root_datum import YsCase, dot
from mhecke.subexpr import (
    branch_walks,
    drop_letters,
    emitted_plus_positions,
    nested_reflection,
    nested_reflection_tilde,
    plus_positions,
    position_root,
    psi_sum,
    pull_through,
    seq_elt,
    twisted_word_stabilizes,
    walk_degree,
    walk_letters,
    walk_sets,
    walks,
    xi_entries,
)

P = LaurentInt.parse

LAM0 = MonodromyClass((0,), 2)
LAM1 = MonodromyClass((1,), 2)


def all_words(m, rmax, rmin=1):
    for r in range(rmin, rmax + 1):
        yield from itertools.product(range(m), repeat=r)


def subsets(m):
    out = []
    for r in range(m + 1):
        out.extend(frozenset(c) for c in itertools.combinations(range(m), r))
    return out


def test_position_root_examples():
    group, _ = make_group("a2")
    assert position_root((0, 1), 0, group) == (1, 1)
    assert position_root((0, 1), 1, group) == (-1, 2)
    assert position_root((0, 0), 0, group) == (2, -1)
    with pytest.raises(ValueError):
        position_root((0, None), 1, group)


@pytest.mark.parametrize("name", ["a2", "b2"])
def test_nested_reflection_is_reflection_at_position_root(name):
    group, _ = make_group(name)
    for ss in all_words(2, 4):
        for j in range(len(ss)):
            assert nested_reflection(ss, j, group) == group.reflection(
                position_root(ss, j, group)
            )


def test_plus_positions_examples():
    group, twist = make_group("a1")
    assert plus_positions((0,), LAM0, group, twist) == {0}
    assert plus_positions((0,), LAM1, group, twist) == frozenset()
    assert plus_positions((0, 0), LAM0, group, twist) == {0, 1}
    assert plus_positions((0, 0), LAM1, group, twist) == frozenset()


@pytest.mark.parametrize("name", ALL_DATA)
def test_plus_positions_by_coroot_pairing(name):
    # position j is plus exactly when its coroot pairs to zero with the
    # twisted kappa
    ctx = make_ctx(name, 3)
    group, twist = ctx.group, ctx.twist
    m = len(group.simples)
    for ss in all_words(m, 3):
        for lam in ctx.classes:
            dk = twist.act_lambda(lam).kappa
            plus = plus_positions(ss, lam, group, twist)
            for j in range(len(ss)):
                root = position_root(ss, j, group)
                pairs_zero = dot(group.datum.coroot(root), dk) % 3 == 0
                assert (j in plus) == pairs_zero


def test_drop_letters():
    assert drop_letters((0, 1, 0), {1}) == (0, None, 0)
    assert drop_letters((0, 1), ()) == (0, 1)
    with pytest.raises(ValueError):
        drop_letters((0, None), {1})


def test_simple_only_guards():
    group, twist = make_group("a1")
    with pytest.raises(ValueError):
        walk_sets((group.identity, group.identity), (None,), group, frozenset())
    with pytest.raises(ValueError):
        branch_walks(group.identity, (0, None), LAM0, frozenset(), group)
    with pytest.raises(ValueError):
        nested_reflection((None,), 0, group)


def test_walks_rank_one():
    group, twist = make_group("a1")
    e = group.identity
    s = group.simples[0]
    assert walks((0,), frozenset(), group, twist) == [(e, e), (s, s)]
    # full J folds every step: the unique walk stays at e and emits ss
    full = frozenset({0})
    ws = walks((0, 0, 0), full, group, twist)
    assert ws == [(e, e, e, e)]
    ts, tt = walk_letters(ws[0], (0, 0, 0), group, full)
    assert ts == tt == (0, 0, 0)


def test_walk_degree_examples():
    group, twist = make_group("a1")
    e = group.identity
    s = group.simples[0]
    assert walk_degree((e, e), (0,), group, frozenset()) == 0
    assert walk_degree((s, s), (0,), group, frozenset(), check_closed=True) == 1
    assert walk_degree((s, e, e), (0, 0), group, frozenset()) == 1


@pytest.mark.parametrize("name", ["a2", "b2", "a2_flip"])
def test_walk_sets_partition(name):
    group, twist = make_group(name)
    js = [J for J in subsets(2) if {twist.eps_index(j) for j in J} == set(J)]
    for J in js:
        for ss in all_words(2, 3):
            for ys in walks(ss, J, group, twist):
                sets = walk_sets(ys, ss, group, J)
                moved = {
                    i for i in range(len(ss)) if ys[i + 1] != ys[i]
                }
                assert moved | sets.stay | sets.fold == set(range(len(ss)))
                assert not moved & (sets.stay | sets.fold)
                for i in sets.fold:
                    case, fold_j = group.classify_ys(ys[i], ss[i], J)
                    assert case is YsCase.FOLD and fold_j in J


def test_branch_walks_rank_one():
    group, twist = make_group("a1")
    e = group.identity
    s = group.simples[0]
    moved_only = branch_walks(e, (0,), LAM1, frozenset(), group)
    assert len(moved_only) == 1
    assert moved_only[0].ys == (e, s)
    assert moved_only[0].tt == (None,)
    assert moved_only[0].degree == 0
    both = branch_walks(e, (0,), LAM0, frozenset(), group)
    assert [wd.ys for wd in both] == [(e, s), (e, e)]


def test_xi_and_psi_rank_one():
    group, twist = make_group("a1")
    e = group.identity
    s = group.simples[0]
    xs = xi_entries((0,), LAM0, frozenset(), group, twist)
    assert [(wd.ys, wd.ts, wd.tt, wd.degree) for wd in xs] == [
        ((e, e), (None,), (None,), 0),
        ((s, s), (None,), (None,), 1),
    ]
    assert xi_entries((0,), LAM1, frozenset(), group, twist) == []
    assert psi_sum((0,), LAM0, frozenset(), group, twist) == idem(
        group, LAM0
    ).scale(P("v^2 + 1"))
    assert psi_sum((0,), LAM1, frozenset(), group, twist) == HeckeElt()


@pytest.mark.parametrize("name", ALL_DATA)
def test_single_factor_closed_forms(name):
    # T_y C^s: ascent appends, descent appends with a v^2, fold emits
    ctx = make_ctx(name, 2)
    group, n = ctx.group, ctx.n
    m = len(group.simples)
    for J in subsets(m):
        for y in group.min_coset_reps(J):
            for s in range(m):
                case, fold_j = group.classify_ys(y, s, J)
                for lam in ctx.classes:
                    lhs = mul(T_elt(y, n=n), c_elt(group, s, lam))
                    if case is YsCase.FOLD:
                        rhs = mul(
                            c_elt(group, fold_j, act_w(y, lam)),
                            T_elt(y, n=n),
                        )
                    else:
                        rhs = T_elt(y * group.simples[s], lam)
                        if simple_fixes(ctx.datum, s, lam):
                            rhs = rhs + T_elt(y, lam)
                        if case is YsCase.DESCENT:
                            rhs = rhs.scale(P("v^2"))
                    assert lhs == rhs
                    assert lhs == pull_through(y, (s,), lam, J, group)


@pytest.mark.parametrize("name", ALL_DATA)
def test_pull_through_words(name):
    ctx = make_ctx(name, 2)
    group, n = ctx.group, ctx.n
    m = len(group.simples)
    for ss in all_words(m, 2):
        for J in subsets(m):
            for y in group.min_coset_reps(J):
                for lam in ctx.classes:
                    assert mul(
                        T_elt(y, n=n), c_word(group, ss, lam)
                    ) == pull_through(y, ss, lam, J, group)


@pytest.mark.parametrize("name", ["a2", "b2", "a2_flip"])
def test_emitted_palindrome_conjugation(name):
    # the emitted palindromes are the walk-endpoint conjugates of the
    # tilde palindromes; no class hypotheses needed
    group, twist = make_group(name)
    js = [J for J in subsets(2) if {twist.eps_index(j) for j in J} == set(J)]
    for J in js:
        for ss in all_words(2, 3):
            for ys in walks(ss, J, group, twist):
                ts, tt = walk_letters(ys, ss, group, J)
                y_r = ys[-1]
                for i in range(len(ss)):
                    if tt[i] is None:
                        continue
                    assert nested_reflection(tt, i, group) == (
                        y_r
                        * nested_reflection_tilde(ss, ts, i, group)
                        * y_r.inverse()
                    )


@pytest.mark.parametrize("name", ["a1", "a2", "a2_flip"])
def test_emitted_class_conditions(name):
    # when every stay is a plus position and the word carries the twisted
    # class back to itself, the emitted word stabilizes the transported
    # class and the emitted plus positions are the folded plus positions
    ctx = make_ctx(name, 2)
    group, twist = ctx.group, ctx.twist
    m = len(group.simples)
    js = [J for J in subsets(m) if {twist.eps_index(j) for j in J} == set(J)]
    hit = 0
    for J in js:
        for ss in all_words(m, 3):
            for ys in walks(ss, J, group, twist):
                sets = walk_sets(ys, ss, group, J)
                ts, tt = walk_letters(ys, ss, group, J)
                for lam in ctx.classes:
                    plus = plus_positions(ss, lam, group, twist)
                    if not sets.stay <= plus:
                        continue
                    dlam = twist.act_lambda(lam)
                    for i in range(len(ss)):
                        assert in_w_lambda(
                            nested_reflection(ss, i, group), dlam
                        ) == in_w_lambda(
                            nested_reflection_tilde(ss, ts, i, group), dlam
                        )
                    if act_w(seq_elt(group, ss), dlam) != lam:
                        continue
                    hit += 1
                    assert twisted_word_stabilizes(
                        ys, ss, lam, J, group, twist
                    )
                    assert (
                        emitted_plus_positions(ys, ss, lam, J, group, twist)
                        == plus & sets.fold
                    )
    assert hit > 0
