import pytest
from conftest import ALL_DATA, make_group

from mhecke.monodromy import (
    DiagramTwist,
    ExtendedWeyl,
    MonodromyClass,
    act_w,
    all_classes,
    ext_act,
    ext_mul,
    in_w_bullet_lambda,
    in_w_lambda,
    r_lambda,
    simple_fixes,
    w_lambda_elements,
)
from mhecke.root_datum import dot


def brute_subgroup(group, lam):
    """Closure of the reflection generators under pairwise products."""
    gens = {group.reflection(a) for a in r_lambda(group.datum, lam)}
    elems = {group.identity} | gens
    while True:
        bigger = {a * b for a in elems for b in elems}
        if bigger == elems:
            return elems
        elems = bigger


def all_data_classes(name, nmax=3):
    group, twist = make_group(name)
    for n in range(1, nmax + 1):
        for lam in all_classes(group.datum.rank, n):
            yield group, twist, lam


def test_class_normalization():
    lam = MonodromyClass((5, -1), 3)
    assert lam.kappa == (2, 2)
    assert MonodromyClass((0,), 1) == MonodromyClass((7,), 1)
    with pytest.raises(ValueError):
        MonodromyClass((0,), 0)


def test_act_examples():
    group, _ = make_group("a1")
    lam = MonodromyClass((1,), 2)
    assert act_w(group.simples[0], lam) == lam
    a2, _ = make_group("a2")
    assert act_w(a2.simples[0], MonodromyClass((1, 0), 2)) == MonodromyClass((1, 1), 2)


@pytest.mark.parametrize("name", ALL_DATA)
def test_reflection_formula_on_kappa(name):
    # s_alpha kappa = kappa - <coroot, kappa> alpha, for every root
    group, _ = make_group(name)
    datum = group.datum
    for n in (1, 2, 3):
        for lam in all_classes(datum.rank, n):
            for root, coroot in datum.positive_roots:
                got = act_w(group.reflection(root), lam)
                c = dot(coroot, lam.kappa)
                want = MonodromyClass(
                    tuple(k - c * a for k, a in zip(lam.kappa, root)), n
                )
                assert got == want


def test_r_lambda_examples():
    a1, _ = make_group("a1")
    assert r_lambda(a1.datum, MonodromyClass((0,), 2)) == {(2,), (-2,)}
    assert r_lambda(a1.datum, MonodromyClass((1,), 2)) == frozenset()
    a2, _ = make_group("a2")
    assert r_lambda(a2.datum, MonodromyClass((1, 2), 3)) == {(1, 1), (-1, -1)}
    full = r_lambda(a2.datum, MonodromyClass((0, 0), 2))
    assert len(full) == 6


@pytest.mark.parametrize("name", ALL_DATA)
def test_membership_against_brute_force(name):
    for group, _, lam in all_data_classes(name):
        brute = brute_subgroup(group, lam)
        assert w_lambda_elements(group, lam) == brute
        for w in group.elements:
            assert in_w_lambda(w, lam) == (w in brute)


@pytest.mark.parametrize("name", ALL_DATA)
def test_simple_fixes_matches_membership(name):
    for group, _, lam in all_data_classes(name):
        for i in range(len(group.simples)):
            assert simple_fixes(group.datum, i, lam) == in_w_lambda(
                group.simples[i], lam
            )


@pytest.mark.parametrize("name", ALL_DATA)
def test_reflection_subgroup_inside_stabilizer(name):
    for group, twist, lam in all_data_classes(name):
        for w in w_lambda_elements(group, lam):
            assert act_w(w, lam) == lam


@pytest.mark.parametrize("name", ALL_DATA)
def test_normality_in_extended_stabilizer(name):
    for group, twist, lam in all_data_classes(name):
        members = w_lambda_elements(group, lam)
        for w in group.elements:
            for i in range(twist.omega):
                a = ExtendedWeyl(w, i)
                if not in_w_bullet_lambda(a, lam, twist):
                    continue
                for x in members:
                    conj = w * twist.eps_elt(x, i) * w.inverse()
                    assert conj in members


@pytest.mark.parametrize("name", ALL_DATA)
def test_root_set_transport(name):
    group, twist = make_group(name)
    datum = group.datum
    for n in (1, 2, 3):
        for lam in all_classes(datum.rank, n):
            roots = r_lambda(datum, lam)
            for w in group.elements:
                assert r_lambda(datum, act_w(w, lam)) == {
                    tuple(w.apply(a)) for a in roots
                }
            dlam = twist.act_lambda(lam)
            assert r_lambda(datum, dlam) == {tuple(twist.apply(a)) for a in roots}
            assert w_lambda_elements(group, dlam) == {
                twist.eps_elt(x) for x in w_lambda_elements(group, lam)
            }


def test_extended_group_law():
    group, twist = make_group("a2_flip")
    elems = [
        ExtendedWeyl(w, i) for w in group.elements for i in range(twist.omega)
    ]
    lam = MonodromyClass((1, 0), 3)
    for a in elems:
        for b in elems:
            ab = ext_mul(a, b, twist)
            assert ext_act(ab, lam, twist) == ext_act(a, ext_act(b, lam, twist), twist)


def test_twist_validation():
    group, _ = make_group("a2")
    datum = group.datum
    with pytest.raises(ValueError):
        DiagramTwist(datum, [[0, 1], [1, 0]], 3)  # wrong order
    with pytest.raises(ValueError):
        DiagramTwist(datum, [[1, 1], [0, 1]], 1)  # not a diagram permutation
    flip = DiagramTwist(datum, [[0, 1], [1, 0]], 2)
    assert flip.eps == (1, 0)
    assert not flip.is_trivial()
    assert DiagramTwist.identity(datum).is_trivial()


def test_eps_word_and_elt():
    group, twist = make_group("a2_flip")
    w = group.from_word([0, 1])
    assert twist.eps_elt(w).word == (1, 0)
    assert twist.eps_word((0, 1, 0)) == (1, 0, 1)
