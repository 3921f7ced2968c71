"""Walk combinatorics over minimal coset representatives.

A letter sequence (simple indices, or None for the neutral letter) drives
walks y_0, ..., y_r through ^J W: each step either stays or moves by the
current letter.  Steps that would leave ^J W fold back and emit a letter of
J; the emitted word, the stay/fold position sets and the descent degree
reproduce the effect of pushing T_y through a product of C-factors, and the
twist-diagonal slice of the enumeration assembles the trace of the
coefficient matrix of that action.

Letters are 0-based simple indices internally; walks are (r+1)-tuples of
group elements.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

from .hecke import HeckeElt, T_elt, c_word, mul
from .laurent import LaurentInt
from .monodromy import (
    DiagramTwist,
    ExtendedWeyl,
    MonodromyClass,
    act_w,
    ext_act,
    in_w_lambda,
    simple_fixes,
)
from .root_datum import WeylElt, WeylGroup, YsCase

__all__ = [
    "WalkData",
    "WalkSets",
    "seq_elt",
    "nested_reflection",
    "nested_reflection_tilde",
    "position_root",
    "plus_positions",
    "drop_letters",
    "walks_from",
    "walks",
    "walk_letters",
    "walk_degree",
    "walk_sets",
    "branch_walks",
    "xi_entries",
    "psi_sum",
    "pull_through",
    "emitted_plus_positions",
    "twisted_word_stabilizes",
]


def seq_elt(group: WeylGroup, ss) -> WeylElt:
    """Product of the letters of ss (neutral letters skipped)."""
    return group.from_word([s for s in ss if s is not None])


def _require_simple(ss):
    if any(s is None for s in ss):
        raise ValueError("letter sequence must consist of simple indices only")


def nested_reflection(ss, k: int, group: WeylGroup) -> WeylElt:
    """The palindrome s_r ... s_{k+1} s_k s_{k+1} ... s_r (0-based k).

    Neutral letters in the outer shell are skipped; the middle letter must
    be simple.
    """
    if ss[k] is None:
        raise ValueError("no reflection at a neutral letter")
    outer = [s for s in ss[k + 1 :][::-1] if s is not None]
    return group.from_word(outer + [ss[k]] + outer[::-1])


def nested_reflection_tilde(ss, ts, k: int, group: WeylGroup) -> WeylElt:
    """Same palindrome but with the outer shell taken from the tilde letters.

    The middle letter stays the plain s_k.
    """
    if ss[k] is None:
        raise ValueError("no reflection at a neutral letter")
    outer = [t for t in ts[k + 1 :][::-1] if t is not None]
    return group.from_word(outer + [ss[k]] + outer[::-1])


def position_root(ss, j: int, group: WeylGroup):
    """The positive root whose reflection is the nested palindrome at j."""
    if ss[j] is None:
        raise ValueError("no root at a neutral letter")
    u = group.from_word([s for s in ss[j + 1 :][::-1] if s is not None])
    vec = u.apply(group.datum.simple_roots[ss[j]])
    if not group.datum.is_positive_root(vec):
        vec = tuple(-x for x in vec)
    return vec


@lru_cache(maxsize=None)
def plus_positions(ss, lam: MonodromyClass, group: WeylGroup, twist: DiagramTwist):
    """Positions whose C-factor carries the +1 term.

    A position qualifies when its nested reflection lies in the reflection
    group of the twisted class; equivalently (tested) the coroot of its
    attached root pairs to zero against the twisted kappa.
    """
    dlam = twist.act_lambda(lam)
    out = set()
    for j, s in enumerate(ss):
        if s is None:
            continue
        if in_w_lambda(nested_reflection(ss, j, group), dlam):
            out.add(j)
    return frozenset(out)


def drop_letters(ss, positions) -> tuple:
    """Replace the letters at the given positions by the neutral letter."""
    positions = set(positions)
    for i in positions:
        if ss[i] is None:
            raise ValueError("position %d is already neutral" % i)
    return tuple(None if i in positions else s for i, s in enumerate(ss))


# -- walk enumeration --------------------------------------------------------


def walks_from(y0: WeylElt, ss, J, group: WeylGroup) -> list:
    """All stay/move walks from y0 inside ^J W (no closure constraint).

    Staying is always allowed; moving is allowed unless the step folds.
    """
    partial = [(y0,)]
    for s in ss:
        nxt = []
        for ys in partial:
            y = ys[-1]
            if s is None:
                nxt.append(ys + (y,))
                continue
            case, _ = group.classify_ys(y, s, J)
            nxt.append(ys + (y,))
            if case is not YsCase.FOLD:
                nxt.append(ys + (y * group.simples[s],))
        partial = nxt
    return partial


def walks(ss, J, group: WeylGroup, twist: DiagramTwist) -> list:
    """Walks whose endpoint is the twist image of their start."""
    out = []
    for y0 in group.min_coset_reps(J):
        target = twist.eps_elt(y0)
        for ys in walks_from(y0, ss, J, group):
            if ys[-1] == target:
                out.append(ys)
    return out


def walk_letters(ys, ss, group: WeylGroup, J):
    """(tilde letters, emitted letters) of a walk.

    A step that moves keeps its letter but emits nothing; a stay at a fold
    keeps its letter and emits the folded simple index (a letter of J); a
    stay anywhere else drops the letter.
    """
    ts, tt = [], []
    for i, s in enumerate(ss):
        y_prev, y_cur = ys[i], ys[i + 1]
        if s is None:
            ts.append(None)
            tt.append(None)
            continue
        case, fold_j = group.classify_ys(y_prev, s, J)
        if y_cur != y_prev:
            ts.append(s)
            tt.append(None)
        elif case is YsCase.FOLD:
            ts.append(s)
            tt.append(fold_j)
        else:
            ts.append(None)
            tt.append(None)
    return tuple(ts), tuple(tt)


def walk_degree(ys, ss, group: WeylGroup, J, check_closed: bool = False) -> int:
    """Number of positions where the letter is a proper descent of the
    previous representative (the moved element staying in ^J W).

    With check_closed the equivalent count over the next representative is
    computed as well; the two agree exactly on closed walks.
    """
    def count(idx_shift):
        deg = 0
        for i, s in enumerate(ss):
            if s is None:
                continue
            y = ys[i + idx_shift]
            m = y * group.simples[s]
            if m.length < y.length and group.is_min_rep(m, J):
                deg += 1
        return deg

    deg = count(0)
    if check_closed and count(1) != deg:
        raise AssertionError("degree formulas disagree on a closed walk")
    return deg


@dataclass(frozen=True)
class WalkSets:
    """Position sets of a walk: stays (split by the case of the skipped
    letter) and folds.  Stays and folds are disjoint."""

    stay: frozenset
    stay_ascent: frozenset
    stay_descent: frozenset
    fold: frozenset


def walk_sets(ys, ss, group: WeylGroup, J) -> WalkSets:
    _require_simple(ss)
    ts, tt = walk_letters(ys, ss, group, J)
    stay, up, down, fold = set(), set(), set(), set()
    for i, s in enumerate(ss):
        if tt[i] is not None:
            fold.add(i)
            continue
        if ts[i] is not None:
            continue
        stay.add(i)
        case, _ = group.classify_ys(ys[i], s, J)
        if case is YsCase.ASCENT:
            up.add(i)
        elif case is YsCase.DESCENT:
            down.add(i)
        else:
            raise AssertionError("stay at a fold must emit a letter")
    assert stay == up | down and not up & down
    assert not stay & fold
    return WalkSets(frozenset(stay), frozenset(up), frozenset(down), frozenset(fold))


# -- admissible branches and the twist diagonal ------------------------------


@dataclass(frozen=True)
class WalkData:
    """A walk with its derived letters and degree."""

    ys: tuple
    ts: tuple
    tt: tuple
    degree: int


def _attach(ys, ss, group, J) -> WalkData:
    ts, tt = walk_letters(ys, ss, group, J)
    return WalkData(ys, ts, tt, walk_degree(ys, ss, group, J))


def branch_walks(y0: WeylElt, ss, lam_right: MonodromyClass, J, group: WeylGroup) -> list:
    """Admissible branches for pushing T_{y0} through the C-word at lam_right.

    At a fold the walk must stay; elsewhere it may always move, and may
    stay only when the letter fixes the running suffix class (that is the
    condition under which the C-factor contributes an idempotent term).
    """
    _require_simple(ss)
    r = len(ss)
    suffix = [None] * r
    cur = lam_right
    for i in range(r - 1, -1, -1):
        suffix[i] = cur
        cur = act_w(group.simples[ss[i]], cur)
    partial = [(y0,)]
    for i, s in enumerate(ss):
        nxt = []
        for ys in partial:
            y = ys[-1]
            case, _ = group.classify_ys(y, s, J)
            if case is YsCase.FOLD:
                nxt.append(ys + (y,))
                continue
            nxt.append(ys + (y * group.simples[s],))
            if simple_fixes(group.datum, s, suffix[i]):
                nxt.append(ys + (y,))
        partial = nxt
    return [_attach(ys, ss, group, J) for ys in partial]


def pull_through(y: WeylElt, ss, lam_right: MonodromyClass, J, group: WeylGroup) -> HeckeElt:
    """T_y times the C-word at lam_right, expanded along admissible branches.

    Each branch contributes v^(2 degree) times the emitted C-word at the
    transported class, times T at the branch endpoint.  Equality with the
    direct product is the fold-expansion identity, tested exhaustively.
    """
    out = HeckeElt()
    for wd in branch_walks(y, ss, lam_right, J, group):
        y_r = wd.ys[-1]
        c = c_word(group, wd.tt, act_w(y_r, lam_right))
        term = mul(c, T_elt(y_r, n=lam_right.n))
        out = out + term.scale(LaurentInt({2 * wd.degree: 1}))
    return out


def xi_entries(ss, lam: MonodromyClass, J, group: WeylGroup, twist: DiagramTwist) -> list:
    """Admissible branches that close up through the twist, for the C-word
    at the twisted class."""
    _require_simple(ss)
    dlam = twist.act_lambda(lam)
    out = []
    for y0 in group.min_coset_reps(J):
        target = twist.eps_elt(y0)
        for wd in branch_walks(y0, ss, dlam, J, group):
            if wd.ys[-1] == target:
                out.append(wd)
    return out


def psi_sum(ss, lam: MonodromyClass, J, group: WeylGroup, twist: DiagramTwist) -> HeckeElt:
    """Sum of v^(2 degree) times the emitted C-word over the twist diagonal;
    an element supported on the parabolic subgroup."""
    dlam = twist.act_lambda(lam)
    out = HeckeElt()
    for wd in xi_entries(ss, lam, J, group, twist):
        mu = act_w(wd.ys[-1], dlam)
        term = c_word(group, wd.tt, mu).scale(LaurentInt({2 * wd.degree: 1}))
        out = out + term
    return out


# -- transported classes -----------------------------------------------------


def emitted_plus_positions(ys, ss, lam: MonodromyClass, J, group: WeylGroup, twist: DiagramTwist):
    """Positions whose emitted nested reflection lies in the reflection
    group of the twisted transported class y_0(lam)."""
    _, tt = walk_letters(ys, ss, group, J)
    dmu = twist.act_lambda(act_w(ys[0], lam))
    out = set()
    for i, t in enumerate(tt):
        if t is None:
            continue
        if in_w_lambda(nested_reflection(tt, i, group), dmu):
            out.add(i)
    return frozenset(out)


def twisted_word_stabilizes(ys, ss, lam: MonodromyClass, J, group: WeylGroup, twist: DiagramTwist) -> bool:
    """Does the emitted word, followed by the twist generator, fix the
    transported class y_0(lam)?"""
    _, tt = walk_letters(ys, ss, group, J)
    word_elt = group.from_word([t for t in tt if t is not None])
    a = ExtendedWeyl(word_elt, 1 % twist.omega)
    mu = act_w(ys[0], lam)
    return ext_act(a, mu, twist) == mu
