"""Monodromy classes of the torus, their reflection data, and diagram twists.

A class is a character-lattice vector kappa taken modulo n; there are
n^rank of them.  Pairing kappa against coroots singles out the roots whose
reflections fix the class, which is all the algebra ever needs.  A diagram
twist is a lattice automorphism permuting the simple roots; together with
the Weyl group it acts on classes.

Convention: the extended group acts on classes through kappa itself,
(w, d^i) . kappa = M_w delta^i kappa mod n.  Tests pin this orientation by
checking that the twisted root set transforms covariantly.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from itertools import product

from .root_datum import RootDatum, WeylElt, WeylGroup, dot, identity_mat, mat_mul, mat_vec

__all__ = [
    "MonodromyClass",
    "DiagramTwist",
    "ExtendedWeyl",
    "all_classes",
    "act_w",
    "ext_act",
    "ext_mul",
    "r_lambda",
    "w_lambda_elements",
    "in_w_lambda",
    "in_w_bullet_lambda",
    "simple_fixes",
]


@dataclass(frozen=True)
class MonodromyClass:
    """kappa mod n in (Z/n)^rank; n >= 1 is the order of the ambient Kummer
    character group."""

    kappa: tuple
    n: int

    def __post_init__(self):
        if self.n < 1:
            raise ValueError("n must be positive")
        object.__setattr__(self, "kappa", tuple(int(x) % self.n for x in self.kappa))

    def __repr__(self):
        return "MonodromyClass((%s), %d)" % (",".join(map(str, self.kappa)), self.n)


def all_classes(rank: int, n: int) -> tuple:
    """All n^rank classes, in lexicographic kappa order."""
    return tuple(
        MonodromyClass(kappa, n) for kappa in product(range(n), repeat=rank)
    )


def act_w(w: WeylElt, lam: MonodromyClass) -> MonodromyClass:
    return MonodromyClass(w.apply(lam.kappa), lam.n)


class DiagramTwist:
    """A lattice automorphism delta permuting the simple roots.

    ``eps`` is the induced permutation of simple indices; ``omega`` is the
    declared order of delta, validated at construction.  Conjugation by the
    matrix realizes eps on the Weyl group; this is checked on the simple
    reflections here and exhaustively in tests.
    """

    __slots__ = ("datum", "delta", "omega", "eps", "_powers")

    def __init__(self, datum: RootDatum, delta, omega: int):
        self.datum = datum
        self.delta = tuple(tuple(int(x) for x in row) for row in delta)
        self.omega = int(omega)
        if self.omega < 1:
            raise ValueError("twist order must be positive")
        eps = []
        for i, a in enumerate(datum.simple_roots):
            image = mat_vec(self.delta, a)
            try:
                eps.append(datum.simple_roots.index(image))
            except ValueError:
                raise ValueError(
                    "twist does not permute the simple roots (image of root %d)" % i
                ) from None
        self.eps = tuple(eps)
        if sorted(eps) != list(range(datum.num_simples)):
            raise ValueError("twist is not a permutation of the simple roots")
        power = identity_mat(datum.rank)
        powers = [power]
        for _ in range(self.omega):
            power = mat_mul(self.delta, power)
            powers.append(power)
        if powers[self.omega] != identity_mat(datum.rank):
            raise ValueError("twist matrix does not have the declared order")
        self._powers = tuple(powers[: self.omega]) if self.omega > 1 else (powers[0],)
        # conjugation must realize eps on the simple reflections
        inv = powers[self.omega - 1]
        for i in range(datum.num_simples):
            lhs = mat_mul(mat_mul(self.delta, datum.reflection_matrix(datum.simple_roots[i])), inv)
            rhs = datum.reflection_matrix(datum.simple_roots[eps[i]])
            if lhs != rhs:
                raise ValueError("twist conjugation does not permute the reflections")
        for root, _ in datum.positive_roots:
            if not datum.is_positive_root(mat_vec(self.delta, root)):
                raise ValueError("twist does not permute the positive roots")

    @classmethod
    def identity(cls, datum: RootDatum) -> "DiagramTwist":
        return cls(datum, identity_mat(datum.rank), 1)

    def matrix_power(self, power: int):
        return self._powers[power % self.omega]

    def apply(self, xvec, power: int = 1):
        return mat_vec(self.matrix_power(power), xvec)

    def act_lambda(self, lam: MonodromyClass, power: int = 1) -> MonodromyClass:
        return MonodromyClass(self.apply(lam.kappa, power), lam.n)

    def eps_index(self, i: int, power: int = 1) -> int:
        for _ in range(power % self.omega):
            i = self.eps[i]
        return i

    def eps_word(self, word, power: int = 1) -> tuple:
        return tuple(self.eps_index(i, power) for i in word)

    def eps_elt(self, w: WeylElt, power: int = 1) -> WeylElt:
        """The group automorphism induced by conjugation with delta."""
        return w.group.from_word(self.eps_word(w.word, power))

    def is_trivial(self) -> bool:
        return self.omega == 1

    def __repr__(self):
        return "DiagramTwist(eps=%r, omega=%d)" % (self.eps, self.omega)


@dataclass(frozen=True)
class ExtendedWeyl:
    """An element w * d^i of the extended group (d the twist generator)."""

    w: WeylElt
    d_power: int


def ext_mul(a: ExtendedWeyl, b: ExtendedWeyl, twist: DiagramTwist) -> ExtendedWeyl:
    """(w, i)(w', i') = (w * eps^i(w'), i + i')."""
    return ExtendedWeyl(
        a.w * twist.eps_elt(b.w, a.d_power), (a.d_power + b.d_power) % twist.omega
    )


def ext_act(a: ExtendedWeyl, lam: MonodromyClass, twist: DiagramTwist) -> MonodromyClass:
    return act_w(a.w, twist.act_lambda(lam, a.d_power))


def r_lambda(datum: RootDatum, lam: MonodromyClass) -> frozenset:
    """Roots (both signs) whose coroot pairs to zero with kappa mod n."""
    out = set()
    for root, covec in datum.positive_roots:
        if dot(covec, lam.kappa) % lam.n == 0:
            out.add(root)
            out.add(tuple(-x for x in root))
    return frozenset(out)


def simple_fixes(datum: RootDatum, i: int, lam: MonodromyClass) -> bool:
    """Does the i-th simple reflection lie in the reflection group of lam?"""
    return dot(datum.simple_coroots[i], lam.kappa) % lam.n == 0


@lru_cache(maxsize=None)
def w_lambda_elements(group: WeylGroup, lam: MonodromyClass) -> frozenset:
    """The subgroup generated by the reflections of the root set of lam.

    Closure by multiplication; the inversion-set shortcut (all inversion
    roots pairing to zero) is NOT equivalent: it misses reflections whose
    root is non-simple, e.g. the long element of A2 at kappa = (1,1), n = 2.
    """
    gens = {group.reflection(root) for root in r_lambda(group.datum, lam)}
    elems = {group.identity}
    frontier = [group.identity]
    while frontier:
        nxt = []
        for w in frontier:
            for g in gens:
                w2 = w * g
                if w2 not in elems:
                    elems.add(w2)
                    nxt.append(w2)
        frontier = nxt
    return frozenset(elems)


def in_w_lambda(w: WeylElt, lam: MonodromyClass) -> bool:
    """Membership in the reflection subgroup attached to lam."""
    return w in w_lambda_elements(w.group, lam)


def in_w_bullet_lambda(a: ExtendedWeyl, lam: MonodromyClass, twist: DiagramTwist) -> bool:
    """Membership in the extended stabilizer of lam."""
    return ext_act(a, lam, twist) == lam
