"""Finite root data and their Weyl groups.

A datum is a choice of simple roots in X = Z^rank and simple coroots in the
dual lattice Y, paired by the dot product.  The full (finite) group is
materialized up front: elements are the integer matrices acting on X, so
equality never depends on a choice of word and braid relations need no
special handling.  Each element caches its length and the lexicographically
least reduced word, found by breadth-first search over right multiplication.

>>> datum = RootDatum([(2, -1), (-1, 2)], [(1, 0), (0, 1)])   # type A2
>>> len(datum.positive_roots)
3
>>> W = WeylGroup(datum)
>>> len(W.elements)
6
>>> W.from_word((0, 1, 0)) == W.from_word((1, 0, 1))
True
"""

from __future__ import annotations

from enum import Enum

__all__ = ["RootDatum", "WeylElt", "WeylGroup", "YsCase", "dot", "mat_vec", "mat_mul"]


def dot(yvec, xvec) -> int:
    return sum(a * b for a, b in zip(yvec, xvec))


def mat_vec(m, vec):
    return tuple(dot(row, vec) for row in m)


def mat_mul(a, b):
    cols = tuple(zip(*b))
    return tuple(tuple(dot(row, col) for col in cols) for row in a)


def identity_mat(k):
    return tuple(tuple(1 if i == j else 0 for j in range(k)) for i in range(k))


class RootDatum:
    """Simple roots/coroots in dual lattices, with the root closure attached.

    Positive roots are generated by reflecting the simples (coroots are
    reflected in parallel so the pairing is available for every root); the
    closure is guarded, and data that fail to close are rejected.
    """

    def __init__(self, simple_roots, simple_coroots):
        self.simple_roots = tuple(tuple(int(x) for x in a) for a in simple_roots)
        self.simple_coroots = tuple(tuple(int(x) for x in a) for a in simple_coroots)
        if len(self.simple_roots) != len(self.simple_coroots):
            raise ValueError("need as many coroots as roots")
        if not self.simple_roots:
            raise ValueError("need at least one simple root")
        self.rank = len(self.simple_roots[0])
        for vec in self.simple_roots + self.simple_coroots:
            if len(vec) != self.rank:
                raise ValueError("inconsistent vector lengths")
        for i, (a, av) in enumerate(zip(self.simple_roots, self.simple_coroots)):
            if dot(av, a) != 2:
                raise ValueError("<coroot_%d, root_%d> = %d, expected 2" % (i, i, dot(av, a)))
        self.num_simples = len(self.simple_roots)
        self.cartan = tuple(
            tuple(dot(av, a) for a in self.simple_roots) for av in self.simple_coroots
        )
        self._close_roots()

    def _close_roots(self):
        # orbit of the simples under all simple reflections, coroots and
        # simple-basis coordinates carried along; the coordinate sign tells
        # positive from negative
        m = self.num_simples
        unit = lambda i: tuple(1 if j == i else 0 for j in range(m))
        seen = {}
        for i, (a, av) in enumerate(zip(self.simple_roots, self.simple_coroots)):
            seen[a] = (av, unit(i))
        frontier = list(seen)
        for _ in range(10 * self.rank * self.rank):
            new = []
            for root in frontier:
                covec, coords = seen[root]
                for i in range(m):
                    k = dot(self.simple_coroots[i], root)
                    r2 = tuple(x - k * a for x, a in zip(root, self.simple_roots[i]))
                    if r2 in seen:
                        continue
                    kc = dot(covec, self.simple_roots[i])
                    c2 = tuple(x - kc * a for x, a in zip(covec, self.simple_coroots[i]))
                    coords2 = tuple(
                        x - (k if j == i else 0) for j, x in enumerate(coords)
                    )
                    seen[r2] = (c2, coords2)
                    new.append(r2)
            if not new:
                break
            frontier = new
        else:
            raise ValueError("not finite type: root closure did not terminate")
        pos = []
        for root, (covec, coords) in seen.items():
            if all(c >= 0 for c in coords):
                pos.append((sum(coords), coords, root, covec))
            elif not all(c <= 0 for c in coords):
                raise ValueError("not finite type: root with mixed-sign coordinates")
        pos.sort()
        self.positive_roots = tuple((root, covec) for _, _, root, covec in pos)
        self._coroot = {root: covec for root, covec in self.positive_roots}
        self._coroot.update(
            (tuple(-x for x in root), tuple(-x for x in covec))
            for root, covec in self.positive_roots
        )
        self._positive = frozenset(root for root, _ in self.positive_roots)

    def is_root(self, vec) -> bool:
        return tuple(vec) in self._coroot

    def is_positive_root(self, vec) -> bool:
        return tuple(vec) in self._positive

    def coroot(self, root):
        """The coroot paired with a root (either sign)."""
        try:
            return self._coroot[tuple(root)]
        except KeyError:
            raise ValueError("%r is not a root" % (root,)) from None

    def reflection_matrix(self, root):
        """Matrix of s_root on X:  x -> x - <coroot, x> root."""
        covec = self.coroot(root)
        root = tuple(root)
        k = self.rank
        return tuple(
            tuple((1 if i == j else 0) - covec[j] * root[i] for j in range(k))
            for i in range(k)
        )

    def __repr__(self):
        return "RootDatum(%r, %r)" % (list(self.simple_roots), list(self.simple_coroots))


class WeylElt:
    """A group element: an integer matrix on X with cached length and word.

    Equality is matrix equality within one group; the cached word is the
    lexicographically least reduced word (simple indices, 0-based).
    """

    __slots__ = ("group", "matrix", "word", "length")

    def __init__(self, group, matrix, word):
        self.group = group
        self.matrix = matrix
        self.word = word
        self.length = len(word)

    def __eq__(self, other):
        if not isinstance(other, WeylElt):
            return NotImplemented
        return self.group is other.group and self.matrix == other.matrix

    def __hash__(self):
        return hash(self.matrix)

    def __mul__(self, other):
        if not isinstance(other, WeylElt):
            return NotImplemented
        return self.group.element(mat_mul(self.matrix, other.matrix))

    def inverse(self):
        inv = self.group._inverses.get(self)
        if inv is None:
            inv = self.group.from_word(self.word[::-1])
            self.group._inverses[self] = inv
        return inv

    def apply(self, xvec):
        """Action on the character lattice X."""
        return mat_vec(self.matrix, xvec)

    def __repr__(self):
        return "WeylElt(%s)" % (",".join(str(i + 1) for i in self.word) or "e")


class YsCase(Enum):
    """The three possibilities for y*s with y a minimal coset representative."""

    ASCENT = "ascent"
    DESCENT = "descent"
    FOLD = "fold"


class WeylGroup:
    """The finite group generated by the simple reflections of a datum.

    ``elements`` is sorted by (length, word), the order used for every
    deterministic table in the package.
    """

    def __init__(self, datum: RootDatum):
        self.datum = datum
        self.simple_matrices = tuple(
            datum.reflection_matrix(a) for a in datum.simple_roots
        )
        self._by_matrix = {}
        ident = WeylElt(self, identity_mat(datum.rank), ())
        self._by_matrix[ident.matrix] = ident
        order = [ident]
        queue = [ident]
        while queue:
            nxt = []
            for w in queue:
                for i, smat in enumerate(self.simple_matrices):
                    m2 = mat_mul(w.matrix, smat)
                    if m2 not in self._by_matrix:
                        w2 = WeylElt(self, m2, w.word + (i,))
                        self._by_matrix[m2] = w2
                        order.append(w2)
                        nxt.append(w2)
            queue = nxt
        self.elements = tuple(order)
        self.identity = ident
        self.simples = tuple(self._by_matrix[m] for m in self.simple_matrices)
        for w in self.elements:
            assert w.length == len(self.inversions(w)), "length/word mismatch"
        self._coset_reps = {}
        self._inverses = {}
        self._min_rep_cache = {}
        self._classify_cache = {}

    def element(self, matrix) -> WeylElt:
        try:
            return self._by_matrix[matrix]
        except KeyError:
            raise ValueError("matrix is not in the Weyl group") from None

    def simple(self, i: int) -> WeylElt:
        return self.simples[i]

    def from_word(self, word) -> WeylElt:
        w = self.identity
        for i in word:
            w = self.element(mat_mul(w.matrix, self.simple_matrices[i]))
        return w

    def reflection(self, root) -> WeylElt:
        return self.element(self.datum.reflection_matrix(root))

    def inversions(self, w: WeylElt) -> frozenset:
        """N(w): positive roots sent to negative roots."""
        return frozenset(
            root
            for root, _ in self.datum.positive_roots
            if not self.datum.is_positive_root(w.apply(root))
        )

    # -- parabolic structure ------------------------------------------------

    def is_min_rep(self, w: WeylElt, J) -> bool:
        """Is w the shortest element of W_J * w?"""
        key = (w, frozenset(J))
        hit = self._min_rep_cache.get(key)
        if hit is None:
            inv = w.inverse()
            hit = all(
                self.datum.is_positive_root(inv.apply(self.datum.simple_roots[j]))
                for j in key[1]
            )
            self._min_rep_cache[key] = hit
        return hit

    def min_coset_reps(self, J) -> tuple:
        """^J W, sorted by (length, word)."""
        J = frozenset(J)
        if J not in self._coset_reps:
            self._coset_reps[J] = tuple(
                w for w in self.elements if self.is_min_rep(w, J)
            )
        return self._coset_reps[J]

    def parabolic_elements(self, J) -> tuple:
        """W_J; reduced words of parabolic elements only use letters in J."""
        J = frozenset(J)
        return tuple(w for w in self.elements if set(w.word) <= J)

    def coset_decompose(self, w: WeylElt, J):
        """w = w_J * y with w_J in W_J, y in ^J W, lengths adding."""
        J = sorted(set(J))
        prefix = []
        y = w
        while True:
            yinv = y.inverse()
            for j in J:
                if not self.datum.is_positive_root(
                    yinv.apply(self.datum.simple_roots[j])
                ):
                    prefix.append(j)
                    y = self.simples[j] * y
                    break
            else:
                break
        w_j = self.from_word(prefix)
        assert w_j.length + y.length == w.length
        return w_j, y

    def classify_ys(self, y: WeylElt, s: int, J):
        """The trichotomy for y*s: ASCENT, DESCENT, or FOLD.

        Returns (case, t) where t is the simple index of y s y^-1 in the
        FOLD case and None otherwise.
        """
        J = frozenset(J)
        key = (y, s, J)
        hit = self._classify_cache.get(key)
        if hit is not None:
            return hit
        if not self.is_min_rep(y, J):
            raise ValueError("%r is not a minimal coset representative" % y)
        ys = y * self.simples[s]
        if self.is_min_rep(ys, J):
            case = YsCase.ASCENT if ys.length > y.length else YsCase.DESCENT
            result = case, None
        else:
            t = ys * y.inverse()
            for j in J:
                if t == self.simples[j]:
                    assert ys.length == y.length + 1
                    result = YsCase.FOLD, j
                    break
            else:
                raise AssertionError("fold element is not a simple reflection in J")
        self._classify_cache[key] = result
        return result


if __name__ == "__main__":
    import doctest

    doctest.testmod()
