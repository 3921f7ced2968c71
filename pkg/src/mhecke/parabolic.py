"""Decomposition over a parabolic subalgebra and the twisted cocenter test.

The algebra is a free left module over the subalgebra spanned by terms with
word inside J, with basis T_y for y ranging over the minimal coset
representatives.  Three coefficient matrices over that subalgebra matter
here: d (rows of inverted representatives), its inverse c, and a (rows of
T_y times a fixed C-word).  The twist diagonal of a has trace equal to the
walk sum from the combinatorics module, and that trace is the invariant
used in the cocenter membership certificate.
"""

from __future__ import annotations

from dataclasses import dataclass

from .extended import ExtElt, a_d
from .hecke import HeckeContext, HeckeElt, T_elt, c_word, inv_Tw, mul
from .laurent import ONE, ZERO, LaurentInt
from .monodromy import act_w
from .root_datum import WeylElt

__all__ = [
    "ParabolicContext",
    "CoefMatrix",
    "decompose",
    "recompose",
    "d_matrix",
    "c_matrix",
    "a_matrix",
    "matrix_product",
    "cocenter_reduce",
]


class ParabolicContext:
    """A Hecke context together with a subset J of the simple indices."""

    def __init__(self, ctx: HeckeContext, J):
        self.ctx = ctx
        self.group = ctx.group
        self.J = frozenset(J)
        for j in self.J:
            if not 0 <= j < len(ctx.group.simples):
                raise ValueError("J contains a non-simple index: %r" % (j,))
        self.reps = ctx.group.min_coset_reps(self.J)
        self._d = None
        self._c = None

    def d(self) -> "CoefMatrix":
        if self._d is None:
            self._d = d_matrix(self)
        return self._d

    def c(self) -> "CoefMatrix":
        if self._c is None:
            self._c = c_matrix(self)
        return self._c


@dataclass
class CoefMatrix:
    """Square array over the parabolic subalgebra, indexed by coset reps."""

    reps: tuple
    entries: dict

    def entry(self, y: WeylElt, y2: WeylElt) -> HeckeElt:
        return self.entries.get((y, y2), HeckeElt())

    def is_identity(self, pctx: ParabolicContext) -> bool:
        unit = pctx.ctx.unit()
        for y in self.reps:
            for y2 in self.reps:
                want = unit if y == y2 else HeckeElt()
                if self.entry(y, y2) != want:
                    return False
        return True


def decompose(h: HeckeElt, pctx: ParabolicContext) -> dict:
    """Split h as a sum over reps y of (J-part) times T_y.

    Each term T_w 1_lam factors as T_{w_J} T_y with additive lengths; the
    idempotent moves left across T_y, picking up the transported class.
    Returns a dict y -> coefficient in the subalgebra; zero rows omitted.
    """
    rows = {}
    for (w, lam), coef in h.items():
        w_j, y = pctx.group.coset_decompose(w, pctx.J)
        key = (w_j, act_w(y, lam))
        row = rows.setdefault(y, {})
        row[key] = row.get(key, ZERO) + coef
    out = {}
    for y, terms in rows.items():
        elt = HeckeElt(terms)
        if elt:
            out[y] = elt
    return out


def recompose(rows: dict, pctx: ParabolicContext) -> HeckeElt:
    """Inverse of decompose: sum of row times T_y."""
    n = pctx.ctx.n
    out = HeckeElt()
    for y, elt in rows.items():
        out = out + mul(elt, T_elt(y, n=n))
    return out


def d_matrix(pctx: ParabolicContext) -> CoefMatrix:
    """Rows of the inverted representatives: T inverse of y^-1, decomposed.

    Strictly triangular in any length-refining order of the reps, with
    diagonal v^(-2 length) times the unit; that shape is what makes c
    computable by back substitution.
    """
    n = pctx.ctx.n
    entries = {}
    for y in pctx.reps:
        for y2, elt in decompose(inv_Tw(y.inverse(), n), pctx).items():
            entries[(y, y2)] = elt
    return CoefMatrix(pctx.reps, entries)


def c_matrix(pctx: ParabolicContext) -> CoefMatrix:
    """Inverse of d, by back substitution against its triangular shape.

    The diagonal of d is scalar, so each new entry is a previously
    accumulated combination scaled by v^(2 length).
    """
    d = pctx.d()
    reps = pctx.reps
    unit = pctx.ctx.unit()
    entries = {}
    for iy, y in enumerate(reps):
        entries[(y, y)] = unit.scale(LaurentInt({2 * y.length: 1}))
        for j in range(iy - 1, -1, -1):
            yj = reps[j]
            acc = HeckeElt()
            for k in range(j + 1, iy + 1):
                yk = reps[k]
                ck = entries.get((y, yk))
                dk = d.entries.get((yk, yj))
                if ck is not None and dk is not None:
                    acc = acc + mul(ck, dk)
            if acc:
                entries[(y, yj)] = (-acc).scale(LaurentInt({2 * yj.length: 1}))
    return CoefMatrix(reps, entries)


def a_matrix(ss, lam, pctx: ParabolicContext) -> CoefMatrix:
    """Rows of T_y times the C-word at the twisted class."""
    cw = c_word(pctx.group, ss, pctx.ctx.twist.act_lambda(lam))
    n = pctx.ctx.n
    entries = {}
    for y in pctx.reps:
        prod = mul(T_elt(y, n=n), cw)
        for y2, elt in decompose(prod, pctx).items():
            entries[(y, y2)] = elt
    return CoefMatrix(pctx.reps, entries)


def matrix_product(a: CoefMatrix, b: CoefMatrix) -> CoefMatrix:
    assert a.reps == b.reps
    entries = {}
    for y in a.reps:
        for y2 in a.reps:
            acc = HeckeElt()
            for ymid in a.reps:
                left = a.entries.get((y, ymid))
                right = b.entries.get((ymid, y2))
                if left is not None and right is not None:
                    acc = acc + mul(left, right)
            if acc:
                entries[(y, y2)] = acc
    return CoefMatrix(a.reps, entries)


# -- cocenter membership -----------------------------------------------------


def _row_reduce_member(rows: list, target: list) -> bool:
    """Is target in the row span over the fraction field of the scalars?

    Cross-multiplication elimination, no divisions; the residue of target
    after reduction against the echelon rows vanishes exactly when it lies
    in the span.
    """
    rows = [list(r) for r in rows if any(r)]
    t = list(target)
    width = len(t)
    pivot_count = 0
    for col in range(width):
        piv = None
        for r in range(pivot_count, len(rows)):
            if rows[r][col]:
                piv = r
                break
        if piv is None:
            continue
        rows[pivot_count], rows[piv] = rows[piv], rows[pivot_count]
        prow = rows[pivot_count]
        p = prow[col]
        for r in range(pivot_count + 1, len(rows)):
            c = rows[r][col]
            if c:
                rows[r] = [p * x - c * yv for x, yv in zip(rows[r], prow)]
        tc = t[col]
        if tc:
            t = [p * x - tc * yv for x, yv in zip(t, prow)]
        pivot_count += 1
    return all(not x for x in t)


def cocenter_reduce(x: ExtElt, ctx: HeckeContext, max_dim: int = 64) -> bool:
    """Membership of x in the span of the twisted commutators.

    The generators are b (b' D) - (b' D) b over basis pairs; every one of
    them sits in D-degree one, so x must vanish in every other degree and
    its degree-one component must lie in the scalar span of the degree-one
    parts.  Exact elimination over the Laurent ring decides the latter.
    """
    twist = ctx.twist
    sector = 1 % twist.omega
    comps = {}
    for i, h in x.components.items():
        k = i % twist.omega
        comps[k] = comps.get(k, HeckeElt()) + h
    for k, h in comps.items():
        if k != sector and h:
            return False
    basis = [HeckeElt({key: ONE}) for key in ctx.basis()]
    if len(basis) > max_dim:
        raise ValueError(
            "cocenter reduction over %d basis elements exceeds the bound %d"
            % (len(basis), max_dim)
        )
    index = {}
    for k, key in enumerate(ctx.basis()):
        index[key] = k
    width = len(basis)

    def as_vector(h: HeckeElt):
        row = [ZERO] * width
        for key, coef in h.items():
            row[index[key]] = coef
        return row

    rows = []
    for b in basis:
        twisted = a_d(b, twist)
        for b2 in basis:
            gen = mul(b, b2) - mul(b2, twisted)
            if gen:
                rows.append(as_vector(gen))
    return _row_reduce_member(rows, as_vector(comps.get(sector, HeckeElt())))
