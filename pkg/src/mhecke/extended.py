"""The twisted extension of the algebra by the diagram twist generator [D].

Elements are graded by powers of [D] (exponents mod omega); moving [D] past
an algebra element applies the induced automorphism a_d.  The bar involution
extends componentwise, which is compatible because bar commutes with a_d.
"""

from __future__ import annotations

from .hecke import HeckeContext, HeckeElt, bar, mul
from .laurent import LaurentInt
from .monodromy import DiagramTwist, act_w

__all__ = ["ExtElt", "a_d", "ext_from", "d_gen", "ext_mul", "ext_bar", "render_ext", "rotate"]


def a_d(h: HeckeElt, twist: DiagramTwist, power: int = 1) -> HeckeElt:
    """The algebra automorphism T_w 1_lam -> T_{eps(w)} 1_{delta(lam)}."""
    out = {}
    for (w, lam), c in h._terms.items():
        out[(twist.eps_elt(w, power), twist.act_lambda(lam, power))] = c
    return HeckeElt(out)


class ExtElt:
    """A sum of components h_i * [D]^i, i taken mod the twist order."""

    __slots__ = ("components",)

    def __init__(self, components=None):
        if components is None:
            components = {}
        self.components = {i: h for i, h in components.items() if h}

    def component(self, i: int) -> HeckeElt:
        return self.components.get(i, HeckeElt())

    def __bool__(self):
        return bool(self.components)

    def __eq__(self, other):
        if not isinstance(other, ExtElt):
            return NotImplemented
        return self.components == other.components

    def __add__(self, other):
        if not isinstance(other, ExtElt):
            return NotImplemented
        out = dict(self.components)
        for i, h in other.components.items():
            out[i] = out.get(i, HeckeElt()) + h
        return ExtElt(out)

    def __neg__(self):
        return ExtElt({i: -h for i, h in self.components.items()})

    def __sub__(self, other):
        if not isinstance(other, ExtElt):
            return NotImplemented
        return self + (-other)

    def scale(self, c) -> "ExtElt":
        return ExtElt({i: h.scale(c) for i, h in self.components.items()})

    def __mul__(self, other):
        if isinstance(other, (int, LaurentInt)):
            return self.scale(other)
        return NotImplemented

    __rmul__ = __mul__

    def __repr__(self):
        return "<ExtElt %s>" % render_ext(self)


def ext_from(h: HeckeElt, d_power: int = 0) -> ExtElt:
    return ExtElt({d_power: h})


def d_gen(ctx: HeckeContext) -> ExtElt:
    """The group-like generator [D] (the unit in degree 1)."""
    return ExtElt({1 % ctx.twist.omega: ctx.unit()})


def ext_mul(x: ExtElt, y: ExtElt, twist: DiagramTwist) -> ExtElt:
    """(h [D]^i)(h' [D]^i') = h a_d^i(h') [D]^(i+i')."""
    out = {}
    for i, h in x.components.items():
        for j, h2 in y.components.items():
            k = (i + j) % twist.omega
            out[k] = out.get(k, HeckeElt()) + mul(h, a_d(h2, twist, i))
    return ExtElt(out)


def ext_bar(x: ExtElt) -> ExtElt:
    """Componentwise bar; a ring involution of the extension."""
    return ExtElt({i: bar(h) for i, h in x.components.items()})


def render_ext(x: ExtElt) -> str:
    if not x:
        return "0"
    parts = []
    for i in sorted(x.components):
        h = x.components[i]
        if i == 0:
            parts.append(str(h))
        else:
            tag = "[D]" if i == 1 else "[D]^%d" % i
            parts.append("(%s)*%s" % (h, tag))
    return " + ".join(parts)


def rotate(ss, lam, p: int, twist: DiagramTwist, group):
    """Cyclic rotation of C-word data at the split point p (1-based).

    Returns (ss', lam') with ss' = (s_p, ..., s_r, eps(s_1), ..., eps(s_{p-1}))
    and lam' = s_{p-1} ... s_1 lam.  p = 1 leaves the data unchanged; p may
    be r + 1 (full rotation of the word through eps).
    """
    r = len(ss)
    if not 1 <= p <= r + 1:
        raise ValueError("split point out of range")
    head, tail = ss[: p - 1], ss[p - 1 :]
    ss2 = tuple(tail) + tuple(
        None if s is None else twist.eps_index(s) for s in head
    )
    lam2 = lam
    for s in head:
        if s is not None:
            lam2 = act_w(group.simples[s], lam2)
    return ss2, lam2
