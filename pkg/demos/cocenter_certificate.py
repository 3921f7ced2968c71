"""
A twisted cocenter membership certificate
=========================================

With the diagram flip on the rank-two datum, the walk sum Psi satisfies an
exact symmetry modulo twisted commutators: Psi [D] minus v^(2r) times its
bar image lies in the span of h h'[D] - h'[D] h.  The difference below is
visibly nonzero, so the certificate is not vacuous; the reduction is exact
linear algebra over the Laurent ring, no specialization of v.
"""

from mhecke import (
    DiagramTwist,
    HeckeContext,
    MonodromyClass,
    RootDatum,
    WeylGroup,
    cocenter_reduce,
    ext_bar,
    ext_from,
    psi_sum,
    render,
)
from mhecke.laurent import LaurentInt

datum = RootDatum([[2, -1], [-1, 2]], [[1, 0], [0, 1]])
group = WeylGroup(datum)
flip = DiagramTwist(datum, [[0, 1], [1, 0]], 2)
ctx = HeckeContext(group, 2, flip)

# one letter, a class the flip does not fix, no parabolic restriction
ss = (0,)
lam = MonodromyClass((1, 0), 2)
psi = psi_sum(ss, lam, frozenset(), group, flip)
print("walk sum:", render(psi))

x = ext_from(psi, 1) - ext_bar(ext_from(psi, 1)).scale(LaurentInt({2: 1}))
print("difference component:", render(x.component(1)))
print("in the twisted-commutator span:", cocenter_reduce(x, ctx))

# a negative control: the unit in degree zero is never a twisted
# commutator, because every generator sits in degree one
print(
    "unit in degree zero is a member:",
    cocenter_reduce(ext_from(ctx.unit(), 0), ctx),
)
