"""
Parabolic walks and the twist-diagonal trace
============================================

Pushing T_y through a C-word expands along stay/move walks in the minimal
coset representatives; summing the closed walks reproduces the diagonal
trace of the coefficient matrix.
"""

from mhecke import (
    HeckeContext,
    MonodromyClass,
    ParabolicContext,
    RootDatum,
    WeylGroup,
    a_matrix,
    psi_sum,
    render,
    xi_entries,
)

# the rank-two simply laced datum; J keeps the first simple reflection
datum = RootDatum([[2, -1], [-1, 2]], [[1, 0], [0, 1]])
group = WeylGroup(datum)
ctx = HeckeContext(group, 2)
J = frozenset({0})
pctx = ParabolicContext(ctx, J)

print("coset representatives:", [y.word or "e" for y in pctx.reps])

# enumerate the closed walks for a two-letter word; each carries the tilde
# letters (kept), the emitted letters (folded into J) and a degree
ss = (0, 1)
lam = MonodromyClass((1, 0), 2)
for wd in xi_entries(ss, lam, J, group, ctx.twist):
    print(
        "walk",
        [y.word or "e" for y in wd.ys],
        "emits",
        wd.tt,
        "degree",
        wd.degree,
    )

# the walk sum lives in the subalgebra spanned by J
psi = psi_sum(ss, lam, J, group, ctx.twist)
print("walk sum:", render(psi))

# the same element appears as the diagonal trace of the coefficient matrix
# of T_y times the C-word
amat = a_matrix(ss, lam, pctx)
trace = None
for y in pctx.reps:
    entry = amat.entry(y, y)
    trace = entry if trace is None else trace + entry
print("matrix trace:", render(trace))
print("equal:", trace == psi)
