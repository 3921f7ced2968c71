"""
Multiplying basis symbols and applying the bar involution
=========================================================

A walk through the rank-one algebra with two classes: the quadratic
relation splits according to the class, and bar rescales C-words by an
exact power of v.
"""

from mhecke import (
    LaurentInt,
    MonodromyClass,
    RootDatum,
    T_elt,
    WeylGroup,
    bar,
    c_word,
    mul,
    render,
)

# the rank-one datum in fundamental weight coordinates: one root (2), one
# coroot (1), so the pairing of the coroot with kappa is just kappa itself
datum = RootDatum([[2]], [[1]])
group = WeylGroup(datum)
s = group.simples[0]

# the two classes mod 2: kappa = 0 pairs to zero with the coroot, kappa = 1
# does not, and only the first receives the (v^2 - 1) correction term
lam0 = MonodromyClass((0,), 2)
lam1 = MonodromyClass((1,), 2)
print("T_s T_s at kappa=0:", render(mul(T_elt(s, lam0), T_elt(s, lam0))))
print("T_s T_s at kappa=1:", render(mul(T_elt(s, lam1), T_elt(s, lam1))))

# the full T_s (sum over both classes) shows the two behaviours at once
print("full square:       ", render(mul(T_elt(s, n=2), T_elt(s, n=2))))

# bar sends v to v^-1 and T_w to the inverse of T at the inverse element;
# it is a ring map, so C-words just pick up v^(-2 length)
cw = c_word(group, (0, 0), lam0)
print("C-word:            ", render(cw))
print("bar of the C-word: ", render(bar(cw)))
print("agree after shift: ", bar(cw) == cw.scale(LaurentInt.parse("v^-4")))
