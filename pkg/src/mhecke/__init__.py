"""Multi-class Hecke algebras with a diagram twist.

Exact computations in the Hecke algebra attached to a finite root datum, a
modulus n and an optional twist of the Dynkin diagram: one T-basis symbol
per (Weyl element, character-lattice class mod n) pair.  On top of the
algebra sit the bar involution, C-elements and their words, the extension
by the twist generator, walk combinatorics over minimal coset
representatives, coefficient matrices over a parabolic subalgebra, and a
membership test for the span of twisted commutators.

Everything is computed over the integer Laurent ring in v; no floating
point anywhere.
"""

from .extended import ExtElt, a_d, d_gen, ext_bar, ext_from, ext_mul, render_ext, rotate
from .hecke import (
    HeckeContext,
    HeckeElt,
    T_elt,
    bar,
    c_elt,
    c_word,
    idem,
    inv_Tw,
    left_mul_Ts,
    mul,
    parse_elt,
    render,
    right_mul_Ts,
    unit,
)
from .laurent import LaurentInt
from .monodromy import (
    DiagramTwist,
    ExtendedWeyl,
    MonodromyClass,
    act_w,
    all_classes,
    ext_act,
    in_w_bullet_lambda,
    in_w_lambda,
    r_lambda,
    simple_fixes,
    w_lambda_elements,
)
from .parabolic import (
    CoefMatrix,
    ParabolicContext,
    a_matrix,
    c_matrix,
    cocenter_reduce,
    d_matrix,
    decompose,
    matrix_product,
    recompose,
)
from .root_datum import RootDatum, WeylElt, WeylGroup, YsCase
from .subexpr import (
    WalkData,
    WalkSets,
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
    walks_from,
    xi_entries,
)

__version__ = "0.1.0"
