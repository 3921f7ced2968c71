"""The monodromic Hecke algebra: T_w 1_lam basis, products, bar, C-elements.

Elements are sparse linear combinations of basis symbols (w, lam) with
Laurent coefficients.  The quadratic relation is monodromic: squaring T_s
produces the extra (v^2-1) term only against classes fixed by s.  All the
context a product needs travels inside the keys (the group reference on w,
the modulus on lam), so elements multiply without an explicit algebra
handle; ``HeckeContext`` below just bundles a datum, modulus and twist for
code that enumerates classes or basis symbols.
"""

from __future__ import annotations

import re
from functools import lru_cache

from .laurent import ONE, ZERO, LaurentInt
from .monodromy import MonodromyClass, act_w, all_classes, simple_fixes
from .root_datum import WeylElt, WeylGroup

__all__ = [
    "HeckeElt",
    "HeckeContext",
    "T_elt",
    "idem",
    "unit",
    "left_mul_Ts",
    "right_mul_Ts",
    "mul",
    "inv_Tw",
    "bar",
    "c_elt",
    "c_word",
    "render",
    "parse_elt",
]

V2 = LaurentInt({2: 1})
V2M1 = LaurentInt({2: 1, 0: -1})
VM2 = LaurentInt({-2: 1})
VM2M1 = LaurentInt({-2: 1, 0: -1})


def _term_key(key):
    w, lam = key
    return (w.length, w.word, lam.kappa)


class HeckeElt:
    """A finite Laurent combination of basis symbols T_w 1_lam.

    Immutable by convention; zero coefficients are pruned at construction.
    Addition, subtraction and scalar multiples work coefficientwise; ``*``
    against another element is the algebra product.
    """

    __slots__ = ("_terms",)

    def __init__(self, terms=None):
        if terms is None:
            terms = {}
        self._terms = {k: c for k, c in terms.items() if c}

    def items(self):
        """Terms sorted by (length, word, kappa)."""
        return sorted(self._terms.items(), key=lambda kv: _term_key(kv[0]))

    def coeff(self, w, lam) -> LaurentInt:
        return self._terms.get((w, lam), ZERO)

    def support(self):
        return set(self._terms)

    def __bool__(self):
        return bool(self._terms)

    def __eq__(self, other):
        if not isinstance(other, HeckeElt):
            return NotImplemented
        return self._terms == other._terms

    def __add__(self, other):
        if not isinstance(other, HeckeElt):
            return NotImplemented
        out = dict(self._terms)
        for k, c in other._terms.items():
            out[k] = out.get(k, ZERO) + c
        return HeckeElt(out)

    def __neg__(self):
        return HeckeElt({k: -c for k, c in self._terms.items()})

    def __sub__(self, other):
        if not isinstance(other, HeckeElt):
            return NotImplemented
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, HeckeElt):
            return mul(self, other)
        if isinstance(other, (int, LaurentInt)):
            return self.scale(other)
        return NotImplemented

    def __rmul__(self, other):
        if isinstance(other, (int, LaurentInt)):
            return self.scale(other)
        return NotImplemented

    def scale(self, c) -> "HeckeElt":
        if isinstance(c, int):
            c = LaurentInt.from_int(c)
        return HeckeElt({k: c * v for k, v in self._terms.items()})

    def __str__(self):
        return render(self)

    def __repr__(self):
        return "<HeckeElt %s>" % render(self)


def T_elt(w: WeylElt, lam: MonodromyClass = None, n: int = None) -> HeckeElt:
    """T_w 1_lam, or the full T_w = sum over all classes when lam is None."""
    if lam is not None:
        return HeckeElt({(w, lam): ONE})
    if n is None:
        raise ValueError("need either lam or n")
    return HeckeElt(
        {(w, lam): ONE for lam in all_classes(w.group.datum.rank, n)}
    )


def idem(group: WeylGroup, lam: MonodromyClass) -> HeckeElt:
    """The idempotent 1_lam."""
    return HeckeElt({(group.identity, lam): ONE})


def unit(group: WeylGroup, n: int) -> HeckeElt:
    """The unit, sum of all idempotents."""
    return T_elt(group.identity, n=n)


def right_mul_Ts(h: HeckeElt, s: int) -> HeckeElt:
    """h * T_s.  Descent terms test s against the right monodromy class."""
    out = {}
    for (w, lam), c in h._terms.items():
        group = w.group
        datum = group.datum
        slam = act_w(group.simples[s], lam)
        ws = w * group.simples[s]
        if ws.length > w.length:
            k = (ws, slam)
            out[k] = out.get(k, ZERO) + c
        else:
            k = (ws, slam)
            out[k] = out.get(k, ZERO) + c * V2
            if simple_fixes(datum, s, lam):
                k = (w, slam)
                out[k] = out.get(k, ZERO) + c * V2M1
    return HeckeElt(out)


def left_mul_Ts(s: int, h: HeckeElt) -> HeckeElt:
    """T_s * h.  Descent terms test s against the left monodromy class w(lam)."""
    out = {}
    for (w, lam), c in h._terms.items():
        group = w.group
        datum = group.datum
        sw = group.simples[s] * w
        if sw.length > w.length:
            k = (sw, lam)
            out[k] = out.get(k, ZERO) + c
        else:
            k = (sw, lam)
            out[k] = out.get(k, ZERO) + c * V2
            if simple_fixes(datum, s, act_w(w, lam)):
                k = (w, lam)
                out[k] = out.get(k, ZERO) + c * V2M1
    return HeckeElt(out)


def mul(a: HeckeElt, b: HeckeElt) -> HeckeElt:
    """Algebra product; bilinear over the T_w 1_lam basis.

    For each right factor T_w' 1_lam' the left element is pushed through the
    reduced word of w' one letter at a time, then cut down to the terms
    whose right class matches lam'.
    """
    out = {}
    pushed = {}  # word of w' -> a * T_w'
    for (w2, lam2), c2 in b._terms.items():
        piece = pushed.get(w2.word)
        if piece is None:
            piece = a
            for letter in w2.word:
                piece = right_mul_Ts(piece, letter)
            pushed[w2.word] = piece
        for (w, lam), c in piece._terms.items():
            if lam == lam2:
                k = (w, lam)
                out[k] = out.get(k, ZERO) + c * c2
    return HeckeElt(out)


def _inv_Ts(group: WeylGroup, n: int, s: int) -> HeckeElt:
    """T_s^-1 = v^-2 T_s + (v^-2 - 1) sum of 1_lam over classes fixed by s."""
    terms = {}
    for lam in all_classes(group.datum.rank, n):
        terms[(group.simples[s], lam)] = VM2
        if simple_fixes(group.datum, s, lam):
            terms[(group.identity, lam)] = VM2M1
    return HeckeElt(terms)


@lru_cache(maxsize=None)
def inv_Tw(w: WeylElt, n: int) -> HeckeElt:
    """The two-sided inverse of the full T_w, along a reduced word of w."""
    group = w.group
    out = unit(group, n)
    for s in w.word[::-1]:
        out = mul(out, _inv_Ts(group, n, s))
    return out


def bar(h: HeckeElt) -> HeckeElt:
    """The bar involution: v -> v^-1 and T_w 1_lam -> (T_{w^-1})^-1 1_lam.

    A ring homomorphism (not an anti-homomorphism); squares to the identity.
    """
    out = HeckeElt()
    for (w, lam), c in h._terms.items():
        inv = inv_Tw(w.inverse(), lam.n)
        keep = HeckeElt(
            {k: v for k, v in inv._terms.items() if k[1] == lam}
        )
        out = out + keep.scale(c.bar())
    return out


def c_elt(group: WeylGroup, letter, lam: MonodromyClass) -> HeckeElt:
    """(T_s + u) 1_lam with u = 1 exactly when s is simple and fixes lam.

    ``letter`` is a simple index or None for the neutral letter, whose
    C-element is just the idempotent.
    """
    if letter is None:
        return idem(group, lam)
    u = 1 if simple_fixes(group.datum, letter, lam) else 0
    terms = {(group.simples[letter], lam): ONE}
    if u:
        terms[(group.identity, lam)] = ONE
    return HeckeElt(terms)


def c_word(group: WeylGroup, ss, lam: MonodromyClass) -> HeckeElt:
    """Ordered product of C-factors with shifted classes.

    Factor i is taken at the class s_{i+1} ... s_r lam; the empty word gives
    the idempotent.
    """
    return _c_word_cached(group, tuple(ss), lam)


@lru_cache(maxsize=None)
def _c_word_cached(group: WeylGroup, ss, lam: MonodromyClass) -> HeckeElt:
    r = len(ss)
    mus = [None] * r
    cur = lam
    for i in range(r - 1, -1, -1):
        mus[i] = cur
        if ss[i] is not None:
            cur = act_w(group.simples[ss[i]], cur)
    out = idem(group, mus[0]) if r else idem(group, lam)
    first = True
    for letter, mu in zip(ss, mus):
        factor = c_elt(group, letter, mu)
        out = factor if first else mul(out, factor)
        first = False
    return out


# -- rendering ---------------------------------------------------------------


def _coef_str(c: LaurentInt) -> str:
    if c == ONE:
        return ""
    terms = c.terms
    if len(terms) == 1 and terms[0][1] > 0:
        return "%s*" % c
    return "(%s)*" % c


def render(h: HeckeElt) -> str:
    """Deterministic text form: "coef*T[word]*1[kappa]" terms joined by " + "."""
    if not h:
        return "0"
    parts = []
    for (w, lam), c in h.items():
        word = ",".join(str(i + 1) for i in w.word)
        kappa = ",".join(str(x) for x in lam.kappa)
        parts.append("%sT[%s]*1[%s]" % (_coef_str(c), word, kappa))
    return " + ".join(parts)


_TERM_BODY = re.compile(
    r"T\[(?P<word>[\d,\s]*)\]\s*\*\s*1\[\s*(?:k\s*=\s*)?(?P<kappa>[-\d,\s]*)\]\s*$"
)


def _split_terms(text: str):
    depth = 0
    start = 0
    i = 0
    while i < len(text):
        ch = text[i]
        if ch == "(":
            depth += 1
        elif ch == ")":
            depth -= 1
        elif depth == 0 and text.startswith(" + ", i):
            yield text[start:i]
            i += 3
            start = i
            continue
        i += 1
    yield text[start:]


def parse_elt(text: str, group: WeylGroup, n: int) -> HeckeElt:
    """Inverse of render(); accepts any word (not only canonical ones)."""
    text = text.strip()
    if text == "0":
        return HeckeElt()
    out = HeckeElt()
    for chunk in _split_terms(text):
        chunk = chunk.strip()
        at = chunk.find("T[")
        if at < 0:
            raise ValueError("no T[...] in term %r" % chunk)
        coef_text = chunk[:at].strip()
        if coef_text.endswith("*"):
            coef_text = coef_text[:-1].strip()
        if not coef_text:
            coef = ONE
        else:
            if coef_text.startswith("(") and coef_text.endswith(")"):
                coef_text = coef_text[1:-1]
            coef = LaurentInt.parse(coef_text)
        m = _TERM_BODY.match(chunk[at:])
        if m is None:
            raise ValueError("bad term %r" % chunk)
        word = tuple(
            int(x) - 1 for x in m.group("word").replace(" ", "").split(",") if x
        )
        if any(not 0 <= i < len(group.simples) for i in word):
            raise ValueError("simple index out of range in %r" % chunk)
        kappa = tuple(
            int(x) for x in m.group("kappa").replace(" ", "").split(",") if x
        )
        if len(kappa) != group.datum.rank:
            raise ValueError("kappa has wrong rank in %r" % chunk)
        w = group.from_word(word)
        lam = MonodromyClass(kappa, n)
        out = out + HeckeElt({(w, lam): coef})
    return out


class HeckeContext:
    """A datum with modulus and twist: enumerates classes and basis symbols.

    Read-only; share freely.  ``twist`` defaults to the identity twist.
    """

    def __init__(self, group: WeylGroup, n: int, twist=None):
        from .monodromy import DiagramTwist

        self.group = group
        self.datum = group.datum
        self.n = int(n)
        self.twist = twist if twist is not None else DiagramTwist.identity(group.datum)
        self.classes = all_classes(group.datum.rank, self.n)

    def basis(self):
        for w in self.group.elements:
            for lam in self.classes:
                yield w, lam

    def dim(self) -> int:
        return len(self.group.elements) * len(self.classes)

    def unit(self) -> HeckeElt:
        return unit(self.group, self.n)

    def T(self, w, lam=None) -> HeckeElt:
        return T_elt(w, lam, n=self.n)

    def idem(self, lam) -> HeckeElt:
        return idem(self.group, lam)

    def c_elt(self, letter, lam) -> HeckeElt:
        return c_elt(self.group, letter, lam)

    def c_word(self, ss, lam) -> HeckeElt:
        return c_word(self.group, ss, lam)

    def parse(self, text: str) -> HeckeElt:
        return parse_elt(text, self.group, self.n)

    def __repr__(self):
        return "HeckeContext(rank=%d, n=%d, omega=%d)" % (
            self.datum.rank,
            self.n,
            self.twist.omega,
        )
