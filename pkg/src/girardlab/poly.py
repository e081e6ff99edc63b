"""Sparse multivariate polynomials over the integers.

The ring carries three indexed variable families:

* ``x[i]^(j)`` -- doubly indexed x variables (subscript i, superscript j),
* ``y[l]``     -- singly indexed y variables,
* ``a[j]^(i)`` -- doubly indexed alpha variables (subscript j, superscript i).

Variables are totally ordered by family (all x < all y < all a), then by
(subscript, superscript).  A monomial is a sorted tuple of (variable,
exponent) pairs with positive exponents; a polynomial is a map from
monomials to nonzero integer coefficients.  Every ``Poly`` is canonical by
construction, so equal polynomials compare equal as objects and serialize
to identical text.

Text form: terms are ordered by descending total degree, ties broken by
the variable order, and rendered like ``3*x[1]^(1)*y[2] - y[3]``.  An
exponent >= 2 is a trailing ``^e`` after the variable, e.g. ``y[2]^3`` or
``x[1]^(2)^2`` (the parenthesized superscript is part of the variable
name, the bare one is the power).  ``parse_poly`` round-trips this format
bit-exactly.
"""

from __future__ import annotations

import re
from typing import Iterable, Iterator, Mapping, NamedTuple

__all__ = [
    "FAM_X",
    "FAM_Y",
    "FAM_A",
    "VarId",
    "xvar",
    "yvar",
    "avar",
    "var_text",
    "Monomial",
    "Poly",
    "poly_sum",
    "poly_prod",
    "parse_poly",
    "PolyParseError",
]

# Family codes double as the sort rank: every x precedes every y precedes
# every a.
FAM_X = 0
FAM_Y = 1
FAM_A = 2

_FAMILY_LETTER = {FAM_X: "x", FAM_Y: "y", FAM_A: "a"}
_LETTER_FAMILY = {"x": FAM_X, "y": FAM_Y, "a": FAM_A}


class VarId(NamedTuple):
    """One variable.  Tuple order is the canonical variable order."""

    family: int
    sub: int
    sup: int

    def __str__(self) -> str:
        return var_text(self)


def xvar(i: int, j: int) -> VarId:
    """The variable x[i]^(j)."""
    if i < 1 or j < 1:
        raise ValueError("x variable indices must be >= 1")
    return VarId(FAM_X, i, j)


def yvar(l: int) -> VarId:
    """The variable y[l]."""
    if l < 1:
        raise ValueError("y variable index must be >= 1")
    return VarId(FAM_Y, l, 0)


def avar(j: int, i: int) -> VarId:
    """The variable a[j]^(i) (subscript j, superscript i)."""
    if j < 1 or i < 1:
        raise ValueError("a variable indices must be >= 1")
    return VarId(FAM_A, j, i)


def var_text(v: VarId) -> str:
    letter = _FAMILY_LETTER[v.family]
    if v.family == FAM_Y:
        return f"{letter}[{v.sub}]"
    return f"{letter}[{v.sub}]^({v.sup})"


# A monomial: ((VarId, exponent), ...) sorted by VarId, exponents >= 1.
# The empty tuple is the unit monomial.
Monomial = tuple  # tuple[tuple[VarId, int], ...]

_UNIT: Monomial = ()


def _mono_mul(m1: Monomial, m2: Monomial) -> Monomial:
    """Merge two sorted exponent lists."""
    if not m1:
        return m2
    if not m2:
        return m1
    out = []
    i = j = 0
    while i < len(m1) and j < len(m2):
        v1, e1 = m1[i]
        v2, e2 = m2[j]
        if v1 == v2:
            out.append((v1, e1 + e2))
            i += 1
            j += 1
        elif v1 < v2:
            out.append(m1[i])
            i += 1
        else:
            out.append(m2[j])
            j += 1
    out.extend(m1[i:])
    out.extend(m2[j:])
    return tuple(out)


def _mono_degree(m: Monomial) -> int:
    return sum(e for _, e in m)


def _term_sort_key(m: Monomial):
    # Descending total degree, then the variable order with larger powers
    # of earlier variables first (graded lexicographic).
    return (-_mono_degree(m), tuple((v, -e) for v, e in m))


class Poly:
    """An immutable polynomial with integer coefficients.

    Construct via `Poly.zero()`, `Poly.const(c)`, `Poly.variable(v)` or the
    arithmetic operators; a raw {monomial: coefficient} mapping is also
    accepted and canonicalized (zero coefficients dropped).  Ints coerce in
    mixed arithmetic, so `2 * p + 1` works.
    """

    __slots__ = ("_terms",)

    def __init__(self, terms: Mapping[Monomial, int] | None = None):
        data = {}
        if terms:
            for mono, coeff in terms.items():
                if coeff:
                    data[mono] = coeff
        self._terms = data

    # -- constructors ------------------------------------------------------

    @staticmethod
    def zero() -> "Poly":
        return Poly()

    @staticmethod
    def one() -> "Poly":
        return Poly({_UNIT: 1})

    @staticmethod
    def const(c: int) -> "Poly":
        return Poly({_UNIT: c})

    @staticmethod
    def variable(v: VarId) -> "Poly":
        return Poly({((v, 1),): 1})

    # -- basic queries -----------------------------------------------------

    @property
    def is_zero(self) -> bool:
        return not self._terms

    @property
    def is_constant(self) -> bool:
        return not self._terms or (len(self._terms) == 1 and _UNIT in self._terms)

    def constant_value(self) -> int:
        """The value of a constant polynomial; raises on a non-constant one."""
        if not self._terms:
            return 0
        if self.is_constant:
            return self._terms[_UNIT]
        raise ValueError(f"polynomial is not constant: {self}")

    def term_count(self) -> int:
        return len(self._terms)

    def terms(self) -> Iterator[tuple[Monomial, int]]:
        """(monomial, coefficient) pairs in canonical term order."""
        for mono in sorted(self._terms, key=_term_sort_key):
            yield mono, self._terms[mono]

    def variables(self) -> frozenset[VarId]:
        return frozenset(v for mono in self._terms for v, _ in mono)

    def coefficient(self, mono: Monomial) -> int:
        return self._terms.get(mono, 0)

    # -- arithmetic --------------------------------------------------------

    @staticmethod
    def _coerce(other) -> "Poly | None":
        if isinstance(other, Poly):
            return other
        if isinstance(other, int):
            return Poly.const(other)
        return None

    def __add__(self, other) -> "Poly":
        o = Poly._coerce(other)
        if o is None:
            return NotImplemented
        data = dict(self._terms)
        for mono, coeff in o._terms.items():
            new = data.get(mono, 0) + coeff
            if new:
                data[mono] = new
            else:
                data.pop(mono, None)
        out = Poly()
        out._terms = data
        return out

    __radd__ = __add__

    def __neg__(self) -> "Poly":
        out = Poly()
        out._terms = {m: -c for m, c in self._terms.items()}
        return out

    def __sub__(self, other) -> "Poly":
        o = Poly._coerce(other)
        if o is None:
            return NotImplemented
        return self + (-o)

    def __rsub__(self, other) -> "Poly":
        o = Poly._coerce(other)
        if o is None:
            return NotImplemented
        return o + (-self)

    def __mul__(self, other) -> "Poly":
        o = Poly._coerce(other)
        if o is None:
            return NotImplemented
        data: dict = {}
        for m1, c1 in self._terms.items():
            for m2, c2 in o._terms.items():
                mono = _mono_mul(m1, m2)
                new = data.get(mono, 0) + c1 * c2
                if new:
                    data[mono] = new
                else:
                    del data[mono]
        out = Poly()
        out._terms = data
        return out

    __rmul__ = __mul__

    def __pow__(self, exponent: int) -> "Poly":
        if not isinstance(exponent, int) or exponent < 0:
            raise ValueError("polynomial powers must be integers >= 0")
        out = Poly.one()
        for _ in range(exponent):
            out = out * self
        return out

    def __eq__(self, other) -> bool:
        o = Poly._coerce(other)
        if o is None:
            return NotImplemented
        return self._terms == o._terms

    def __hash__(self) -> int:
        return hash(frozenset(self._terms.items()))

    def __bool__(self) -> bool:
        return bool(self._terms)

    # -- evaluation and text -----------------------------------------------

    def evaluate(self, assignment: Mapping[VarId, int]) -> int:
        """Evaluate at integer values; every variable present must be assigned."""
        total = 0
        for mono, coeff in self._terms.items():
            val = coeff
            for v, e in mono:
                if v not in assignment:
                    raise ValueError(f"assignment missing variable {var_text(v)}")
                val *= assignment[v] ** e
            total += val
        return total

    def __str__(self) -> str:
        if not self._terms:
            return "0"
        parts = []
        for idx, (mono, coeff) in enumerate(self.terms()):
            body = "*".join(
                var_text(v) if e == 1 else f"{var_text(v)}^{e}" for v, e in mono
            )
            mag = abs(coeff)
            if body:
                text = body if mag == 1 else f"{mag}*{body}"
            else:
                text = str(mag)
            if idx == 0:
                parts.append(("-" if coeff < 0 else "") + text)
            else:
                parts.append((" - " if coeff < 0 else " + ") + text)
        return "".join(parts)

    def __repr__(self) -> str:
        return f"Poly({str(self)!r})"


def poly_sum(items: Iterable[Poly]) -> Poly:
    """Sum with a single accumulator dict (faster than repeated __add__)."""
    data: dict = {}
    for p in items:
        for mono, coeff in p._terms.items():
            new = data.get(mono, 0) + coeff
            if new:
                data[mono] = new
            else:
                del data[mono]
    out = Poly()
    out._terms = data
    return out


def poly_prod(items: Iterable[Poly]) -> Poly:
    out = Poly.one()
    for p in items:
        out = out * p
    return out


class PolyParseError(ValueError):
    """Raised when polynomial text does not match the canonical format."""


_VAR_RE = re.compile(r"([xya])\[(\d+)\](?:\^\((\d+)\))?(?:\^(\d+))?\Z")
_INT_RE = re.compile(r"[+-]?\d+\Z")
_SPLIT_RE = re.compile(r"\s+([+-])\s+")


def _parse_piece(piece: str) -> tuple[VarId, int]:
    m = _VAR_RE.match(piece)
    if m is None:
        raise PolyParseError(f"bad variable token {piece!r}")
    letter, sub, sup, exp = m.groups()
    family = _LETTER_FAMILY[letter]
    if family == FAM_Y:
        if sup is not None:
            raise PolyParseError(f"y variables take no superscript: {piece!r}")
        var = yvar(int(sub))
    else:
        if sup is None:
            raise PolyParseError(f"{letter} variables need a superscript: {piece!r}")
        var = VarId(family, int(sub), int(sup))
        if var.sub < 1 or var.sup < 1:
            raise PolyParseError(f"variable indices must be >= 1: {piece!r}")
    e = 1 if exp is None else int(exp)
    if var.sub < 1:
        raise PolyParseError(f"variable indices must be >= 1: {piece!r}")
    if e < 1:
        raise PolyParseError(f"exponent must be >= 1: {piece!r}")
    return var, e


def parse_poly(text: str) -> Poly:
    """Inverse of str(poly) for the canonical text format."""
    s = text.strip()
    if not s:
        raise PolyParseError("empty polynomial text")
    if s == "0":
        return Poly.zero()
    chunks = _SPLIT_RE.split(s)
    signed_terms = []
    first = chunks[0]
    if first.startswith("-"):
        signed_terms.append((-1, first[1:].strip()))
    else:
        signed_terms.append((1, first))
    for k in range(1, len(chunks), 2):
        sign = -1 if chunks[k] == "-" else 1
        signed_terms.append((sign, chunks[k + 1]))

    acc: dict = {}
    for sign, term in signed_terms:
        if not term:
            raise PolyParseError(f"empty term in {text!r}")
        coeff = sign
        exps: dict[VarId, int] = {}
        for piece in term.split("*"):
            piece = piece.strip()
            if _INT_RE.match(piece):
                coeff *= int(piece)
                continue
            var, e = _parse_piece(piece)
            exps[var] = exps.get(var, 0) + e
        mono = tuple(sorted(exps.items()))
        new = acc.get(mono, 0) + coeff
        if new:
            acc[mono] = new
        else:
            acc.pop(mono, None)
    return Poly(acc)
