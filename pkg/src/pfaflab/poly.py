"""Exact sparse multivariate polynomials and exact rational linear algebra.

Variables come in two kinds: upper-triangular matrix entries ``a[i,j]``
(with i < j) and indexed indeterminates ``x[k]``.  Coefficients are exact
integers or rationals; no floating point anywhere.  A polynomial is a
mapping from monomials to nonzero coefficients, where a monomial is a
sorted tuple of variables with repetition encoding powers.
"""

from __future__ import annotations

from fractions import Fraction

# A variable is a plain tuple: ("a", i, j) with i < j, or ("x", k) with
# k >= 1.  Tuple comparison gives the total order: matrix entries first
# (by index pair), then indeterminates (by index).
Variable = tuple
Monomial = tuple


def a(i: int, j: int) -> Variable:
    """The matrix-entry variable a[i,j]; requires i < j."""
    if not (isinstance(i, int) and isinstance(j, int) and 0 < i < j):
        raise ValueError(f"matrix entry indices must satisfy 0 < i < j, got ({i}, {j})")
    return ("a", i, j)


def x(k: int) -> Variable:
    """The indeterminate x[k]; requires k >= 1."""
    if not (isinstance(k, int) and k >= 1):
        raise ValueError(f"indeterminate index must be >= 1, got {k}")
    return ("x", k)


def _num(c):
    # Keep integral coefficients as ints (fast path); exact rationals otherwise.
    if isinstance(c, Fraction):
        if c.denominator == 1:
            return int(c)
        return c
    if isinstance(c, int):
        return c
    raise TypeError(f"coefficient must be int or Fraction, not {type(c).__name__}")


def _var_str(v: Variable) -> str:
    if v[0] == "a":
        return f"a[{v[1]},{v[2]}]"
    return f"x[{v[1]}]"


class Poly:
    """Immutable exact polynomial.  Supports +, -, *, ** and scalar mixing."""

    __slots__ = ("terms",)

    def __init__(self, terms=None):
        clean = {}
        if terms:
            for mono, c in terms.items():
                c = _num(c)
                if c != 0:
                    clean[tuple(mono)] = c
        object.__setattr__(self, "terms", clean)

    # -- constructors ------------------------------------------------------

    @staticmethod
    def zero() -> "Poly":
        return Poly()

    @staticmethod
    def const(c) -> "Poly":
        return Poly({(): c})

    @staticmethod
    def var(v: Variable) -> "Poly":
        return Poly({(v,): 1})

    # -- basic queries ------------------------------------------------------

    def is_zero(self) -> bool:
        return not self.terms

    def coeff(self, mono) -> Fraction:
        return Fraction(self.terms.get(tuple(mono), 0))

    def total_degree(self) -> int:
        return max((len(m) for m in self.terms), default=0)

    def variables(self) -> set:
        return {v for m in self.terms for v in m}

    def __eq__(self, other):
        if isinstance(other, (int, Fraction)):
            other = Poly.const(other)
        if not isinstance(other, Poly):
            return NotImplemented
        return self.terms == other.terms

    def __hash__(self):
        return hash(frozenset(self.terms.items()))

    def __bool__(self):
        return bool(self.terms)

    # -- arithmetic ----------------------------------------------------------

    @staticmethod
    def _coerce(other):
        if isinstance(other, Poly):
            return other
        if isinstance(other, (int, Fraction)):
            return Poly.const(other)
        return None

    def __add__(self, other):
        other = Poly._coerce(other)
        if other is None:
            return NotImplemented
        terms = dict(self.terms)
        for m, c in other.terms.items():
            s = terms.get(m, 0) + c
            if s == 0:
                terms.pop(m, None)
            else:
                terms[m] = s
        p = Poly.__new__(Poly)
        object.__setattr__(p, "terms", terms)
        return p

    __radd__ = __add__

    def __neg__(self):
        p = Poly.__new__(Poly)
        object.__setattr__(p, "terms", {m: -c for m, c in self.terms.items()})
        return p

    def __sub__(self, other):
        other = Poly._coerce(other)
        if other is None:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        other = Poly._coerce(other)
        if other is None:
            return NotImplemented
        terms = {}
        for m1, c1 in self.terms.items():
            for m2, c2 in other.terms.items():
                m = tuple(sorted(m1 + m2))
                s = terms.get(m, 0) + c1 * c2
                if s == 0:
                    terms.pop(m, None)
                else:
                    terms[m] = s
        p = Poly.__new__(Poly)
        object.__setattr__(p, "terms", {m: _num(c) for m, c in terms.items() if c != 0})
        return p

    __rmul__ = __mul__

    def __pow__(self, k: int):
        if not (isinstance(k, int) and k >= 0):
            raise ValueError("exponent must be a nonnegative integer")
        result = Poly.const(1)
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    # -- rendering -----------------------------------------------------------

    @staticmethod
    def _mono_str(mono: Monomial) -> str:
        parts = []
        i = 0
        while i < len(mono):
            j = i
            while j < len(mono) and mono[j] == mono[i]:
                j += 1
            e = j - i
            parts.append(_var_str(mono[i]) if e == 1 else f"{_var_str(mono[i])}^{e}")
            i = j
        return "*".join(parts)

    def render(self) -> str:
        """Canonical text form: terms sorted by (degree, monomial), exact output.

        Example output: ``a[1,2]*a[3,4] - a[1,3]*a[2,4] + a[1,4]*a[2,3]``.
        """
        if not self.terms:
            return "0"
        pieces = []
        for mono in sorted(self.terms, key=lambda m: (len(m), m)):
            c = self.terms[mono]
            neg = c < 0
            mag = -c if neg else c
            if not mono:
                body = str(mag)
            elif mag == 1:
                body = Poly._mono_str(mono)
            else:
                body = f"{mag}*{Poly._mono_str(mono)}"
            pieces.append(("-" if neg else "+", body))
        sign0, body0 = pieces[0]
        out = ("-" if sign0 == "-" else "") + body0
        for sign, body in pieces[1:]:
            out += f" {sign} {body}"
        return out

    __str__ = render

    def __repr__(self):
        return f"Poly({self.render()})"


ZERO = Poly.zero()
ONE = Poly.const(1)


def poly_sum(polys) -> Poly:
    total = Poly.zero()
    for p in polys:
        total = total + p
    return total


def poly_prod(polys) -> Poly:
    total = Poly.const(1)
    for p in polys:
        total = total * p
    return total


# -- exact linear algebra over the rationals ---------------------------------


def _support(polys) -> list:
    monos = set()
    for p in polys:
        monos.update(p.terms)
    return sorted(monos)


def express_in_span(target: Poly, generators) -> list | None:
    """Exact coefficients c with sum(c[i]*generators[i]) == target, else None.

    Solves the linear system over the monomial support by exact Gaussian
    elimination; ``None`` certifies that no rational solution exists.
    """
    generators = list(generators)
    monos = _support(generators + [target])
    if not monos:
        return [Fraction(0)] * len(generators)
    ng = len(generators)
    rows = []
    for mono in monos:
        row = [Fraction(g.terms.get(mono, 0)) for g in generators]
        row.append(Fraction(target.terms.get(mono, 0)))
        rows.append(row)

    pivots = []  # (row, col)
    r = 0
    for col in range(ng):
        pr = next((i for i in range(r, len(rows)) if rows[i][col] != 0), None)
        if pr is None:
            continue
        rows[r], rows[pr] = rows[pr], rows[r]
        pv = rows[r][col]
        rows[r] = [v / pv for v in rows[r]]
        for i in range(len(rows)):
            if i != r and rows[i][col] != 0:
                f = rows[i][col]
                rows[i] = [v - f * w for v, w in zip(rows[i], rows[r])]
        pivots.append((r, col))
        r += 1
        if r == len(rows):
            break
    # Inconsistent if any remaining row is (0 ... 0 | nonzero).
    for i in range(r, len(rows)):
        if rows[i][ng] != 0:
            return None
    coeffs = [Fraction(0)] * ng
    for row, col in pivots:
        coeffs[col] = rows[row][ng]
    return coeffs


def matrix_rank(rows) -> int:
    """Rank over the rationals of the coefficient matrix (monomials as columns)."""
    rows = [p for p in rows if not p.is_zero()]
    if not rows:
        return 0
    monos = {m: i for i, m in enumerate(_support(rows))}
    mat = []
    for p in rows:
        row = [Fraction(0)] * len(monos)
        for m, c in p.terms.items():
            row[monos[m]] = Fraction(c)
        mat.append(row)
    rank = 0
    ncols = len(monos)
    col = 0
    for col in range(ncols):
        pr = next((i for i in range(rank, len(mat)) if mat[i][col] != 0), None)
        if pr is None:
            continue
        mat[rank], mat[pr] = mat[pr], mat[rank]
        pv = mat[rank][col]
        for i in range(rank + 1, len(mat)):
            if mat[i][col] != 0:
                f = mat[i][col] / pv
                mat[i] = [v - f * w for v, w in zip(mat[i], mat[rank])]
        rank += 1
        if rank == len(mat):
            break
    return rank
