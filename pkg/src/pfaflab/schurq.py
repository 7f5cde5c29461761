"""Shifted tableaux, Schur Q-functions, Q-Jacobi-Trudi arrays, and scanners.

All symmetric functions are truncated to k variables.  Strict partitions
of size at most d have at most ~sqrt(2d) parts, so any identity among
Schur Q-functions of degree <= d is faithfully decided with k at least
the maximal part count: the Q_lambda with l(lambda) <= k stay linearly
independent and the longer ones vanish identically.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

from .pfaffian import SkewArray, pfaffian
from .poly import Poly, x


def is_strict(parts) -> bool:
    parts = list(parts)
    return all(parts[i] > parts[i + 1] for i in range(len(parts) - 1)) and all(p > 0 for p in parts)


def strict_partitions(total: int) -> list:
    """All strict partitions of exactly `total` (decreasing tuples)."""
    out = []

    def rec(remaining, maxpart, acc):
        if remaining == 0:
            out.append(tuple(acc))
            return
        for p in range(min(remaining, maxpart), 0, -1):
            rec(remaining - p, p - 1, acc + [p])

    rec(total, total, [])
    return out


def strict_subpartitions(lam) -> list:
    """All strict mu contained in lam (elementwise), including the empty one."""
    out = []

    def rec(i, prev, acc):
        out.append(tuple(acc))
        for p in range(min(lam[i], prev - 1), 0, -1) if i < len(lam) else []:
            rec(i + 1, p, acc + [p])

    rec(0, 10 ** 9, [])
    return sorted(set(out), reverse=True)


def shifted_cells(lam, mu=()) -> list:
    """Cells (row, col) of the shifted skew diagram; rows shifted by row index."""
    lam, mu = tuple(lam), tuple(mu)
    if not is_strict(lam) and lam:
        raise ValueError(f"outer shape {lam} is not strict")
    if mu and not all(mu[i] > mu[i + 1] for i in range(len(mu) - 1)):
        raise ValueError(f"inner shape {mu} is not strict")
    if len(mu) > len(lam) or any(m > l for m, l in zip(mu, lam)):
        raise ValueError(f"inner shape {mu} not contained in {lam}")
    cells = []
    for r, l in enumerate(lam, start=1):
        m = mu[r - 1] if r - 1 < len(mu) else 0
        cells.extend((r, c) for c in range(r + m, r + l))
    return cells


@lru_cache(maxsize=None)
def schur_q(lam, mu, k: int) -> Poly:
    """Weight generating function of shifted tableaux in letters 1' < 1 < ... < k.

    Rows and columns weakly increase; each primed letter appears at most
    once per row and each unprimed letter at most once per column.
    """
    if k < 1:
        raise ValueError("need at least one variable")
    cells = shifted_cells(lam, mu)
    if not cells:
        return Poly.const(1)
    # letters encoded 1..2k: odd = primed, even = unprimed
    by_row = {}
    for r, c in cells:
        by_row.setdefault(r, []).append(c)
    order = [(r, c) for r in sorted(by_row) for c in sorted(by_row[r])]
    weights: dict = {}
    filling = {}

    def letter_ok(r, c, v):
        left = filling.get((r, c - 1))
        up = filling.get((r - 1, c))
        if left is not None:
            if v < left:
                return False
            if v == left and v % 2 == 1:
                return False  # repeated primed letter in a row
        if up is not None:
            if v < up:
                return False
            if v == up and v % 2 == 0:
                return False  # repeated unprimed letter in a column
        return True

    def rec(i, wt):
        if i == len(order):
            key = tuple(wt)
            weights[key] = weights.get(key, 0) + 1
            return
        r, c = order[i]
        for v in range(1, 2 * k + 1):
            if letter_ok(r, c, v):
                filling[(r, c)] = v
                lvl = (v + 1) // 2
                wt[lvl - 1] += 1
                rec(i + 1, wt)
                wt[lvl - 1] -= 1
                del filling[(r, c)]

    rec(0, [0] * k)
    terms = {}
    for wt, count in weights.items():
        mono = tuple(x(i + 1) for i, e in enumerate(wt) for _ in range(e))
        terms[mono] = count
    return Poly(terms)


def one_row_q(r: int, k: int) -> Poly:
    """Q over a single row of length r; Q_0 = 1, negative lengths vanish."""
    if r < 0:
        return Poly.zero()
    if r == 0:
        return Poly.const(1)
    return schur_q((r,), (), k)


@lru_cache(maxsize=None)
def two_row_q(r: int, s: int, k: int) -> Poly:
    """Q over the (r, s) shape, extended antisymmetrically: Q_(s,r) = -Q_(r,s)."""
    if r == s:
        return Poly.zero()
    if r < s:
        return -two_row_q(s, r, k)
    if s == 0:
        return one_row_q(r, k)
    if s < 0 or r < 0:
        raise ValueError(f"two-row entries need nonnegative parts, got ({r},{s})")
    return schur_q((r, s), (), k)


def q_jt_matrix(lam, mu, k: int, allow_nonstrict: bool = False, reversed_h: bool = False) -> SkewArray:
    """Skew array [[A, H], [-H^t, 0]] whose pfaffian gives the skew Q-function.

    A has entries Q over two-row shapes of the parts of lam; H[i][j] is the
    one-row Q of lam_i - mu_{r+1-j} (or lam_i - mu_j with ``reversed_h``).
    lam is padded with one zero part if l + r is odd.
    """
    lam, mu = list(lam), list(mu)
    if not allow_nonstrict:
        if lam and not all(lam[i] > lam[i + 1] for i in range(len(lam) - 1)):
            raise ValueError(f"{lam} is not strict")
        if mu and not (all(mu[i] > mu[i + 1] for i in range(len(mu) - 1)) and mu[-1] >= 0):
            raise ValueError(f"{mu} is not strict")
    if any(p < 0 for p in lam) or any(p < 0 for p in mu):
        raise ValueError("negative parts are not allowed")
    if (len(lam) + len(mu)) % 2:
        lam = lam + [0]
    l, r = len(lam), len(mu)
    entries = {}
    for i in range(1, l + 1):
        for j in range(i + 1, l + 1):
            entries[(i, j)] = two_row_q(lam[i - 1], lam[j - 1], k)
        for j in range(1, r + 1):
            m = mu[j - 1] if reversed_h else mu[r - j]
            entries[(i, l + j)] = one_row_q(lam[i - 1] - m, k)
    return SkewArray(l + r, entries)


def q_from_pfaffian(lam, mu, k: int, allow_nonstrict: bool = False) -> Poly:
    return pfaffian(q_jt_matrix(lam, mu, k, allow_nonstrict))


# -- expansions ---------------------------------------------------------------


def _exponent_vector(mono, k: int):
    e = [0] * k
    for v in mono:
        if v[0] != "x" or v[1] > k:
            return None
        e[v[1] - 1] += 1
    return tuple(e)


@dataclass(frozen=True)
class QExpansion:
    coeffs: tuple       # ((strict partition, Fraction), ...)
    remainder: Poly

    @property
    def ok(self) -> bool:
        return self.remainder.is_zero()

    def as_dict(self) -> dict:
        return dict(self.coeffs)

    def nonnegative(self) -> bool:
        return self.ok and all(c >= 0 for _, c in self.coeffs)


def expand_in_q_basis(f: Poly, k: int) -> QExpansion:
    """Peel off the lex-greatest monomial with a Q-function at each step.

    The leading monomial of Q_lambda is 2^l(lambda) x^lambda, so on the
    Q-span the loop terminates with zero remainder; otherwise the offending
    part is returned as the remainder.
    """
    coeffs = {}
    rem = f
    while not rem.is_zero():
        vecs = {}
        for mono in rem.terms:
            e = _exponent_vector(mono, k)
            if e is None:
                return QExpansion(tuple(sorted(coeffs.items())), rem)
            vecs[e] = mono
        lead = max(vecs)
        lam = tuple(p for p in lead if p)
        if list(lead) != sorted(lead, reverse=True) or not is_strict(lam):
            return QExpansion(tuple(sorted(coeffs.items())), rem)
        c = Fraction(rem.terms[vecs[lead]], 2 ** len(lam))
        coeffs[lam] = coeffs.get(lam, Fraction(0)) + c
        rem = rem - c * schur_q(lam, (), k)
    return QExpansion(tuple(sorted((l, c) for l, c in coeffs.items() if c)), Poly.zero())


def monomial_expand(f: Poly, k: int) -> dict | None:
    """Coefficients on monomial symmetric functions, or None if not symmetric."""
    from itertools import permutations as perms

    by_shape = {}
    for mono, c in f.terms.items():
        e = _exponent_vector(mono, k)
        if e is None:
            return None
        shape = tuple(sorted((p for p in e), reverse=True))
        by_shape.setdefault(shape, {})[e] = c
    out = {}
    for shape, seen in by_shape.items():
        orbit = set(perms(shape))
        want = {e: None for e in orbit}
        vals = set(seen.values())
        if len(vals) != 1 or set(seen) != set(want):
            return None
        out[tuple(p for p in shape if p)] = seen[shape]
    return out


# -- lattice operations on shapes ----------------------------------------------


def _pad(a, b):
    m = max(len(a), len(b))
    return (tuple(a) + (0,) * (m - len(a)), tuple(b) + (0,) * (m - len(b)))


def join_meet_parts(lam, nu) -> tuple:
    la, nu_ = _pad(lam, nu)
    join = tuple(max(p, q) for p, q in zip(la, nu_))
    meet = tuple(min(p, q) for p, q in zip(la, nu_))
    strip = lambda t: tuple(p for p in t if p)
    join, meet = strip(join), strip(meet)
    if not is_strict(join) or not is_strict(meet):
        raise AssertionError(f"join/meet of strict shapes must be strict: {join}, {meet}")
    return join, meet


def join_meet(shape1, shape2) -> tuple:
    """Coordinatewise max/min on skew shifted shapes ((lam, mu) pairs)."""
    (l1, m1), (l2, m2) = shape1, shape2
    jl, ml = join_meet_parts(l1, l2)
    jm, mm = join_meet_parts(m1, m2) if (m1 or m2) else ((), ())
    shifted_cells(jl, jm)
    shifted_cells(ml, mm)
    return (jl, jm), (ml, mm)


def sort_split(lam, mu) -> tuple:
    """Alternating split of the merged, sorted parts of two strict partitions."""
    if not (is_strict(lam) or not lam) or not (is_strict(mu) or not mu):
        raise ValueError("sort split needs strict partitions")
    merged = sorted(list(lam) + list(mu), reverse=True)
    s1 = tuple(merged[0::2])
    s2 = tuple(merged[1::2])
    if not (is_strict(s1) or not s1) or not (is_strict(s2) or not s2):
        raise AssertionError("sorted halves of strict partitions must be strict")
    return s1, s2


# -- min-partition bridge --------------------------------------------------------


def merged_positions(lam, nu) -> tuple:
    """Merge padded strict partitions; return (parts, positions of lam's parts).

    With ties the parts of lam take the earlier positions, so the submatrix
    of the merged Q-Jacobi-Trudi array on those positions is exactly the
    array of lam.
    """
    lam, nu = list(lam), list(nu)
    if len(lam) % 2:
        lam.append(0)
    if len(nu) % 2:
        nu.append(0)
    if len(lam) < len(nu):
        lam, nu = nu, lam
    tagged = sorted([(-p, 0, i) for i, p in enumerate(lam)] + [(-p, 1, i) for i, p in enumerate(nu)])
    parts = tuple(-t[0] for t in tagged)
    I = frozenset(i + 1 for i, t in enumerate(tagged) if t[1] == 0)
    return parts, I


def verify_min_difference_q(lam, nu, k: int = 4) -> dict:
    """Complementary-pfaffian difference at the min partition equals the
    cell-transfer difference of Q-functions."""
    from .pfaffian import complementary_pfaffian, min_partition
    from .pfaffinants import _require_equal

    parts, I = merged_positions(lam, nu)
    A = q_jt_matrix(list(parts), [], k, allow_nonstrict=True)
    mn = min_partition(I, len(parts))
    lhs = complementary_pfaffian(A, mn) - complementary_pfaffian(A, I)
    join, meet = join_meet_parts(lam, nu)
    rhs = schur_q(join, (), k) * schur_q(meet, (), k) \
        - schur_q(tuple(lam), (), k) * schur_q(tuple(nu), (), k)
    _require_equal(lhs, rhs, f"min-partition bridge at lam={tuple(lam)}, nu={tuple(nu)}")
    return {"identity": "min-difference", "lam": tuple(lam), "nu": tuple(nu), "ok": True}


# -- conjecture scanners ----------------------------------------------------------


def _skew_q(shape, k: int) -> Poly:
    lam, mu = shape
    return schur_q(tuple(lam), tuple(mu), k)


def classify_difference(diff: Poly, k: int) -> tuple:
    """(verdict, expansion dict) for a would-be nonnegative Q-combination."""
    exp = expand_in_q_basis(diff, k)
    if exp.ok and all(c >= 0 for _, c in exp.coeffs):
        return "positive", exp.as_dict()
    return ("not-in-q-span" if not exp.ok else "counterexample"), exp.as_dict()


def scan_cell_transfer(bound: int, k: int = 5, skew: bool = True):
    """Cell-transfer difference scan over pairs of (skew) shifted shapes."""
    shapes1 = []
    for a_ in range(0, bound + 1):
        for lam in strict_partitions(a_) if a_ else [()]:
            mus = strict_subpartitions(lam) if skew else [()]
            shapes1.extend((lam, mu) for mu in mus)
    for i, s1 in enumerate(shapes1):
        for s2 in shapes1[i:]:
            if sum(s1[0]) + sum(s2[0]) > bound:
                continue
            try:
                (jl, jm), (ml, mm) = join_meet(s1, s2)
            except (ValueError, AssertionError):
                continue
            diff = _skew_q((jl, jm), k) * _skew_q((ml, mm), k) - _skew_q(s1, k) * _skew_q(s2, k)
            verdict, expansion = _classify_with_recheck(diff, s1, s2, k)
            yield {
                "conjecture": "con2",
                "instance": {"shape1": _shape_str(s1), "shape2": _shape_str(s2)},
                "zero_difference": diff.is_zero(),
                "verdict": verdict,
                "expansion": _expansion_str(expansion),
            }


def _classify_with_recheck(diff, s1, s2, k):
    verdict, expansion = classify_difference(diff, k)
    if verdict != "positive":
        # rebuild the difference with one more variable before reporting
        join, meet = join_meet(s1, s2)
        diff2 = _skew_q(join, k + 1) * _skew_q(meet, k + 1) \
            - _skew_q(s1, k + 1) * _skew_q(s2, k + 1)
        verdict, expansion = classify_difference(diff2, k + 1)
    return verdict, expansion


def scan_sort(bound: int, k: int = 5):
    """Sorted-split difference scan over pairs of strict partitions."""
    parts = [()]
    for a_ in range(1, bound + 1):
        parts.extend(strict_partitions(a_))
    for i, lam in enumerate(parts):
        for mu in parts[i:]:
            if sum(lam) + sum(mu) > bound:
                continue
            s1, s2 = sort_split(lam, mu)
            diff = schur_q(s1, (), k) * schur_q(s2, (), k) \
                - schur_q(lam, (), k) * schur_q(mu, (), k)
            verdict, expansion = classify_difference(diff, k)
            if verdict != "positive":
                diff2 = schur_q(s1, (), k + 1) * schur_q(s2, (), k + 1) \
                    - schur_q(lam, (), k + 1) * schur_q(mu, (), k + 1)
                verdict, expansion = classify_difference(diff2, k + 1)
            yield {
                "conjecture": "con3",
                "instance": {"lam": list(lam), "mu": list(mu)},
                "zero_difference": diff.is_zero(),
                "verdict": verdict,
                "expansion": _expansion_str(expansion),
            }


def weakly_decreasing_parts(total_max: int, length: int):
    """Weakly decreasing tuples of the given length with entries >= 0."""
    def rec(remaining, maxpart, acc):
        if len(acc) == length:
            yield tuple(acc)
            return
        for p in range(min(remaining, maxpart), -1, -1):
            yield from rec(remaining - p, p, acc + [p])

    yield from rec(total_max, total_max, [])


def cone_test_elements(n: int, seed: int, combos: int) -> list:
    """(label, ConeElement-or-functional, in_cone) triples to evaluate.

    Covers the TL-pfaffinant unit vectors and min-difference elements (all
    inside the network-positive cone), seeded random nonnegative TL
    combinations, and the raw single-diagram functionals.  A single-diagram
    functional lies in the cone only when its induced coefficients are
    nonnegative, which fails for odd diagrams; those evaluations are
    reported with ``in_cone`` false since the positivity statement does not
    cover them.
    """
    import random

    from .diagrams import enumerate_sym_tl, enumerate_sym_tl_even
    from .pfaffinants import ConeElement, even_subsets, min_difference_element

    rng = random.Random(seed)
    out = []
    even = enumerate_sym_tl_even(n)
    for D in even:
        out.append((f"tl:{D.key()}", ConeElement.from_dict(n, {D: 1}), True))
    for I in even_subsets(2 * n):
        if len(I) >= n and len(I) > 0:
            elt = min_difference_element(I, n)
            if elt.tl_coeffs:
                out.append((f"mindiff:{sorted(I)}", elt, True))
    for t in range(combos):
        elt = ConeElement.from_dict(n, {D: rng.randrange(0, 3) for D in even})
        out.append((f"random-{t}", elt, True))
    for D in enumerate_sym_tl(n):
        out.append((f"diagram:{D.key()}", D, _diagram_in_cone(D, n)))
    return out


def _diagram_in_cone(D, n: int) -> bool:
    """Whether the single-diagram functional has a nonnegative TL presentation."""
    from .diagrams import enumerate_sym_tl_even, removal_closure
    from .pfaffian import SkewArray
    from .pfaffinants import diagram_functional, tl_functional
    from .poly import express_in_span

    A = SkewArray.symbolic(2 * n)
    target = diagram_functional(D).evaluate(A)
    even = enumerate_sym_tl_even(n)
    gens = [tl_functional(E).evaluate(A) for E in even]
    coeffs = express_in_span(target, gens)
    if coeffs is None:
        return False
    induced: dict = {}
    for E, c in zip(even, coeffs):
        for Ep in removal_closure(E):
            induced[Ep] = induced.get(Ep, 0) + c
    return all(v >= 0 for v in induced.values())


def scan_q_positivity(n: int, bound: int, k: int = 5, seed: int = 0, combos: int = 3):
    """Cone-element evaluations on generalized (non-skew) Q-Jacobi-Trudi arrays.

    Instances are weakly decreasing part vectors pi with 2n entries >= 0.
    Skew arrays with a nonempty inner shape are excluded: they are not
    realizable by positive planar networks (documented counterexample in
    the test suite), so the positivity statement does not extend to them.
    """
    from .pfaffinants import ConeElement, diagram_functional, tl_functional

    elements = cone_test_elements(n, seed, combos)
    eval_cache: dict = {}

    def evaluate(obj, A):
        if isinstance(obj, ConeElement):
            total = Poly.zero()
            for D, c in obj.tl_coeffs:
                key = ("tl", D)
                if key not in eval_cache:
                    eval_cache[key] = tl_functional(D)
                total = total + c * eval_cache[key].evaluate(A)
            return total
        key = ("diag", obj)
        if key not in eval_cache:
            eval_cache[key] = diagram_functional(obj)
        return eval_cache[key].evaluate(A)

    for pi in weakly_decreasing_parts(bound, 2 * n):
        A = q_jt_matrix(list(pi), [], k, allow_nonstrict=True)
        for label, obj, in_cone in elements:
            val = evaluate(obj, A)
            verdict, expansion = classify_difference(val, k)
            if verdict != "positive" and in_cone:
                A2 = q_jt_matrix(list(pi), [], k + 1, allow_nonstrict=True)
                verdict, expansion = classify_difference(evaluate(obj, A2), k + 1)
            yield {
                "conjecture": "con1",
                "instance": {"pi": list(pi), "element": label},
                "in_cone": in_cone,
                "zero_difference": val.is_zero(),
                "verdict": verdict,
                "expansion": _expansion_str(expansion),
            }


def _shape_str(shape) -> str:
    lam, mu = shape
    return f"{list(lam)}/{list(mu)}"


def _expansion_str(expansion: dict) -> dict:
    return {str(list(l)): str(c) for l, c in sorted(expansion.items())}
