"""Diagram and TL pfaffinants, decomposition identities, and the positivity cone."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations

from . import cache
from .diagrams import (OddSubsetError, SymTLDiagram, compatible_diagrams, diagram_order_key,
                       enumerate_matchings, enumerate_sym_tl, enumerate_sym_tl_even,
                       i_maximal_diagrams, removal_closure, standard_partition)
from .pfaffian import SkewArray, complementary_pfaffian, min_partition, monomial_pfaffian
from .poly import Poly, express_in_span, matrix_rank


class VerificationError(RuntimeError):
    """An exact identity failed; carries the first differing monomial."""


def _require_equal(lhs: Poly, rhs: Poly, what: str) -> None:
    if lhs == rhs:
        return
    diff = lhs - rhs
    mono = sorted(diff.terms)[0]
    raise VerificationError(f"{what}: sides differ at monomial {Poly._mono_str(mono) or '1'} "
                            f"by {diff.terms[mono]}")


@dataclass(frozen=True)
class PfaffinantFunctional:
    """A finitely supported coefficient function on matchings of [2n]."""

    n: int
    coefficients: tuple  # tuple of (Matching, int), canonical order

    @staticmethod
    def from_dict(n, coeffs) -> "PfaffinantFunctional":
        items = tuple(sorted(((frozenset(pi), int(c)) for pi, c in coeffs.items() if c),
                             key=lambda kv: sorted(kv[0])))
        return PfaffinantFunctional(n, items)

    def evaluate(self, A: SkewArray) -> Poly:
        if A.size != 2 * self.n:
            raise ValueError(f"array size {A.size} does not match n={self.n}")
        total = Poly.zero()
        for pi, c in self.coefficients:
            total = total + c * monomial_pfaffian(A, pi)
        return total


def _f_tables(n: int, seed: int = 0, use_cache: bool = True) -> dict:
    return {pi: cache.f_table(pi, n, seed, use_cache=use_cache)
            for pi in enumerate_matchings(n)}


def diagram_functional(D: SymTLDiagram, seed: int = 0) -> PfaffinantFunctional:
    tables = _f_tables(D.n, seed)
    return PfaffinantFunctional.from_dict(
        D.n, {pi: t.get(D, 0) for pi, t in tables.items()})


def diagram_pfaffinant(D: SymTLDiagram, A: SkewArray, seed: int = 0) -> Poly:
    """Uncrossing-weighted sum over matchings for a single diagram."""
    return diagram_functional(D, seed).evaluate(A)


def tl_functional(D: SymTLDiagram, seed: int = 0) -> PfaffinantFunctional:
    if not D.is_even:
        raise ValueError(f"TL pfaffinant requires an even diagram, got {D}")
    tables = _f_tables(D.n, seed)
    closure = removal_closure(D)
    coeffs = {}
    for pi, t in tables.items():
        coeffs[pi] = sum(t.get(Dp, 0) for Dp in closure)
    return PfaffinantFunctional.from_dict(D.n, coeffs)


def tl_pfaffinant(D: SymTLDiagram, A: SkewArray, seed: int = 0) -> Poly:
    """Sum of diagram pfaffinants over the odd-edge removal closure of D."""
    return tl_functional(D, seed).evaluate(A)


def verify_diagram_decomposition(A: SkewArray, I, seed: int = 0) -> dict:
    """pf_I * pf_Ibar equals the sum of diagram pfaffinants over compatible diagrams."""
    n = A.size // 2
    lhs = complementary_pfaffian(A, I)
    rhs = Poly.zero()
    for D in compatible_diagrams(I, n):
        rhs = rhs + diagram_pfaffinant(D, A, seed)
    _require_equal(lhs, rhs, f"diagram decomposition at I={sorted(I)}")
    return {"identity": "diagram-decomposition", "I": sorted(I), "ok": True}


def verify_tl_decomposition(A: SkewArray, I, seed: int = 0) -> dict:
    """pf_I * pf_Ibar equals the sum of TL pfaffinants over I-maximal diagrams."""
    n = A.size // 2
    lhs = complementary_pfaffian(A, I)
    rhs = Poly.zero()
    for D in i_maximal_diagrams(I, n):
        rhs = rhs + tl_pfaffinant(D, A, seed)
    _require_equal(lhs, rhs, f"TL decomposition at I={sorted(I)}")
    return {"identity": "tl-decomposition", "I": sorted(I), "ok": True}


def even_subsets(size: int):
    for r in range(0, size + 1, 2):
        yield from (frozenset(c) for c in combinations(range(1, size + 1), r))


def transition_matrix(n: int) -> tuple:
    """0/1 matrix of I-maximal membership, standard partitions x even diagrams.

    Rows and columns are sorted with larger index sets first, which makes
    the matrix upper triangular with unit diagonal.
    """
    diagrams = sorted(enumerate_sym_tl_even(n), key=diagram_order_key, reverse=True)
    rows = [standard_partition(D) for D in diagrams]
    mat = []
    for I, _ in rows:
        maximal = i_maximal_diagrams(I, n)
        mat.append([1 if D in maximal else 0 for D in diagrams])
    for r in range(len(mat)):
        if mat[r][r] != 1 or any(mat[r][c] for c in range(r)):
            raise VerificationError(f"transition matrix is not unit upper triangular at row {r}")
    return rows, diagrams, mat


def certify_basis(n: int, seed: int = 0) -> dict:
    """Ranks of the TL pfaffinants and of all complementary pfaffians."""
    A = SkewArray.symbolic(2 * n)
    tl = [tl_pfaffinant(D, A, seed) for D in enumerate_sym_tl_even(n)]
    comp = [complementary_pfaffian(A, I) for I in even_subsets(2 * n)]
    return {
        "n": n,
        "tl_count": len(tl),
        "tl_rank": matrix_rank(tl),
        "complementary_rank": matrix_rank(comp),
    }


# -- network positivity cone ---------------------------------------------------


@dataclass(frozen=True)
class ConeElement:
    """A rational combination of TL pfaffinants (even diagrams only)."""

    n: int
    tl_coeffs: tuple  # tuple of (SymTLDiagram, Fraction)

    @staticmethod
    def from_dict(n: int, coeffs) -> "ConeElement":
        items = []
        for D, c in coeffs.items():
            if not D.is_even:
                raise ValueError(f"cone elements use even diagrams only, got {D}")
            c = Fraction(c)
            if c:
                items.append((D, c))
        items.sort(key=lambda kv: diagram_order_key(kv[0]))
        return ConeElement(n, tuple(items))

    def diagram_coeffs(self) -> dict:
        """Induced coefficients on all diagrams: c'(D') = sum over D with D' in S(D)."""
        out = {}
        for D, c in self.tl_coeffs:
            for Dp in removal_closure(D):
                out[Dp] = out.get(Dp, Fraction(0)) + c
        return out

    def restrict(self, keep) -> "ConeElement":
        keep = set(keep)
        return ConeElement.from_dict(self.n, {D: c for D, c in self.tl_coeffs if D in keep})


@dataclass(frozen=True)
class ConeVerdict:
    positive: bool
    witness: SymTLDiagram | None


def cone_membership(c: ConeElement) -> ConeVerdict:
    """Network positive iff every induced diagram coefficient is >= 0."""
    for D, v in sorted(c.diagram_coeffs().items(), key=lambda kv: diagram_order_key(kv[0])):
        if v < 0:
            return ConeVerdict(False, D)
    return ConeVerdict(True, None)


def decomposition_cone_element(I, n: int) -> ConeElement:
    """The TL-pfaffinant expansion (all coefficients 1) of pf_I * pf_Ibar."""
    return ConeElement.from_dict(n, {D: 1 for D in i_maximal_diagrams(I, n)})


def min_difference_element(I, n: int) -> ConeElement:
    """Expansion of pf over min(I, Ibar) minus pf over I."""
    if len(I) % 2:
        raise OddSubsetError(f"subset {sorted(I)} has odd cardinality")
    coeffs: dict = {}
    for D in i_maximal_diagrams(min_partition(I, 2 * n), n):
        coeffs[D] = coeffs.get(D, 0) + 1
    for D in i_maximal_diagrams(I, n):
        coeffs[D] = coeffs.get(D, 0) - 1
    return ConeElement.from_dict(n, coeffs)


def maximal_diagrams(n: int) -> frozenset:
    """Even diagrams to which no odd edge can be added.

    These are the maximal diagrams for the alternating subset {1, 3, ...}:
    every vertical edge joins opposite parities, so all diagrams are
    alternating-compatible (the subset itself has odd size when n is odd,
    which only bars it from pfaffian decompositions, not from maximality).
    """
    from .diagrams import _i_maximal_cached

    return _i_maximal_cached(frozenset(range(1, 2 * n + 1, 2)), n)


def boolean_cone_check(s: int, parity: str, t) -> bool:
    """Nonnegativity of all upward subset sums on one parity class of levels.

    The vector ``t`` is indexed by the subsets of [s] whose size has the
    given parity, ordered by decreasing size then lexicographically.
    """
    if parity not in ("odd", "even"):
        raise ValueError(f"parity must be 'odd' or 'even', got {parity!r}")
    want = 1 if parity == "odd" else 0
    nodes = [frozenset(c) for r in range(s, -1, -1) if r % 2 == want
             for c in combinations(range(1, s + 1), r)]
    nodes.sort(key=lambda S: (-len(S), tuple(sorted(S))))
    if len(t) != len(nodes):
        raise ValueError(f"vector length {len(t)} does not match {len(nodes)} nodes")
    coeff = dict(zip(nodes, t))
    for r in range(s + 1):
        for sub in combinations(range(1, s + 1), r):
            sub = frozenset(sub)
            total = sum(c for S, c in coeff.items() if sub <= S)
            if total < 0:
                return False
    return True


def check_pfafprime_in_span(n: int, seed: int = 0) -> list:
    """Probe whether each diagram pfaffinant lies in the complementary-pfaffian span."""
    A = SkewArray.symbolic(2 * n)
    gens = [complementary_pfaffian(A, I) for I in even_subsets(2 * n)]
    out = []
    for D in enumerate_sym_tl(n):
        coeffs = express_in_span(diagram_pfaffinant(D, A, seed), gens)
        out.append({
            "diagram": D.key(),
            "in_span": coeffs is not None,
            "coefficients": None if coeffs is None else [str(c) for c in coeffs],
        })
    return out
