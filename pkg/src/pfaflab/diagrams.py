"""Matchings and symmetric Temperley-Lieb diagrams.

A symmetric TL diagram lives on 4n rectangle-boundary points: 1..2n down
the left side and 1'..2n' down the right side.  It is canonically
represented by its set of left vertical edges alone; the mirror edges
(i',j') and the horizontal edges (i,i') are derived.  Boundary positions
run 1..2n (left, top to bottom) then 2n+1..4n for 2n', ..., 1', so the
mirror reflection is position p <-> 4n+1-p.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from itertools import combinations
from math import comb

DEFAULT_ENUM_BOUND = 6

Matching = frozenset  # of sorted integer pairs


class NotStandardError(ValueError):
    """Raised when an (I, Ibar) pair is not a standard partition."""


class OddSubsetError(ValueError):
    """Raised when an operation requires an even-cardinality subset."""


# -- perfect matchings of [2n] ------------------------------------------------


def matching(pairs) -> Matching:
    return frozenset(tuple(sorted(p)) for p in pairs)


def enumerate_matchings(n: int, bound: int = DEFAULT_ENUM_BOUND) -> list:
    """All (2n-1)!! perfect matchings of [2n], deterministic order."""
    if n > bound:
        raise ValueError(f"matching enumeration bound exceeded: n={n} > {bound}")
    return list(_matchings_cached(n))


@lru_cache(maxsize=None)
def _matchings_cached(n: int) -> tuple:
    out = []

    def rec(points, acc):
        if not points:
            out.append(frozenset(acc))
            return
        first = points[0]
        for k in range(1, len(points)):
            rec(points[1:k] + points[k + 1:], acc + [(first, points[k])])

    rec(tuple(range(1, 2 * n + 1)), [])
    return tuple(out)


def crossing_number(pi: Matching) -> int:
    """Number of interleaved pairs (i,j), (k,l) with i < k < j < l."""
    edges = sorted(pi)
    cn = 0
    for (i, j), (k, l) in combinations(edges, 2):
        if i < k < j < l or k < i < l < j:
            cn += 1
    return cn


def matching_sign(pi: Matching) -> int:
    return -1 if crossing_number(pi) % 2 else 1


def matching_key(pi: Matching) -> str:
    return "M[" + "".join(f"({i},{j})" for i, j in sorted(pi)) + "]"


# -- symmetric TL diagrams ----------------------------------------------------


def _noncrossing_pairs(pairs) -> bool:
    for (i, j), (k, l) in combinations(pairs, 2):
        if i < k < j < l or k < i < l < j:
            return False
    return True


def _valid_vertical_set(n: int, edges) -> bool:
    pts = [p for e in edges for p in e]
    if len(set(pts)) != len(pts) or any(not 1 <= p <= 2 * n for p in pts):
        return False
    if not _noncrossing_pairs(edges):
        return False
    # A horizontal point inside a vertical edge would force a crossing with
    # the horizontal chord (i,i').
    covered = set(pts)
    for i, j in edges:
        for p in range(i + 1, j):
            if p not in covered:
                return False
    return True


@dataclass(frozen=True)
class SymTLDiagram:
    """Mirror-symmetric non-crossing matching, stored by left vertical edges."""

    n: int
    vertical_left: frozenset

    def __post_init__(self):
        edges = sorted(self.vertical_left)
        if any(not (isinstance(e, tuple) and len(e) == 2 and e[0] < e[1]) for e in edges):
            raise ValueError(f"bad vertical edge set {edges}")
        if not _valid_vertical_set(self.n, edges):
            raise ValueError(f"vertical edges {edges} do not give a valid symmetric diagram (n={self.n})")

    @property
    def order(self) -> int:
        return len(self.vertical_left)

    @property
    def is_even(self) -> bool:
        return self.order % 2 == 0

    def horizontal_points(self) -> frozenset:
        covered = {p for e in self.vertical_left for p in e}
        return frozenset(p for p in range(1, 2 * self.n + 1) if p not in covered)

    def full_position_matching(self) -> frozenset:
        """All 2n edges as pairs of boundary positions (mirror p <-> 4n+1-p)."""
        n4 = 4 * self.n
        pairs = set()
        for i, j in self.vertical_left:
            pairs.add((i, j))
            pairs.add(tuple(sorted((n4 + 1 - i, n4 + 1 - j))))
        for i in self.horizontal_points():
            pairs.add((i, n4 + 1 - i))
        return frozenset(pairs)

    def key(self) -> str:
        return "V[" + "".join(f"({i},{j})" for i, j in sorted(self.vertical_left)) + "]"

    def __str__(self):
        return self.key()


def sym_diagram(n: int, edges=()) -> SymTLDiagram:
    return SymTLDiagram(n, frozenset(tuple(sorted(e)) for e in edges))


def parse_diagram_key(key: str, n: int) -> SymTLDiagram:
    body = key.strip()
    if not (body.startswith("V[") and body.endswith("]")):
        raise ValueError(f"bad diagram key {key!r}")
    inner = body[2:-1]
    edges = []
    for chunk in inner.replace(")(", ");(").split(";"):
        chunk = chunk.strip()
        if not chunk:
            continue
        if not (chunk.startswith("(") and chunk.endswith(")")):
            raise ValueError(f"bad diagram key {key!r}")
        i, j = chunk[1:-1].split(",")
        edges.append((int(i), int(j)))
    return sym_diagram(n, edges)


def subset_order_key(I) -> tuple:
    """Sort key for the total order on subsets: larger first, then lex."""
    t = tuple(sorted(I))
    return (-len(t), t)


def i_set(D: SymTLDiagram) -> frozenset:
    """Lower vertical endpoints plus horizontal points; |I(D)| = 2n - |D|."""
    return frozenset(i for i, _ in D.vertical_left) | D.horizontal_points()


def diagram_order_key(D: SymTLDiagram) -> tuple:
    return subset_order_key(i_set(D))


def enumerate_sym_tl(n: int, bound: int = 8) -> list:
    """All C(2n,n) symmetric TL diagrams, sorted by the diagram order."""
    if n > bound:
        raise ValueError(f"diagram enumeration bound exceeded: n={n} > {bound}")
    return list(_sym_tl_cached(n))


@lru_cache(maxsize=None)
def _sym_tl_cached(n: int) -> tuple:
    out = [subset_bijection_inv(frozenset(S), n) for S in combinations(range(1, 2 * n + 1), n)]
    if len(set(out)) != comb(2 * n, n):
        raise AssertionError("subset bijection failed to produce distinct diagrams")
    return tuple(sorted(out, key=diagram_order_key))


def enumerate_sym_tl_even(n: int, bound: int = 8) -> list:
    return [D for D in enumerate_sym_tl(n, bound) if D.is_even]


def subset_bijection(D: SymTLDiagram) -> frozenset:
    """The n-subset of [2n]: lower vertical endpoints plus the largest
    horizontal points (upper endpoints are never colored)."""
    n = D.n
    black = {i for i, _ in D.vertical_left}
    for p in sorted(D.horizontal_points(), reverse=True):
        if len(black) == n:
            break
        black.add(p)
    if len(black) != n:
        raise AssertionError(f"coloring of {D} produced {len(black)} black points")
    return frozenset(black)


def subset_bijection_inv(S: frozenset, n: int) -> SymTLDiagram:
    """Inverse map: read points from 2n down to 1, matching blacks to free whites."""
    if len(S) != n or any(not 1 <= p <= 2 * n for p in S):
        raise ValueError(f"need an n-subset of [2n], got {sorted(S)}")
    used_white = set()
    edges = []
    for i in range(2 * n, 0, -1):
        if i not in S:
            continue
        j = next((q for q in range(i + 1, 2 * n + 1) if q not in S and q not in used_white), None)
        if j is not None:
            used_white.add(j)
            edges.append((i, j))
    return sym_diagram(n, edges)


def omega_involution(D: SymTLDiagram) -> SymTLDiagram:
    """Order-changing involution swapping even and odd diagrams."""
    horiz = D.horizontal_points()
    if 1 in horiz:
        others = sorted(horiz - {1})
        if not others:
            raise AssertionError("horizontal point 1 cannot be alone")
        i = others[0]
        return sym_diagram(D.n, set(D.vertical_left) | {(1, i)})
    edge = next(e for e in D.vertical_left if e[0] == 1)
    return sym_diagram(D.n, set(D.vertical_left) - {edge})


def _removable_odd_edges(D: SymTLDiagram):
    for i, j in sorted(D.vertical_left):
        if i % 2 == 1 and _valid_vertical_set(D.n, sorted(D.vertical_left - {(i, j)})):
            yield (i, j)


@lru_cache(maxsize=None)
def removal_closure(D: SymTLDiagram) -> frozenset:
    """S(D): iterated closure of D under removal of a legal odd edge."""
    seen = {D}
    stack = [D]
    while stack:
        cur = stack.pop()
        for edge in _removable_odd_edges(cur):
            nxt = sym_diagram(cur.n, cur.vertical_left - {edge})
            if nxt not in seen:
                seen.add(nxt)
                stack.append(nxt)
    size = len(seen)
    if size & (size - 1):
        raise AssertionError(f"|S(D)| = {size} is not a power of 2 for {D}")
    return frozenset(seen)


def is_compatible(D: SymTLDiagram, I) -> bool:
    """Every vertical edge must join an I-point to a non-I-point."""
    I = set(I)
    return all((i in I) != (j in I) for i, j in D.vertical_left)


def compatible_diagrams(I, n: int) -> frozenset:
    if len(I) % 2:
        raise OddSubsetError(f"subset {sorted(I)} has odd cardinality")
    return _compatible_cached(frozenset(I), n)


@lru_cache(maxsize=None)
def _compatible_cached(I: frozenset, n: int) -> frozenset:
    return frozenset(D for D in enumerate_sym_tl(n) if is_compatible(D, I))


def i_maximal_diagrams(I, n: int) -> frozenset:
    """Even compatible diagrams not inside the removal closure of another."""
    if len(I) % 2:
        raise OddSubsetError(f"subset {sorted(I)} has odd cardinality")
    return _i_maximal_cached(frozenset(I), n)


@lru_cache(maxsize=None)
def _i_maximal_cached(I: frozenset, n: int) -> frozenset:
    comp = _compatible_cached(I, n)
    out = set()
    for D in comp:
        if not D.is_even:
            continue
        if any(D2 != D and D in removal_closure(D2) for D2 in comp):
            continue
        out.add(D)
    return frozenset(out)


# -- standard partitions ------------------------------------------------------


def is_standard_partition(I, Ibar, n: int) -> bool:
    I, Ibar = sorted(I), sorted(Ibar)
    if sorted(I + Ibar) != list(range(1, 2 * n + 1)):
        return False
    if len(I) < len(Ibar):
        return False
    return all(i < j for i, j in zip(I, Ibar))


def standard_partition(D: SymTLDiagram) -> tuple:
    I = tuple(sorted(i_set(D)))
    Ibar = tuple(p for p in range(1, 2 * D.n + 1) if p not in set(I))
    return I, Ibar


def standard_partition_inv(I, Ibar, n: int) -> SymTLDiagram:
    """Greedy reconstruction: each j in Ibar joins the largest unused smaller I-point."""
    if not is_standard_partition(I, Ibar, n):
        raise NotStandardError(f"({sorted(I)}, {sorted(Ibar)}) is not standard")
    I = sorted(I)
    used = set()
    edges = []
    for j in sorted(Ibar):
        i = next((p for p in reversed(I) if p < j and p not in used), None)
        if i is None:
            raise NotStandardError(f"({I}, {sorted(Ibar)}) is not standard")
        used.add(i)
        edges.append((i, j))
    D = sym_diagram(n, edges)
    if standard_partition(D) != (tuple(I), tuple(sorted(Ibar))):
        raise AssertionError("standard partition reconstruction failed round-trip")
    return D


# -- ordinary TL diagrams (2n points: 1..n left top-down, n+1..2n right bottom-up)


@dataclass(frozen=True)
class TLDiagram:
    n: int
    edges: frozenset

    def __post_init__(self):
        pts = sorted(p for e in self.edges for p in e)
        if pts != list(range(1, 2 * self.n + 1)):
            raise ValueError(f"edges {sorted(self.edges)} are not a perfect matching of [2n]")
        if not _noncrossing_pairs(sorted(self.edges)):
            raise ValueError(f"edges {sorted(self.edges)} cross")

    def key(self) -> str:
        return "T[" + "".join(f"({i},{j})" for i, j in sorted(self.edges)) + "]"

    def __str__(self):
        return self.key()


def tl_diagram(n: int, edges) -> TLDiagram:
    return TLDiagram(n, frozenset(tuple(sorted(e)) for e in edges))


def _noncrossing_matchings(points):
    if not points:
        yield []
        return
    first = points[0]
    for k in range(1, len(points), 2):
        for inside in _noncrossing_matchings(points[1:k]):
            for outside in _noncrossing_matchings(points[k + 1:]):
                yield [(first, points[k])] + inside + outside


def enumerate_tl(n: int) -> list:
    """All Catalan(n) non-crossing perfect matchings of [2n]."""
    out = [tl_diagram(n, m) for m in _noncrossing_matchings(tuple(range(1, 2 * n + 1)))]
    return sorted(out, key=lambda d: sorted(d.edges))


def enumerate_noncrossing_4n(n: int) -> list:
    """Non-crossing perfect matchings on the 4n boundary positions (oracle use)."""
    return [frozenset(m) for m in _noncrossing_matchings(tuple(range(1, 4 * n + 1)))]
