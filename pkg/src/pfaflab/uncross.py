"""Exact planar embeddings of doubled matchings and their sign-weighted uncrossings.

A matching on the 4n boundary positions (1..2n down the left, then
2n'..1' up the right, so position p mirrors to 4n+1-p) is embedded with
straight chords between exact rational points on the unit circle.  Chords
cross exactly when their endpoints interleave, and every pair crosses at
most once, so the crossing census is forced; the geometry only decides
the order of crossings along each chord.  The placement is exactly
mirror-symmetric, is re-perturbed deterministically if three chords ever
meet in a point, and never has tangencies.

Each crossing between a chord and its own mirror image sits on the axis
and is *unpaired*; all other crossings come in mirror orbits of size two
(*paired*) and are always resolved the same way, keeping every uncrossing
mirror-symmetric.  Resolving a crossing joins the two strand stubs leading
to the chords' start sides (vertical) or start-with-end (horizontal).  The
weight of an uncrossing is 2^loops * (-1)^(unpaired vertical + paired
horizontal), with mirror-symmetric loop pairs counted once.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .diagrams import SymTLDiagram, TLDiagram, sym_diagram

DEFAULT_CLASS_BOUND = 24


def circle_point(s: Fraction) -> tuple:
    d = 1 + s * s
    return ((1 - s * s) / d, 2 * s / d)


def _placement(n: int, seed: int, retry: int) -> list:
    """Parameters s_1 > ... > s_{2n} in (0,1); right point i' = P(s_i),
    left point i is its mirror (-x, y)."""
    N = 2 * n + 1
    P = 256
    out = []
    for i in range(1, 2 * n + 1):
        if seed == 0 and retry == 0:
            eps = 0
        else:
            eps = ((37 * i * (seed + 101 * retry + 1) + 11 * (seed + retry + 1)) % 23) - 11
        out.append(Fraction((N - i) * P + eps, (N + i) * P))
    if any(not (0 < out[i + 1] < out[i] < 1) for i in range(len(out) - 1)):
        raise AssertionError("placement jitter broke monotonicity")
    return out


def _segment_crossing(A, B, C, D):
    """Exact intersection of proper segments AB and CD, or None."""
    r = (B[0] - A[0], B[1] - A[1])
    s = (D[0] - C[0], D[1] - C[1])
    denom = r[0] * s[1] - r[1] * s[0]
    if denom == 0:
        return None
    q = (C[0] - A[0], C[1] - A[1])
    t = (q[0] * s[1] - q[1] * s[0]) / denom
    u = (q[0] * r[1] - q[1] * r[0]) / denom
    if not (0 < t < 1 and 0 < u < 1):
        return None
    return (A[0] + t * r[0], A[1] + t * r[1]), t, u


def _interleave(c1, c2) -> bool:
    (a, b), (c, d) = sorted(c1), sorted(c2)
    return (a < c < b < d) or (c < a < d < b)


@dataclass(frozen=True)
class Crossing:
    chords: tuple       # (chord index, chord index), lower first
    point: tuple
    params: tuple       # parameter along each chord, matching `chords` order
    unpaired: bool
    orbit: int          # resolution class index


class ChordMap:
    """Mirror-symmetric straight-chord embedding with classified crossings."""

    def __init__(self, n: int, position_pairs, seed: int = 0):
        self.n = n
        self.seed = seed
        pairs = sorted(tuple(sorted(p)) for p in position_pairs)
        pts = sorted(q for p in pairs for q in p)
        if pts != list(range(1, 4 * n + 1)):
            raise ValueError("chord endpoints must partition the 4n boundary positions")
        self._build(pairs)

    def mirror_pos(self, p: int) -> int:
        return 4 * self.n + 1 - p

    def _build(self, pairs):
        n = self.n
        for retry in range(60):
            s = _placement(n, self.seed, retry)
            coords = {}
            for i in range(1, 2 * n + 1):
                xx, yy = circle_point(s[i - 1])
                coords[self.mirror_pos(i)] = (xx, yy)   # right point i'
                coords[i] = (-xx, yy)                   # left point i
            # sorted pairs: for side-crossing chords the start is the left
            # endpoint, which fixes the vertical/horizontal convention
            chords = list(pairs)
            mirror_chord = {}
            index = {c: k for k, c in enumerate(chords)}
            for k, (p, q) in enumerate(chords):
                m = tuple(sorted((self.mirror_pos(p), self.mirror_pos(q))))
                mirror_chord[k] = index[m]
            crossings = []
            seen_points = {}
            ok = True
            for i in range(len(chords)):
                for j in range(i + 1, len(chords)):
                    if not _interleave(chords[i], chords[j]):
                        continue
                    ci, cj = chords[i], chords[j]
                    hit = _segment_crossing(coords[self._start(ci)], coords[self._end(ci)],
                                            coords[self._start(cj)], coords[self._end(cj)])
                    if hit is None:
                        raise AssertionError("interleaved chords failed to cross")
                    point, t, u = hit
                    if point in seen_points:
                        ok = False
                        break
                    seen_points[point] = (i, j)
                    crossings.append([(i, j), point, (t, u)])
                if not ok:
                    break
            if ok:
                break
        else:
            raise RuntimeError("could not find a concurrency-free placement")

        self.coords = coords
        self.chords = chords
        self.mirror_chord = mirror_chord
        # classify: unpaired iff the two chords are mirror images of each other
        by_pair = {tuple(c[0]): k for k, c in enumerate(crossings)}
        classes = []
        class_kind = []
        cross_objs = [None] * len(crossings)
        orbit_of = {}
        for k, (pair, point, params) in enumerate(crossings):
            i, j = pair
            mi, mj = mirror_chord[i], mirror_chord[j]
            mpair = tuple(sorted((mi, mj)))
            unpaired = mpair == pair
            if pair in orbit_of:
                orbit = orbit_of[pair]
            else:
                orbit = len(classes)
                orbit_of[pair] = orbit
                if not unpaired:
                    orbit_of[mpair] = orbit
                classes.append([])
                class_kind.append("unpaired" if unpaired else "paired")
            classes[orbit].append(k)
            cross_objs[k] = Crossing(pair, point, params, unpaired, orbit)
        for orbit, members in enumerate(classes):
            want = 1 if class_kind[orbit] == "unpaired" else 2
            if len(members) != want:
                raise AssertionError(f"orbit {orbit} has {len(members)} crossings, wanted {want}")
        self.crossings = cross_objs
        self.classes = classes
        self.class_kind = class_kind
        self._prepare_pieces()

    @staticmethod
    def _start(chord) -> int:
        return chord[0]

    @staticmethod
    def _end(chord) -> int:
        return chord[1]

    def _prepare_pieces(self):
        # order crossings along each chord by exact parameter from the start
        nch = len(self.chords)
        along = [[] for _ in range(nch)]
        for k, cr in enumerate(self.crossings):
            i, j = cr.chords
            along[i].append((cr.params[0], k))
            along[j].append((cr.params[1], k))
        self.cross_along = [[k for _, k in sorted(lst)] for lst in along]
        for c, chord in enumerate(self.chords):
            if self.cross_along[c] and not (chord[0] <= 2 * self.n < chord[1]):
                raise AssertionError("only side-crossing chords may carry crossings")
        self.piece_offset = []
        total = 0
        for c in range(nch):
            self.piece_offset.append(total)
            total += len(self.cross_along[c]) + 1
        self.n_pieces = total
        # per crossing: (u_before, u_after, v_before, v_after) piece ids
        self.cross_pieces = []
        for k, cr in enumerate(self.crossings):
            i, j = cr.chords
            ki = self.cross_along[i].index(k)
            kj = self.cross_along[j].index(k)
            oi, oj = self.piece_offset[i], self.piece_offset[j]
            self.cross_pieces.append((oi + ki, oi + ki + 1, oj + kj, oj + kj + 1))
        # boundary position -> piece
        self.boundary_piece = {}
        for c, chord in enumerate(self.chords):
            self.boundary_piece[self._start(chord)] = self.piece_offset[c]
            self.boundary_piece[self._end(chord)] = self.piece_offset[c] + len(self.cross_along[c])
        # mirror map on pieces: piece k of c -> piece (m_c - k) of mirror(c)
        self.mirror_piece = [0] * self.n_pieces
        for c in range(nch):
            mc = self.mirror_chord[c]
            m = len(self.cross_along[c])
            if len(self.cross_along[mc]) != m:
                raise AssertionError("mirror chords disagree on crossing count")
            for k in range(m + 1):
                self.mirror_piece[self.piece_offset[c] + k] = self.piece_offset[mc] + (m - k)

    @property
    def num_classes(self) -> int:
        return len(self.classes)

    def census(self) -> dict:
        return {
            "crossings": len(self.crossings),
            "unpaired": self.class_kind.count("unpaired"),
            "paired_orbits": self.class_kind.count("paired"),
        }


def nu_pi_positions(pi, n: int) -> list:
    """Doubled matching of pi: chords (i, j') and (j, i') for each (i, j)."""
    out = []
    for i, j in pi:
        i, j = min(i, j), max(i, j)
        out.append((i, 4 * n + 1 - j))
        out.append((j, 4 * n + 1 - i))
    return out


def nu_d_positions(d: TLDiagram, n: int) -> list:
    """Mirror-symmetric doubling of an ordinary TL diagram.

    The diagram is first flipped left to right (i -> 2n+1-i); the flipped
    left points land on 1..n, the flipped right side on (n+1)'..(2n)' top
    to bottom, and mirror images of every edge are added.  The flip is
    forced by the expansion of TL pfaffinants of a zero-diagonal-block
    array over TL immanants, which pins the side identification (only
    diagrams fixed by the flip arise for n = 2).
    """
    out = []
    for u, v in d.edges:
        u, v = 2 * n + 1 - max(u, v), 2 * n + 1 - min(u, v)
        if v <= n:
            out.append((u, v))
            out.append((4 * n + 1 - v, 4 * n + 1 - u))
        elif u > n:
            out.append((n + u, n + v))
            out.append((3 * n + 1 - v, 3 * n + 1 - u))
        else:
            out.append((u, n + v))
            out.append((3 * n + 1 - v, 4 * n + 1 - u))
    return out


def embed_nu_pi(pi, n: int, seed: int = 0) -> ChordMap:
    return ChordMap(n, nu_pi_positions(pi, n), seed)


def embed_nu_d(d: TLDiagram, n: int, seed: int = 0) -> ChordMap:
    return ChordMap(n, nu_d_positions(d, n), seed)


# -- strand tracing ------------------------------------------------------------


def _find(parent, i):
    while parent[i] != i:
        parent[i] = parent[parent[i]]
        i = parent[i]
    return i


def _trace(cmap: ChordMap, choices) -> tuple:
    """Resolve all classes (choice True = vertical) and trace the strands.

    Returns (left_edge_fset, loop_orbits, uv, ph).
    """
    parent = list(range(cmap.n_pieces))

    def union(i, j):
        ri, rj = _find(parent, i), _find(parent, j)
        if ri != rj:
            parent[ri] = rj

    uv = ph = 0
    for ci, members in enumerate(cmap.classes):
        vertical = choices[ci]
        if cmap.class_kind[ci] == "unpaired":
            uv += 1 if vertical else 0
        else:
            ph += 0 if vertical else 1
        for k in members:
            ub, ua, vb, va = cmap.cross_pieces[k]
            if vertical:
                union(ub, vb)
                union(ua, va)
            else:
                union(ub, va)
                union(ua, vb)

    n4 = 4 * cmap.n
    by_root = {}
    for p, piece in cmap.boundary_piece.items():
        by_root.setdefault(_find(parent, piece), []).append(p)
    pairs = []
    for root, ps in by_root.items():
        if len(ps) != 2:
            raise AssertionError(f"strand component touches {len(ps)} boundary points")
        pairs.append(tuple(sorted(ps)))

    left = set()
    right = set()
    for p, q in pairs:
        if q <= 2 * cmap.n:
            left.add((p, q))
        elif p > 2 * cmap.n:
            right.add(tuple(sorted((n4 + 1 - p, n4 + 1 - q))))
        elif q != n4 + 1 - p:
            raise AssertionError(f"asymmetric cross-side strand ({p},{q})")
    if left != right:
        raise AssertionError("uncrossing is not mirror-symmetric")

    boundary_roots = set(by_root)
    comp_pieces = {}
    for piece in range(cmap.n_pieces):
        r = _find(parent, piece)
        if r not in boundary_roots:
            comp_pieces.setdefault(r, piece)
    loop_orbits = 0
    seen = set()
    for r, piece in comp_pieces.items():
        if r in seen:
            continue
        m = _find(parent, cmap.mirror_piece[piece])
        seen.add(r)
        seen.add(m)
        loop_orbits += 1
    return frozenset(left), loop_orbits, uv, ph


def _iter_traces(cmap: ChordMap, class_bound: int = DEFAULT_CLASS_BOUND):
    k = cmap.num_classes
    if k > class_bound:
        raise ValueError(f"{k} resolution classes exceed the bound {class_bound}")
    for mask in range(1 << k):
        choices = [(mask >> i) & 1 == 1 for i in range(k)]
        left, loops, uv, ph = _trace(cmap, choices)
        weight = (2 ** loops) * (-1 if (uv + ph) % 2 else 1)
        yield choices, left, loops, uv, ph, weight


@dataclass(frozen=True)
class Uncrossing:
    choices: tuple      # per class, True = vertical
    diagram: SymTLDiagram
    loops: int          # mirror orbits of closed loops
    uv: int
    ph: int
    weight: int


def enumerate_uncrossings(cmap: ChordMap, class_bound: int = DEFAULT_CLASS_BOUND) -> list:
    out = []
    for choices, left, loops, uv, ph, weight in _iter_traces(cmap, class_bound):
        out.append(Uncrossing(tuple(choices), sym_diagram(cmap.n, left), loops, uv, ph, weight))
    return out


def _accumulate(cmap: ChordMap, class_bound: int) -> dict:
    acc = {}
    for _, left, _, _, _, weight in _iter_traces(cmap, class_bound):
        acc[left] = acc.get(left, 0) + weight
    return {sym_diagram(cmap.n, left): w for left, w in acc.items()}


def f_coefficient(pi, n: int, seed: int = 0, class_bound: int = DEFAULT_CLASS_BOUND) -> dict:
    """Total uncrossing weight per resulting diagram for the doubled matching."""
    return _accumulate(embed_nu_pi(pi, n, seed), class_bound)


def g_coefficient(d: TLDiagram, n: int, seed: int = 0, class_bound: int = DEFAULT_CLASS_BOUND) -> dict:
    """Total uncrossing weight per diagram for the doubled TL diagram."""
    return _accumulate(embed_nu_d(d, n, seed), class_bound)


def z_count(d: TLDiagram, n: int) -> int:
    """Number of edges of d with both ends among the n left points."""
    return sum(1 for u, v in d.edges if max(u, v) <= n)


def g_tilde_coefficient(d: TLDiagram, n: int, seed: int = 0) -> dict:
    sign = -1 if (z_count(d, n) * n) % 2 else 1
    return {D: sign * w for D, w in g_coefficient(d, n, seed).items()}
