"""Exhaustive growth of connected members of S' one vertex at a time.

Level k+1 is obtained from level k by attaching a new vertex in every
admissible way, screening the candidates numerically, confirming borderline
ones exactly, and deduplicating by canonical key.  Every connected member of
S'_{k+1} has a non-cut vertex whose deletion leaves a connected member of
S'_k (eigenvalues interlace for every conjugate), so the growth is complete.

In *proper* mode (the default for every ring except Z) levels k >= 2 only keep
graphs with at least one irrational entry.  Level 1 keeps every admissible
single vertex so rational seeds can still be grown.  This is still complete:
a connected graph on at least three vertices with an irrational entry always
has a non-cut vertex whose deletion keeps an irrational entry.
"""
from __future__ import annotations

import itertools
import logging
from collections import deque
from dataclasses import dataclass, field
from functools import lru_cache
from typing import Callable, Iterable, Sequence

import numpy as np

from .graph import CanonicalKey, RGraph, canonical, cut_vertices
from .ring import RingElement, RingId, admissible_entries, galois_group, parse_element
from .spectral import (
    SymMatrix,
    char_poly_coords,
    conjugate_floats,
    sprime_from_charpoly,
)

log = logging.getLogger(__name__)

TOL = 1e-8

# exact squares of admissible entries as (a, b) meaning a + b*phi
_SQUARE = {}


def _square_pair(e: RingElement) -> tuple[int, int]:
    sq = e * e
    c = sq.coords
    if any(c[i] for i in (1, 2, 3, 5, 6, 7)):
        raise ValueError(f"square of {e} leaves Z[phi]")
    return c[0], c[4]


@lru_cache(maxsize=None)
def degree_ok(a: int, b: int) -> bool:
    """a + b*phi <= 4 in both real embeddings of Q(sqrt5), decided exactly."""
    # a + b(1 +- sqrt5)/2 <= 4  <=>  +-b*sqrt5 <= 8 - 2a - b
    r = 8 - 2 * a - b
    for t in (b, -b):
        if t >= 0:
            if r < 0 or 5 * t * t > r * r:
                return False
        elif r < 0 and 5 * t * t < r * r:
            return False
    return True


# ---------------------------------------------------------------------------
# data types


@dataclass
class EnumerationLevel:
    """Canonical representatives of one level, sorted by key."""

    n: int
    ring: RingId
    members: dict  # CanonicalKey -> RGraph
    in_s: dict  # CanonicalKey -> bool
    parents: dict  # CanonicalKey -> tuple of parent keys
    proper: bool = False

    def __len__(self):
        return len(self.members)

    def keys(self) -> list[CanonicalKey]:
        return list(self.members)

    def graphs(self) -> list[RGraph]:
        return list(self.members.values())

    def s_members(self) -> list[CanonicalKey]:
        return [k for k in self.members if self.in_s[k]]

    def sprime_only(self) -> list[CanonicalKey]:
        return [k for k in self.members if not self.in_s[k]]

    def member_ring(self, key: CanonicalKey) -> RingId:
        return RingId.from_mask(self.members[key].matrix.mask)


@dataclass
class MaximalityReport:
    """Per-member status: 'maximal', 'extendable' or 'undecided-at-horizon'."""

    status: dict = field(default_factory=dict)  # key -> str
    witness: dict = field(default_factory=dict)  # key -> member of S containing it, or None
    level_of: dict = field(default_factory=dict)  # key -> n
    graphs: dict = field(default_factory=dict)  # key -> RGraph
    family: dict = field(default_factory=dict)  # key -> name of matched template

    def maximal(self) -> list[CanonicalKey]:
        return [k for k, s in self.status.items() if s == "maximal"]

    def undecided(self) -> list[CanonicalKey]:
        return [k for k, s in self.status.items() if s == "undecided-at-horizon"]


# ---------------------------------------------------------------------------
# candidate generation


class _EntryTable:
    """Admissible entries of a ring with coordinates, squares and sign pairs."""

    def __init__(self, ring: RingId):
        self.ring = ring
        self.elements = admissible_entries(ring)
        self.coords = np.array([e.coords for e in self.elements], dtype=np.int64)
        self.squares = [_square_pair(e) for e in self.elements]
        self.zero = 0
        # entries come as 0, +b1, -b1, +b2, -b2, ...; the odd ones are the
        # representatives used for the first nonzero edge of a new vertex
        self.positive = [i for i in range(1, len(self.elements), 2)]
        self.nonzero = list(range(1, len(self.elements)))
        self.mask = ring.mask


@lru_cache(maxsize=None)
def _entry_table(ring: RingId) -> _EntryTable:
    return _EntryTable(ring)


def _degrees(arr: np.ndarray) -> list[tuple[int, int]]:
    """Exact degrees of all vertices as (a, b) with value a + b*phi."""
    n = arr.shape[0]
    out = []
    for v in range(n):
        a = b = 0
        for u in range(n):
            c = arr[v, u]
            if c.any():
                sa, sb = _square_pair(RingElement([int(t) for t in c]))
                a += sa
                b += sb
        out.append((a, b))
    return out


def _candidate_rows(arr: np.ndarray, table: _EntryTable) -> list[tuple[int, tuple[int, ...]]]:
    """All (charge, edges) choices for a new vertex respecting the degree bound.

    Edges are indices into the entry table; at least one edge is nonzero and
    the first nonzero edge is a positive representative.
    """
    n = arr.shape[0]
    deg = _degrees(arr)
    sq = table.squares
    out: list[tuple[int, tuple[int, ...]]] = []
    all_idx = range(len(table.elements))
    edges = [0] * n

    def rec(i: int, da: int, db: int, started: bool, charge: int):
        if i == n:
            if started:
                out.append((charge, tuple(edges)))
            return
        choices = all_idx if started else [0] + table.positive
        va, vb = deg[i]
        for e in choices:
            sa, sb = sq[e]
            if e and not (degree_ok(va + sa, vb + sb) and degree_ok(da + sa, db + sb)):
                continue
            edges[i] = e
            rec(i + 1, da + sa, db + sb, started or e != 0, charge)
        edges[i] = 0

    for c in all_idx:
        sa, sb = sq[c]
        if degree_ok(sa, sb):
            rec(0, sa, sb, False, c)
    return out


def _assemble(arr: np.ndarray, rows, table: _EntryTable) -> np.ndarray:
    n = arr.shape[0]
    B = len(rows)
    out = np.zeros((B, n + 1, n + 1, 8), dtype=np.int64)
    out[:, :n, :n] = arr
    if not B:
        return out
    charges = np.array([c for c, _ in rows])
    edges = np.array([e for _, e in rows]).reshape(B, n)
    ec = table.coords[edges]  # (B, n, 8)
    out[:, n, :n] = ec
    out[:, :n, n] = ec
    out[:, n, n] = table.coords[charges]
    return out


def _screen(cands: np.ndarray, mask: int) -> tuple[np.ndarray, np.ndarray]:
    """Numeric screen; returns (possible, certain) boolean arrays."""
    if len(cands) == 0:
        return np.zeros(0, bool), np.zeros(0, bool)
    fl = conjugate_floats(cands, mask)  # (B, g, m, m)
    ev = np.linalg.eigvalsh(fl)
    lo = ev[..., 0].min(axis=-1)
    hi = ev[..., -1].max(axis=-1)
    possible = (hi <= 2 + TOL) & (lo >= -2 - TOL)
    certain = (hi < 2 - TOL) & (lo > -2 + TOL)
    return possible, certain


def _arr_mask(arr: np.ndarray) -> int:
    m = 0
    for i in np.flatnonzero(arr.reshape(-1, 8).any(axis=0)):
        m |= int(i)
    return m


def _in_sprime_arr(arr: np.ndarray) -> bool:
    mask = _arr_mask(arr)
    return sprime_from_charpoly(char_poly_coords(arr, mask), mask)


def _is_integral_arr(arr: np.ndarray) -> bool:
    return all(not any(c[1:]) for c in char_poly_coords(arr, _arr_mask(arr)))


def _sprime_extensions(arr: np.ndarray, ring: RingId) -> Iterable[np.ndarray]:
    """Coordinate arrays of all one-vertex extensions of ``arr`` lying in S'."""
    table = _entry_table(ring)
    rows = _candidate_rows(arr, table)
    if not rows:
        return
    cands = _assemble(arr, rows, table)
    possible, certain = _screen(cands, ring.mask)
    for idx in np.flatnonzero(possible):
        c = cands[idx]
        if certain[idx] or _in_sprime_arr(c):
            yield c


def extensions(G: RGraph, ring: RingId) -> list[RGraph]:
    """Connected one-vertex extensions of G inside S', one per equivalence class."""
    found: dict = {}
    for c in _sprime_extensions(G.coords, ring):
        H = RGraph(SymMatrix(c))
        k = canonical(H)
        if k not in found:
            found[k] = H
    return [found[k] for k in sorted(found)]


# ---------------------------------------------------------------------------
# level-by-level enumeration


def _singletons(ring: RingId) -> list[np.ndarray]:
    table = _entry_table(ring)
    out = []
    for i, e in enumerate(table.elements):
        sa, sb = table.squares[i]
        if degree_ok(sa, sb):
            out.append(table.coords[i].reshape(1, 1, 8).copy())
    return out


def _make_level(n, ring, found: dict, in_s: dict, parents: dict, proper: bool) -> EnumerationLevel:
    keys = sorted(found)
    return EnumerationLevel(
        n=n,
        ring=ring,
        members={k: found[k] for k in keys},
        in_s={k: in_s[k] for k in keys},
        parents={k: tuple(sorted(parents.get(k, ()))) for k in keys},
        proper=proper,
    )


def enumerate_sprime(
    ring: RingId,
    n_max: int,
    proper: bool | None = None,
    progress: Callable[[str], None] | None = None,
) -> list[EnumerationLevel]:
    """Levels 1..n_max of connected members of S' over ``ring``.

    ``proper`` defaults to True for every ring except Z.
    """
    if n_max < 1:
        raise ValueError("n_max must be at least 1")
    if proper is None:
        proper = ring != RingId.Z
    report = progress or (lambda msg: log.info(msg))

    found: dict = {}
    in_s: dict = {}
    for arr in _singletons(ring):
        if not _in_sprime_arr(arr):
            continue
        G = RGraph(SymMatrix(arr))
        k = canonical(G)
        if k not in found:
            found[k] = G
            in_s[k] = _is_integral_arr(arr)
    levels = [_make_level(1, ring, found, in_s, {}, proper)]
    report(f"{ring.tag} n=1: {len(found)} members")

    for n in range(2, n_max + 1):
        prev = levels[-1]
        found, in_s, parents = {}, {}, {}
        rejected: set = set()
        for pkey, P in prev.members.items():
            for c in _sprime_extensions(P.coords, ring):
                if proper and not _arr_mask(c):
                    continue
                H = RGraph(SymMatrix(c))
                k = canonical(H)
                if k in found:
                    parents[k].add(pkey)
                    continue
                found[k] = H
                in_s[k] = _is_integral_arr(c)
                parents[k] = {pkey}
        levels.append(_make_level(n, ring, found, in_s, parents, proper))
        report(f"{ring.tag} n={n}: {len(found)} members ({sum(1 for v in in_s.values() if not v)} outside S)")
        if not found:
            # nothing more can grow; remaining levels are empty
            for m in range(n + 1, n_max + 1):
                levels.append(_make_level(m, ring, {}, {}, {}, proper))
            break
    return levels


def split_level(level: EnumerationLevel) -> tuple[list[RGraph], list[RGraph]]:
    """(members of S_n, members of S'_n outside S_n)."""
    s = [level.members[k] for k in level.members if level.in_s[k]]
    sp = [level.members[k] for k in level.members if not level.in_s[k]]
    return s, sp


TABLE_RINGS = (RingId.ZPHI, RingId.ZSQRT2, RingId.ZSQRT3)


@dataclass
class Table1Row:
    n: int
    total: int
    by_ring: dict  # RingId -> count

    def cells(self) -> list[int]:
        return [self.total] + [self.by_ring.get(r, 0) for r in TABLE_RINGS]


def table1(n_max: int = 6, levels: list[EnumerationLevel] | None = None) -> list[Table1Row]:
    """Counts of S'_n outside S_n up to equivalence, split by quadratic ring."""
    if levels is None:
        levels = enumerate_sprime(RingId.COMPOSITUM, n_max, proper=True)
    rows = []
    for lev in levels[:n_max]:
        by_ring: dict = {}
        total = 0
        for k in lev.sprime_only():
            r = lev.member_ring(k)
            by_ring[r] = by_ring.get(r, 0) + 1
            total += 1
        rows.append(Table1Row(lev.n, total, by_ring))
    return rows


# ---------------------------------------------------------------------------
# seeds with two different irrationalities


def seed_graphs() -> dict[str, RGraph]:
    """The two-vertex seeds X1..X5 used to rule out mixed entries."""
    spec = {
        "X1": ("phi", "0", "phibar"),
        "X2": ("1", "-1", "sqrt2"),
        "X3": ("1", "-1", "sqrt3"),
        "X4": ("1", "-1", "phi"),
        "X5": ("1", "-1", "1"),
    }
    out = {}
    for name, (a, b, w) in spec.items():
        out[name] = RGraph([[a, w], [w, b]], name=name)
    return out


def mixed_seed_closure(
    seeds: Sequence[RGraph] | None = None,
    ring: RingId = RingId.COMPOSITUM,
    max_n: int = 32,
) -> list[RGraph]:
    """All connected supergraphs in S' of the seeds, one per class, sorted by key.

    The closure is grown one vertex at a time and terminates because the
    supergraphs of these seeds are bounded in size; ``max_n`` is a guard.
    """
    if seeds is None:
        seeds = list(seed_graphs().values())
    found: dict = {}
    frontier = []
    for G in seeds:
        k = canonical(G)
        if k not in found:
            found[k] = G
            frontier.append(G)
    while frontier:
        nxt = []
        for G in frontier:
            if G.n >= max_n:
                raise RuntimeError("closure did not terminate below the size guard")
            for c in _sprime_extensions(G.coords, ring):
                H = RGraph(SymMatrix(c))
                k = canonical(H)
                if k not in found:
                    found[k] = H
                    nxt.append(H)
        frontier = nxt
    return [found[k] for k in sorted(found)]


def connected_subgraph_keys(G: RGraph) -> set[CanonicalKey]:
    """Canonical keys of every connected induced subgraph of G (including G)."""
    n = G.n
    adj = G.adjacency
    seen_sets: set = set()
    keys: set = set()
    # grow connected vertex sets from singletons
    stack = [frozenset([v]) for v in range(n)]
    while stack:
        s = stack.pop()
        if s in seen_sets:
            continue
        seen_sets.add(s)
        keys.add(canonical(G.induced(sorted(s))))
        nb = set()
        for v in s:
            nb.update(adj[v])
        for u in nb - s:
            stack.append(s | {u})
    return keys


# ---------------------------------------------------------------------------
# maximality


def _reaches_s(arr: np.ndarray, ring: RingId, depth: int) -> tuple[str, np.ndarray | None]:
    """Chase one-vertex extensions of a member of S' looking for a member of S.

    Returns ('s', witness), ('none', None) when no extension chain reaches S,
    or ('horizon', None) when the depth guard was hit.
    """
    seen: set = set()
    frontier = [arr]
    for _ in range(depth):
        nxt = []
        for a in frontier:
            for c in _sprime_extensions(a, ring):
                if _is_integral_arr(c):
                    return "s", c
                k = canonical(RGraph(SymMatrix(c)))
                if k not in seen:
                    seen.add(k)
                    nxt.append(c)
        if not nxt:
            return "none", None
        frontier = nxt
    return "horizon", None


def maximality_report(
    levels: list[EnumerationLevel],
    depth: int = 8,
    templates: Callable[[RGraph], str | None] | None = None,
) -> MaximalityReport:
    """Classify every member as maximal, extendable or undecided-at-horizon.

    A member is extendable when some chain of connected one-vertex extensions
    inside S' reaches a member of S.  Below the top level the child links
    recorded during enumeration are used; the top level is extended directly.
    ``templates`` maps a graph to a family name when it is a known maximal
    instance; it is consulted only for members left undecided by the chase.
    """
    rep = MaximalityReport()
    if not levels:
        return rep
    ring = levels[0].ring
    children: dict = {}
    for lev in levels[1:]:
        for k, ps in lev.parents.items():
            for p in ps:
                children.setdefault(p, []).append((lev, k))

    # memo for members of S' outside S: does a chain from here reach S?
    memo: dict = {}

    def chase(lev_idx: int, key: CanonicalKey) -> tuple[str, RGraph | None]:
        if key in memo:
            return memo[key]
        kids = children.get(key, [])
        result: tuple[str, RGraph | None] = ("none", None)
        lev = levels[lev_idx]
        if lev_idx == len(levels) - 1:
            st, w = _reaches_s(lev.members[key].coords, ring, depth)
            result = (st, RGraph(SymMatrix(w)) if w is not None else None)
        else:
            undecided = False
            for clev, ck in kids:
                if clev.in_s[ck]:
                    result = ("s", clev.members[ck])
                    break
                st, w = chase(lev_idx + 1, ck)
                if st == "s":
                    result = ("s", w)
                    break
                if st == "horizon":
                    undecided = True
            else:
                if undecided:
                    result = ("horizon", None)
        memo[key] = result
        return result

    for idx, lev in enumerate(levels):
        for k, G in lev.members.items():
            st, w = chase(idx, k)
            rep.level_of[k] = lev.n
            rep.graphs[k] = G
            if st == "s":
                rep.status[k] = "extendable"
                rep.witness[k] = w
            elif st == "none":
                rep.status[k] = "maximal"
                rep.witness[k] = None
            else:
                name = templates(G) if templates else None
                if name is not None:
                    rep.status[k] = "maximal"
                    rep.family[k] = name
                else:
                    rep.status[k] = "undecided-at-horizon"
                rep.witness[k] = None
    return rep
