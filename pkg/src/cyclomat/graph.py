"""Weighted graphs, the equivalence group action and canonical keys.

Two graphs are equivalent when one is obtained from the other by a signed
permutation (relabelling plus switching), an entrywise Galois automorphism,
and possibly a global sign change.  ``canonical`` computes a key that is
constant on exactly these orbits.

Canonical search
----------------
Vertices first receive colors from a Weisfeiler-Leman style refinement whose
labels are orbits of entries under sign and Galois action, so the colors are
the same for every variant +-sigma(A).  A code for a vertex ordering
v0, v1, ... is the sequence of chunks

    (color(v_k), charge(v_k), (w(v_k, v_0) s_k s_0, ..., w(v_k, v_{k-1}) s_k s_{k-1}))

where the switching signs s_k are chosen greedily: s_k makes the first nonzero
entry of its chunk the smaller of {e, -e}.  Orderings are restricted to
connected ones (each new vertex adjacent to an earlier one whenever that is
possible).  The key is the least code over all variants and orderings; the
search keeps every partial ordering that attains the least prefix.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence

import numpy as np

from .ring import RingElement, RingId, galois_group
from .spectral import SymMatrix, galois_array


def _key(arr_entry) -> tuple[int, ...]:
    return tuple(int(v) for v in arr_entry)


def _neg(t: tuple[int, ...]) -> tuple[int, ...]:
    return tuple(-v for v in t)


class RGraph:
    """Weighted graph view of a symmetric matrix.

    The diagonal holds charges; ``u ~ v`` iff the off-diagonal entry is
    nonzero.  Instances are immutable.
    """

    __slots__ = ("matrix", "name", "_adj", "_connected")

    def __init__(self, matrix, ring: RingId | None = None, name: str | None = None):
        if not isinstance(matrix, SymMatrix):
            matrix = SymMatrix(matrix, ring)
        elif ring is not None and ring != matrix.ring:
            matrix = SymMatrix(matrix.coords, ring)
        self.matrix = matrix
        self.name = name
        self._adj = None
        self._connected = None

    @property
    def n(self) -> int:
        return self.matrix.n

    @property
    def ring(self) -> RingId:
        return self.matrix.ring

    @property
    def coords(self) -> np.ndarray:
        return self.matrix.coords

    @property
    def adjacency(self) -> tuple[tuple[int, ...], ...]:
        if self._adj is None:
            nz = self.matrix.coords.any(axis=2)
            self._adj = tuple(
                tuple(int(j) for j in np.flatnonzero(nz[i]) if j != i) for i in range(self.n)
            )
        return self._adj

    def edges(self) -> list[tuple[int, int, RingElement]]:
        m = self.matrix
        return [(i, j, m[i, j]) for i in range(self.n) for j in self.adjacency[i] if i < j]

    def weight(self, u: int, v: int) -> RingElement:
        return self.matrix[u, v]

    def charge(self, v: int) -> RingElement:
        return self.matrix[v, v]

    def __eq__(self, other):
        if not isinstance(other, RGraph):
            return NotImplemented
        return self.matrix == other.matrix

    def __hash__(self):
        return hash(self.matrix)

    def __repr__(self):
        label = f" {self.name}" if self.name else ""
        return f"<RGraph{label} n={self.n} ring={self.ring.tag} edges={len(self.edges())}>"

    # group action
    def permute(self, perm: Sequence[int]) -> "RGraph":
        """Relabel so that new vertex i is old vertex perm[i]."""
        idx = list(perm)
        if sorted(idx) != list(range(self.n)):
            raise ValueError("not a permutation")
        return RGraph(self.matrix.principal(idx), name=self.name)

    def switch_set(self, signs: Sequence[int]) -> "RGraph":
        s = np.asarray(signs, dtype=np.int64)
        arr = self.coords * (s[:, None] * s[None, :])[:, :, None]
        return RGraph(SymMatrix(arr, self.ring), name=self.name)

    def galois(self, sigma: int) -> "RGraph":
        return RGraph(self.matrix.galois(sigma), name=self.name)

    def __neg__(self) -> "RGraph":
        return RGraph(-self.matrix, name=self.name)

    def induced(self, vertices: Iterable[int]) -> "RGraph":
        return RGraph(self.matrix.principal(list(vertices)))

    def delete(self, v: int) -> "RGraph":
        return RGraph(self.matrix.delete(v))

    def is_connected(self) -> bool:
        if self._connected is None:
            self._connected = _connected(self.adjacency)
        return self._connected


def _connected(adj: Sequence[Sequence[int]]) -> bool:
    n = len(adj)
    if n <= 1:
        return True
    parent = list(range(n))

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    comps = n
    for u in range(n):
        for v in adj[u]:
            a, b = find(u), find(v)
            if a != b:
                parent[a] = b
                comps -= 1
    return comps == 1


def is_connected(G: RGraph) -> bool:
    return G.is_connected()


def switch(G: RGraph, v: int) -> RGraph:
    """Negate every edge at ``v``; the charge of ``v`` is unchanged."""
    if not 0 <= v < G.n:
        raise IndexError(f"vertex {v} out of range for n={G.n}")
    s = [1] * G.n
    s[v] = -1
    return G.switch_set(s)


def cut_vertices(G: RGraph) -> set[int]:
    """Articulation points of the underlying graph (iterative Tarjan)."""
    adj = G.adjacency
    n = G.n
    disc = [-1] * n
    low = [0] * n
    cuts: set[int] = set()
    timer = 0
    for root in range(n):
        if disc[root] >= 0:
            continue
        disc[root] = low[root] = timer
        timer += 1
        root_children = 0
        stack = [(root, -1, iter(adj[root]))]
        while stack:
            v, parent, it = stack[-1]
            w = next(it, None)
            if w is None:
                stack.pop()
                if stack:
                    u = stack[-1][0]
                    low[u] = min(low[u], low[v])
                    if u != root and low[v] >= disc[u]:
                        cuts.add(u)
            elif disc[w] < 0:
                disc[w] = low[w] = timer
                timer += 1
                if v == root:
                    root_children += 1
                stack.append((w, v, iter(adj[w])))
            elif w != parent:
                low[v] = min(low[v], disc[w])
        if root_children > 1:
            cuts.add(root)
    return cuts


# ---------------------------------------------------------------------------
# canonical keys


@dataclass(frozen=True, order=False)
class CanonicalKey:
    """Orbit-invariant code of a graph.

    ``code`` is ``(n, chunks)`` where every chunk is
    ``(color, charge, entries_to_earlier_vertices)`` with ring elements given
    as integral-basis coordinate tuples.  Keys compare by ``code``.
    """

    code: tuple
    negation: bool = True
    galois: bool = True

    @property
    def n(self) -> int:
        return self.code[0]

    def __lt__(self, other: "CanonicalKey"):
        return self.code < other.code

    def __le__(self, other):
        return self.code <= other.code

    def __gt__(self, other):
        return self.code > other.code

    def __ge__(self, other):
        return self.code >= other.code

    def matrix(self, ring: RingId | None = None) -> SymMatrix:
        """The representative matrix spelled out by the code."""
        n, chunks = self.code
        arr = np.zeros((n, n, 8), dtype=np.int64)
        for k, (_, charge, row) in enumerate(chunks):
            arr[k, k] = charge
            for j, e in enumerate(row):
                arr[k, j] = e
                arr[j, k] = e
        return SymMatrix(arr, ring)

    def graph(self, ring: RingId | None = None) -> RGraph:
        return RGraph(self.matrix(ring))

    def to_bytes(self) -> bytes:
        flat: list[int] = [self.code[0], int(self.negation), int(self.galois)]
        for color, charge, row in self.code[1]:
            flat.append(color)
            flat.extend(charge)
            for e in row:
                flat.extend(e)
        out = bytearray()
        for v in flat:
            z = v << 1 if v >= 0 else ((-v) << 1) - 1
            while True:
                b = z & 0x7F
                z >>= 7
                if z:
                    out.append(b | 0x80)
                else:
                    out.append(b)
                    break
        return bytes(out)

    def hex(self) -> str:
        return self.to_bytes().hex()


def _entry_orbit_label(t: tuple[int, ...], sigmas: Sequence[int], negation: bool) -> tuple:
    arr = np.array(t, dtype=np.int64)
    opts = []
    for s in sigmas:
        c = _key(galois_array(arr, s))
        opts.append(c)
        if negation:
            opts.append(_neg(c))
    return min(opts)


def vertex_colors(G: RGraph, sigmas: Sequence[int], negation: bool) -> list[int]:
    """Stable refinement colors, invariant under the whole equivalence group."""
    n = G.n
    arr = G.coords
    label_cache: dict = {}

    def lab(t, off_diag):
        k = (t, off_diag)
        if k not in label_cache:
            # off-diagonal entries are also subject to switching signs
            label_cache[k] = _entry_orbit_label(t, sigmas, negation or off_diag)
        return label_cache[k]

    charge = [lab(_key(arr[v, v]), False) for v in range(n)]
    adj = G.adjacency
    elab = [{u: lab(_key(arr[v, u]), True) for u in adj[v]} for v in range(n)]
    # joint labels need consistent sigma across entries; the orbit-wise labels
    # are coarser than necessary but still invariant, which is all we need
    sig = [(charge[v], tuple(sorted(elab[v].values()))) for v in range(n)]
    colors = _rank(sig)
    while True:
        sig = [(colors[v], tuple(sorted((elab[v][u], colors[u]) for u in adj[v]))) for v in range(n)]
        new = _rank(sig)
        if len(set(new)) == len(set(colors)):
            return new
        colors = new


def _rank(sig: list) -> list[int]:
    order = {s: i for i, s in enumerate(sorted(set(sig)))}
    return [order[s] for s in sig]


def canonical(G: RGraph, negation: bool = True, galois: bool = True) -> CanonicalKey:
    """Least code over signed permutations, Galois variants and (optionally) -1."""
    n = G.n
    if n == 0:
        return CanonicalKey((0, ()), negation, galois)
    mask = G.matrix.mask
    sigmas = galois_group(mask) if galois else [0]
    colors = vertex_colors(G, sigmas, negation)
    eps = (1, -1) if negation else (1,)

    variants = []
    for s in sigmas:
        a = galois_array(G.coords, s) if s else G.coords
        for e in eps:
            variants.append(a if e == 1 else -a)

    # global rank table of entry keys (closed under negation)
    keys: set = {(0,) * 8}
    for a in variants:
        for t in {_key(x) for x in a.reshape(-1, 8)}:
            keys.add(t)
            keys.add(_neg(t))
    ordered = sorted(keys)
    rank = {t: i for i, t in enumerate(ordered)}
    neg = [rank[_neg(t)] for t in ordered]
    zero = rank[(0,) * 8]
    ranked = []
    for a in variants:
        flat = [rank[_key(x)] for x in a.reshape(-1, 8)]
        ranked.append([flat[i * n:(i + 1) * n] for i in range(n)])

    adj = G.adjacency
    best_code, _ = _search(n, colors, ranked, neg, zero, adj)
    chunks = tuple(
        (c, ordered[ch], tuple(ordered[r] for r in row)) for c, ch, row in best_code
    )
    return CanonicalKey((n, chunks), negation, galois)


def _search(n, colors, ranked, neg, zero, adj):
    """Level-synchronous search for the least code.

    Each state is (variant, order tuple, signs tuple, used bitmask).
    Returns the best code and the surviving states.
    """
    adjmask = [0] * n
    for v in range(n):
        for u in adj[v]:
            adjmask[v] |= 1 << u
    full = (1 << n) - 1
    cmin = min(colors)
    states = []
    best_first = None
    for vi, R in enumerate(ranked):
        for v in range(n):
            if colors[v] != cmin:
                continue
            ch = R[v][v]
            if best_first is None or ch < best_first:
                best_first = ch
                states = []
            if ch == best_first:
                states.append((vi, (v,), (1,), 1 << v, adjmask[v]))
    code = [(cmin, best_first, ())]
    for k in range(1, n):
        best = None
        nxt = []
        seen = set()
        for vi, order, signs, used, frontier in states:
            R = ranked[vi]
            cand_mask = frontier & ~used
            if not cand_mask:
                cand_mask = full & ~used
            # restrict to minimal color among candidates
            cands = []
            m = cand_mask
            while m:
                low = m & -m
                cands.append(low.bit_length() - 1)
                m ^= low
            cm = min(colors[c] for c in cands)
            if best is not None and cm > best[0]:
                continue
            for w in cands:
                if colors[w] != cm:
                    continue
                row_w = R[w]
                raw = [row_w[u] if s == 1 else neg[row_w[u]] for u, s in zip(order, signs)]
                sw = 1
                for r in raw:
                    if r != zero:
                        if neg[r] < r:
                            sw = -1
                        break
                if sw == -1:
                    raw = [neg[r] for r in raw]
                chunk = (cm, row_w[w], tuple(raw))
                if best is None or chunk < best:
                    best = chunk
                    nxt = []
                    seen = set()
                if chunk == best:
                    st_key = (vi, order + (w,))
                    if st_key in seen:
                        continue
                    seen.add(st_key)
                    nxt.append((vi, order + (w,), signs + (sw,), used | (1 << w), frontier | adjmask[w]))
        code.append(best)
        states = nxt
    return code, states


def canonical_form(G: RGraph, negation: bool = True, galois: bool = True) -> RGraph:
    """A representative graph of the class, read off the canonical key."""
    return canonical(G, negation, galois).graph(G.ring)


def automorphism_count(G: RGraph) -> int:
    """Number of least-code orderings (signed automorphisms modulo sign on components)."""
    n = G.n
    if n == 0:
        return 1
    colors = vertex_colors(G, [0], False)
    entries = {_key(x) for x in G.coords.reshape(-1, 8)} | {(0,) * 8}
    keys = sorted(entries | {_neg(t) for t in entries})
    rank = {t: i for i, t in enumerate(keys)}
    neg = [rank[_neg(t)] for t in keys]
    flat = [rank[_key(x)] for x in G.coords.reshape(-1, 8)]
    R = [flat[i * n:(i + 1) * n] for i in range(n)]
    _, states = _search(n, colors, [R], neg, rank[(0,) * 8], G.adjacency)
    return len(states)


def equivalent(G: RGraph, H: RGraph) -> bool:
    return G.n == H.n and canonical(G) == canonical(H)


def is_strongly_equivalent(G: RGraph, H: RGraph, galois: bool = False) -> bool:
    """Equivalence without the global sign change.

    By default only signed permutations are allowed, which is the relation
    used to decide Galois invariance.  ``galois=True`` also allows an
    entrywise automorphism.
    """
    if G.n != H.n:
        return False
    return canonical(G, negation=False, galois=galois) == canonical(H, negation=False, galois=galois)


def is_galois_invariant(G: RGraph) -> bool:
    """G is related to each of its Galois conjugates by a signed permutation."""
    base = canonical(G, negation=False, galois=False)
    for s in galois_group(G.matrix.mask):
        if s and canonical(G.galois(s), negation=False, galois=False) != base:
            return False
    return True


# ---------------------------------------------------------------------------
# structural predicates


def sqrt2_cycle_parity_ok(G: RGraph) -> bool:
    """Every cycle carries an even number of edges of weight +-sqrt2."""
    if G.matrix.mask & ~1:
        raise ValueError("cycle parity is defined for Z[sqrt2]-graphs")
    n = G.n
    arr = G.coords
    parity = [[bool(arr[u, v, 1] % 2) for v in range(n)] for u in range(n)]
    pot = [-1] * n
    for root in range(n):
        if pot[root] >= 0:
            continue
        pot[root] = 0
        stack = [root]
        while stack:
            u = stack.pop()
            for v in G.adjacency[u]:
                want = pot[u] ^ parity[u][v]
                if pot[v] < 0:
                    pot[v] = want
                    stack.append(v)
                elif pot[v] != want:
                    return False
    return True


def dominates(G: RGraph, H: RGraph, strict: bool = False) -> bool:
    """Some principal submatrix S of G satisfies S - H >= 0 entrywise.

    With ``strict=True`` the domination must also be proper: either G has
    more vertices than H, or S differs from H.
    """
    m, n = H.n, G.n
    if m > n:
        return False
    Hm, Gm = H.matrix, G.matrix
    for i in range(m):
        for j in range(m):
            if Hm[i, j].sign() < 0:
                raise ValueError("dominated graph must be nonnegative")
    ge_cache: dict = {}

    def ge(a: RingElement, b: RingElement) -> bool:
        k = (a.coords, b.coords)
        if k not in ge_cache:
            ge_cache[k] = (a - b).sign() >= 0
        return ge_cache[k]

    need_proper = strict and n == m
    image: list[int] = []

    def extend(i: int, proper: bool) -> bool:
        if i == m:
            return proper or not need_proper
        for g in range(n):
            if g in image:
                continue
            if not ge(Gm[g, g], Hm[i, i]):
                continue
            ok = True
            prop = proper or Gm[g, g] != Hm[i, i]
            for j, gj in enumerate(image):
                if not ge(Gm[g, gj], Hm[i, j]):
                    ok = False
                    break
                if Gm[g, gj] != Hm[i, j]:
                    prop = True
            if not ok:
                continue
            image.append(g)
            if extend(i + 1, prop):
                return True
            image.pop()
        return False

    return extend(0, False)
