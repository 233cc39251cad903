"""Named maximal graphs, parametric families and catalog verification."""
from __future__ import annotations

from dataclasses import dataclass, field
from functools import lru_cache
from typing import Iterable

import numpy as np

from ._sporadic_data import PRETTY, SPORADIC
from .enumeration import _reaches_s, connected_subgraph_keys
from .graph import CanonicalKey, RGraph, canonical, is_galois_invariant
from .ring import SQRT2, TWO, ZERO, ONE, RingElement, RingId, parse_element
from .spectral import SymMatrix, char_poly, eigen_check, in_s, in_sprime, interlaces

FAMILIES = ("T2k", "C2k", "C2kPP", "C2kPM", "C2k1", "P1", "P2", "P3", "Q")

# smallest admissible parameter; T2k, C2k, C2kPP, C2kPM, C2k1 take k, the
# path and cycle families take the vertex count n
_MIN_PARAM = {"T2k": 3, "C2k": 2, "C2kPP": 2, "C2kPM": 2, "C2k1": 1, "P1": 3, "P2": 2, "P3": 2, "Q": 3}


@dataclass(frozen=True)
class FamilySpec:
    """A family member (name, parameter) or a sporadic graph (id, None)."""

    name: str
    param: int | None = None

    @property
    def is_sporadic(self) -> bool:
        return self.name in SPORADIC

    @property
    def size(self) -> int:
        if self.is_sporadic:
            return len(SPORADIC[self.name][0])
        k = self.param
        if self.name in ("T2k", "C2k", "C2kPP", "C2kPM"):
            return 2 * k
        if self.name == "C2k1":
            return 2 * k + 1
        return k

    def __str__(self):
        if self.is_sporadic:
            return PRETTY.get(self.name, self.name)
        return f"{self.name}({self.param})"


class _Builder:
    def __init__(self):
        self.index: dict = {}
        self.charges: dict = {}
        self.edges: dict = {}

    def vertex(self, name, charge="0"):
        if name not in self.index:
            self.index[name] = len(self.index)
        self.charges[name] = parse_element(charge)
        return name

    def edge(self, u, v, w):
        self.edges[frozenset((u, v))] = (u, v, parse_element(w))

    def columns_pattern(self, x, y):
        """Join column x=(x1, x2) to column y=(y1, y2) with the ladder signs."""
        self.edge(x[0], y[0], "1")
        self.edge(x[0], y[1], "1")
        self.edge(x[1], y[0], "-1")
        self.edge(x[1], y[1], "-1")

    def graph(self, name=None) -> RGraph:
        n = len(self.index)
        M = [[ZERO] * n for _ in range(n)]
        for v, c in self.charges.items():
            M[self.index[v]][self.index[v]] = c
        for u, v, w in self.edges.values():
            i, j = self.index[u], self.index[v]
            M[i][j] = M[j][i] = w
        return RGraph(M, name=name)


def _columns(b: _Builder, k: int, prefix="x"):
    cols = []
    for i in range(k):
        cols.append((b.vertex(f"{prefix}{i}.1"), b.vertex(f"{prefix}{i}.2")))
    for i in range(k - 1):
        b.columns_pattern(cols[i], cols[i + 1])
    return cols


def build_family(spec: FamilySpec | str, param: int | None = None) -> RGraph:
    """Construct a family instance or a sporadic graph."""
    if isinstance(spec, str):
        spec = FamilySpec(spec, param)
    if spec.is_sporadic:
        return build_sporadic(spec.name)
    name, k = spec.name, spec.param
    if name not in _MIN_PARAM:
        raise ValueError(f"unknown family {name!r}")
    if k is None or k < _MIN_PARAM[name]:
        raise ValueError(f"{name} needs parameter >= {_MIN_PARAM[name]}, got {k}")
    b = _Builder()
    label = str(spec)
    if name == "T2k":
        cols = _columns(b, k)
        b.columns_pattern(cols[-1], cols[0])  # toral identification
    elif name == "C2k":
        bgn = b.vertex("bgn")
        cols = _columns(b, k - 1)
        end = b.vertex("end")
        b.edge(bgn, cols[0][0], "sqrt2")
        b.edge(bgn, cols[0][1], "sqrt2")
        b.edge(cols[-1][0], end, "sqrt2")
        b.edge(cols[-1][1], end, "-sqrt2")
    elif name in ("C2kPP", "C2kPM"):
        cols = _columns(b, k)
        first, last = cols[0], cols[-1]
        b.vertex(first[0], "1")
        b.vertex(first[1], "1")
        b.edge(first[0], first[1], "1")
        if name == "C2kPP":
            b.vertex(last[0], "1")
            b.vertex(last[1], "1")
            b.edge(last[0], last[1], "-1")
        else:
            b.vertex(last[0], "-1")
            b.vertex(last[1], "-1")
            b.edge(last[0], last[1], "1")
    elif name == "C2k1":
        bgn = b.vertex("bgn")
        cols = _columns(b, k)
        b.edge(bgn, cols[0][0], "sqrt2")
        b.edge(bgn, cols[0][1], "sqrt2")
        last = cols[-1]
        b.vertex(last[0], "1")
        b.vertex(last[1], "1")
        b.edge(last[0], last[1], "-1")
    elif name == "P1":
        vs = [b.vertex(i) for i in range(k)]
        for i in range(k - 1):
            w = "sqrt2" if i in (0, k - 2) else "1"
            b.edge(vs[i], vs[i + 1], w)
    elif name == "P2":
        vs = [b.vertex(i) for i in range(k)]
        b.vertex(0, "1")
        for i in range(k - 1):
            b.edge(vs[i], vs[i + 1], "sqrt2" if i == k - 2 else "1")
    elif name == "P3":
        vs = [b.vertex(i) for i in range(k)]
        b.vertex(0, "1")
        b.vertex(k - 1, "1")
        for i in range(k - 1):
            b.edge(vs[i], vs[i + 1], "1")
    elif name == "Q":
        vs = [b.vertex(i) for i in range(k)]
        for i in range(k):
            b.edge(vs[i], vs[(i + 1) % k], "1")
    return b.graph(label)


@lru_cache(maxsize=None)
def build_sporadic(name: str) -> RGraph:
    if name not in SPORADIC:
        raise ValueError(f"unknown sporadic graph {name!r}")
    vertices, charges, edges = SPORADIC[name]
    b = _Builder()
    for v in vertices:
        b.vertex(v, charges.get(v, "0"))
    for u, v, w in edges:
        b.edge(u, v, w)
    return b.graph(PRETTY.get(name, name))


def fig9_eigenvector(spec: FamilySpec) -> list[RingElement]:
    """The positive eigenvector (eigenvalue 2) attached to P1, P2, P3 and Q."""
    n = spec.param
    if spec.name == "P1":
        return [SQRT2] + [TWO] * (n - 2) + [SQRT2]
    if spec.name == "P2":
        return [TWO] * (n - 1) + [SQRT2]
    if spec.name in ("P3", "Q"):
        return [ONE] * n
    raise ValueError(f"{spec.name} has no recorded eigenvector")


# ---------------------------------------------------------------------------
# classification lists

MAXIMAL_SPORADICS = {
    RingId.Z: ("S1", "S2", "S7", "S8", "S8prime", "S14", "S16"),
    RingId.ZSQRT2: ("S2ddag", "S4_1sqrt2", "S4_2sqrt2", "S4_3sqrt2", "S8dag"),
    RingId.ZPHI: ("S3", "S4_1phi", "S4_2phi", "S4_3phi", "S6", "S8dagdag", "S8ddag"),
    RingId.ZSQRT3: ("S2prime", "S2dag", "S4_sqrt3"),
}
MAXIMAL_FAMILIES = {
    RingId.Z: ("T2k", "C2kPP", "C2kPM"),
    RingId.ZSQRT2: ("C2k", "C2k1"),
    RingId.ZPHI: (),
    RingId.ZSQRT3: (),
}


def maximal_specs(ring: RingId, max_n: int | None = None, k_max: int = 6) -> list[FamilySpec]:
    """Maximal graphs listed for ``ring`` (non-Z entries for the quadratic rings)."""
    out = [FamilySpec(s) for s in MAXIMAL_SPORADICS[ring]]
    for fam in MAXIMAL_FAMILIES[ring]:
        k = _MIN_PARAM[fam]
        while True:
            spec = FamilySpec(fam, k)
            if max_n is not None:
                if spec.size > max_n:
                    break
            elif k > k_max:
                break
            out.append(spec)
            k += 1
    if max_n is not None:
        out = [s for s in out if s.size <= max_n]
    return out


def all_maximal_specs(k_max: int = 6) -> list[FamilySpec]:
    out = []
    for ring in (RingId.Z, RingId.ZSQRT2, RingId.ZPHI, RingId.ZSQRT3):
        out.extend(maximal_specs(ring, k_max=k_max))
    return out


# ---------------------------------------------------------------------------
# verification


def maximality_certificate(G: RGraph, ring: RingId = RingId.COMPOSITUM, depth: int = 8) -> bool:
    """No chain of connected one-vertex extensions inside S' reaches S."""
    status, _ = _reaches_s(G.coords, ring, depth)
    return status == "none"


@dataclass
class CatalogEntry:
    spec: FamilySpec
    graph: RGraph
    checks: dict = field(default_factory=dict)

    @property
    def ok(self) -> bool:
        return all(self.checks.values())

    def failures(self) -> list[str]:
        return [k for k, v in self.checks.items() if not v]


@dataclass
class CatalogReport:
    entries: list = field(default_factory=list)
    non_invariant: list = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return all(e.ok for e in self.entries) and self.non_invariant == ["S4_2phi"]

    def lines(self) -> list[str]:
        out = []
        for e in self.entries:
            status = "ok" if e.ok else "FAIL " + ",".join(e.failures())
            detail = " ".join(f"{k}={'y' if v else 'n'}" for k, v in e.checks.items())
            out.append(f"{str(e.spec):12s} n={e.graph.n:<3d} {status:8s} {detail}")
        names = ", ".join(PRETTY.get(s, s) for s in self.non_invariant) or "none"
        out.append(f"maximal graphs that are not Galois invariant: {names}")
        return out


def verify_catalog(k_max: int = 6, fig9_max: int = 8) -> CatalogReport:
    """Check every listed maximal graph and the eigenvector families."""
    rep = CatalogReport()
    for spec in all_maximal_specs(k_max):
        G = build_family(spec)
        checks = {
            "in_s": in_s(G.matrix),
            "connected": G.is_connected(),
            "maximal": maximality_certificate(G),
        }
        inv = is_galois_invariant(G)
        # S4^(2,phi) is the one maximal graph expected to fail invariance
        checks["galois_invariance_as_expected"] = inv == (spec.name != "S4_2phi")
        if not inv:
            rep.non_invariant.append(spec.name)
        rep.entries.append(CatalogEntry(spec, G, checks))
    for fam, lo in (("P1", 3), ("P2", 2), ("P3", 2), ("Q", 3)):
        for n in range(lo, fig9_max + 1):
            spec = FamilySpec(fam, n)
            G = build_family(spec)
            x = fig9_eigenvector(spec)
            rep.entries.append(CatalogEntry(spec, G, {"eigen_2": eigen_check(G.matrix, x, 2)}))
    return rep


def interlacing_ok(G: RGraph) -> bool:
    """Every one-vertex-deleted principal submatrix interlaces with G."""
    p = char_poly(G.matrix)
    return all(interlaces(p, char_poly(G.matrix.delete(v))) for v in range(G.n))


# ---------------------------------------------------------------------------
# template matching


@lru_cache(maxsize=None)
def _templates_of_size(n: int, maximal_only: bool) -> dict:
    out: dict = {}
    specs: list[FamilySpec] = [FamilySpec(s) for s in SPORADIC if len(SPORADIC[s][0]) == n]
    for fam in ("T2k", "C2k", "C2kPP", "C2kPM", "C2k1") + (() if maximal_only else ("P1", "P2", "P3", "Q")):
        for p in range(_MIN_PARAM[fam], n + 1):
            spec = FamilySpec(fam, p)
            if spec.size == n:
                specs.append(spec)
    for spec in specs:
        out.setdefault(canonical(build_family(spec)), spec)
    return out


def match_family(G: RGraph, maximal_only: bool = False) -> FamilySpec | None:
    """The catalog graph equivalent to G, if any."""
    return _templates_of_size(G.n, maximal_only).get(canonical(G))


def maximal_template_name(G: RGraph) -> str | None:
    spec = match_family(G, maximal_only=True)
    return str(spec) if spec is not None else None


def template_keys(max_n: int) -> dict[CanonicalKey, FamilySpec]:
    """Canonical keys of every maximal catalog graph with at most ``max_n`` vertices."""
    out: dict = {}
    for n in range(1, max_n + 1):
        out.update(_templates_of_size(n, True))
    return out


def maximal_keys(ring: RingId, max_n: int) -> dict[CanonicalKey, FamilySpec]:
    """Canonical keys of the listed maximal graphs of ``ring`` up to ``max_n`` vertices."""
    return {canonical(build_family(s)): s for s in maximal_specs(ring, max_n=max_n)}


MIXED_TARGETS = ("S2dag", "C2kPM:2", "S4_1phi", "S4_3phi", "S4_1sqrt2", "S7", "S8", "S8prime")


def mixed_targets() -> list[RGraph]:
    out = []
    for t in MIXED_TARGETS:
        if ":" in t:
            name, k = t.split(":")
            out.append(build_family(FamilySpec(name, int(k))))
        else:
            out.append(build_sporadic(t))
    return out


def subgraph_keys(graphs: Iterable[RGraph]) -> set[CanonicalKey]:
    keys: set = set()
    for G in graphs:
        keys |= connected_subgraph_keys(G)
    return keys
