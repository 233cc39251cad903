import itertools

import numpy as np
import pytest

from cyclomat.catalog import (
    FAMILIES,
    MIXED_TARGETS,
    FamilySpec,
    all_maximal_specs,
    build_family,
    build_sporadic,
    fig9_eigenvector,
    interlacing_ok,
    match_family,
    maximal_specs,
    maximality_certificate,
    verify_catalog,
)
from cyclomat.graph import RGraph, canonical, equivalent, is_galois_invariant
from cyclomat.ring import RingId
from cyclomat.spectral import char_poly, eigen_check, in_s, in_sprime
from oracles import induced_connected_subsets
from strategies import act, random_group_element

SIZES = {
    ("T2k", 3): 6, ("C2k", 2): 4, ("C2kPP", 2): 4, ("C2kPM", 4): 8, ("C2k1", 1): 3, ("C2k1", 3): 7,
    ("P1", 3): 3, ("P2", 2): 2, ("P3", 5): 5, ("Q", 3): 3,
}


@pytest.mark.parametrize("name,param", list(SIZES))
def test_family_sizes(name, param):
    G = build_family(name, param)
    assert G.n == SIZES[name, param] == FamilySpec(name, param).size


def test_family_parameter_ranges():
    for name, low in (("T2k", 3), ("C2k", 2), ("C2kPP", 2), ("C2kPM", 2), ("C2k1", 1), ("P1", 3), ("Q", 3)):
        with pytest.raises(ValueError):
            build_family(name, low - 1)
    with pytest.raises(ValueError):
        build_family("T2k")
    with pytest.raises(ValueError):
        build_family("Nope", 3)
    with pytest.raises(ValueError):
        build_sporadic("S99")
    assert set(FAMILIES) == {"T2k", "C2k", "C2kPP", "C2kPM", "C2k1", "P1", "P2", "P3", "Q"}


def test_small_family_shapes():
    C4 = build_family("C2k", 2)
    assert sorted(str(w) for _, _, w in C4.edges()) == ["-√2", "√2", "√2", "√2"]
    Q3 = build_family("Q", 3)
    assert [str(w) for _, _, w in Q3.edges()] == ["1", "1", "1"]
    assert all(not Q3.charge(v) for v in range(3))
    T6 = build_family("T2k", 3)
    assert in_s(T6.matrix)
    assert all(len(a) == 4 for a in T6.adjacency)


def test_catalog_verification():
    rep = verify_catalog()
    assert rep.ok, [line for line in rep.lines() if "FAIL" in line]
    assert rep.non_invariant == ["S4_2phi"]
    names = {str(e.spec) for e in rep.entries}
    assert {"S8†", "S14", "S16", "C2k(6)", "T2k(6)", "P2(8)", "Q(8)"} <= names


def test_named_examples():
    G = build_sporadic("S8dag")
    assert in_s(G.matrix) and maximality_certificate(G)
    assert not is_galois_invariant(build_sporadic("S4_2phi"))
    assert eigen_check(build_family("P2", 5).matrix, fig9_eigenvector(FamilySpec("P2", 5)), 2)


def test_non_maximal_graphs_fail_the_certificate():
    assert not maximality_certificate(build_family("P3", 3))
    assert not maximality_certificate(build_sporadic("S8dag").delete(0))


def test_s14_and_s16_are_four_regular_with_square_4i():
    for name in ("S14", "S16"):
        A = build_sporadic(name).coords[:, :, 0]
        assert np.array_equal(A @ A, 4 * np.eye(len(A), dtype=A.dtype))
    assert not equivalent(build_sporadic("S14"), build_family("T2k", 7))
    assert not equivalent(build_sporadic("S16"), build_family("T2k", 8))


@pytest.mark.parametrize("k", [3, 4, 5])
def test_toral_wrap_transcriptions_are_equivalent(k):
    """Every sign choice on the wrap-around edges that stays cyclotomic gives the same class."""
    T = build_family("T2k", k)
    base = canonical(T)
    n = T.n
    last, first = (n - 2, n - 1), (0, 1)
    wrap = [(a, b) for a in last for b in first]
    arr = T.coords.copy()
    cyclotomic = []
    for signs in itertools.product((1, -1), repeat=4):
        a2 = arr.copy()
        for (u, v), s in zip(wrap, signs):
            a2[u, v, 0] = a2[v, u, 0] = s
        G = RGraph(a2)
        if in_s(G.matrix):
            cyclotomic.append(signs)
            assert canonical(G) == base
    # only the ladder pattern and its negative survive
    assert cyclotomic == [(1, 1, -1, -1), (-1, -1, 1, 1)]


def test_match_family():
    rng = np.random.default_rng(8)
    C8 = build_family("C2k", 4)
    moved = act(C8, random_group_element(rng, C8.n, C8.matrix.mask))
    assert match_family(moved) == FamilySpec("C2k", 4)
    assert match_family(build_sporadic("S14")) == FamilySpec("S14")
    path = RGraph([["0", "1", "0", "0"], ["1", "0", "1", "0"], ["0", "1", "0", "1"], ["0", "0", "1", "0"]])
    assert match_family(path) is None
    assert match_family(build_family("P2", 6)) == FamilySpec("P2", 6)
    assert match_family(build_family("P2", 6), maximal_only=True) is None


def test_maximal_lists_are_unique_classes():
    keys = [canonical(build_family(s)) for s in all_maximal_specs(6)]
    assert len(set(keys)) == len(keys)


def test_maximal_specs_by_size():
    names = [str(s) for s in maximal_specs(RingId.ZSQRT2, max_n=10)]
    assert names == ["S2‡", "S4^(1,√2)", "S4^(2,√2)", "S4^(3,√2)", "S8†",
                     "C2k(2)", "C2k(3)", "C2k(4)", "C2k(5)", "C2k1(1)", "C2k1(2)", "C2k1(3)", "C2k1(4)"]
    assert len(maximal_specs(RingId.ZSQRT3)) == 3


@pytest.mark.parametrize("spec", [s for s in all_maximal_specs(4) if s.size <= 10], ids=str)
def test_downward_closure(spec):
    G = build_family(spec)
    for S in induced_connected_subsets(G):
        assert in_sprime(G.induced(S).matrix)


@pytest.mark.parametrize("name", ["S14", "S16"])
def test_downward_closure_large_sporadics(name):
    G = build_sporadic(name)
    rng = np.random.default_rng(11)
    for _ in range(200):
        r = int(rng.integers(1, G.n))
        S = sorted(rng.choice(G.n, size=r, replace=False))
        H = G.induced(S)
        if H.is_connected():
            assert in_s(H.matrix)


@pytest.mark.parametrize("spec", all_maximal_specs(5), ids=str)
def test_interlacing_of_maximals(spec):
    assert interlacing_ok(build_family(spec))


@pytest.mark.parametrize("family,low", [("P1", 3), ("P2", 2), ("P3", 2), ("Q", 3)])
def test_fig9_eigenvectors(family, low):
    for n in range(low, 9):
        spec = FamilySpec(family, n)
        G = build_family(spec)
        assert eigen_check(G.matrix, fig9_eigenvector(spec), 2)
        p = char_poly(G.matrix)
        assert p(2) == 0


def test_mixed_targets_are_catalog_graphs():
    assert len(MIXED_TARGETS) == 8
    for t in MIXED_TARGETS:
        name, _, k = t.partition(":")
        G = build_family(name, int(k) if k else None)
        assert in_s(G.matrix)
