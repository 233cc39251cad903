"""Independent reference implementations used by the tests.

Nothing here reuses the package's arithmetic: elements are rebuilt from their
external radical encoding as Fraction-weighted square roots, and matrices are
handled by sympy or by brute-force enumeration of group actions.
"""
from __future__ import annotations

import itertools
from fractions import Fraction
from math import gcd

import mpmath
import numpy as np
import sympy

RADICANDS = (1, 2, 3, 5, 6, 10, 15, 30)  # external coordinate order
PRIMES = (2, 3, 5)


# ---------------------------------------------------------------------------
# radical arithmetic over Q(sqrt2, sqrt3, sqrt5)


class Rad:
    """Sum of q * sqrt(r) over squarefree r with rational q."""

    def __init__(self, terms=None):
        self.terms = {r: Fraction(q) for r, q in (terms or {}).items() if q}

    @classmethod
    def of(cls, element) -> "Rad":
        c, den = element.to_radical()
        return cls({r: Fraction(ci, den) for r, ci in zip(RADICANDS, c)})

    @classmethod
    def integer(cls, k: int) -> "Rad":
        return cls({1: k})

    def __add__(self, other):
        out = dict(self.terms)
        for r, q in other.terms.items():
            out[r] = out.get(r, 0) + q
        return Rad(out)

    def __neg__(self):
        return Rad({r: -q for r, q in self.terms.items()})

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, other):
        out: dict = {}
        for (a, p), (b, q) in itertools.product(self.terms.items(), other.terms.items()):
            g = gcd(a, b)
            r = (a // g) * (b // g)
            out[r] = out.get(r, 0) + p * q * g
        return Rad(out)

    def __eq__(self, other):
        return self.terms == other.terms

    def conj(self, flips: int) -> "Rad":
        """Flip sqrt2 (bit 0), sqrt3 (bit 1), sqrt5 (bit 2)."""
        out = {}
        for r, q in self.terms.items():
            s = 1
            for bit, p in enumerate(PRIMES):
                if flips >> bit & 1 and r % p == 0:
                    s = -s
            out[r] = s * q
        return Rad(out)

    def to_sympy(self):
        return sum((sympy.Rational(q.numerator, q.denominator) * sympy.sqrt(r) for r, q in self.terms.items()),
                   sympy.Integer(0))

    def to_mpf(self, prec: int = 128):
        with mpmath.workprec(prec):
            return sum((mpmath.mpf(q.numerator) / q.denominator * mpmath.sqrt(r) for r, q in self.terms.items()),
                       mpmath.mpf(0))

    def external(self) -> tuple[list[int], int]:
        den = 1
        for q in self.terms.values():
            den = den * q.denominator // gcd(den, q.denominator)
        return [int(self.terms.get(r, 0) * den) for r in RADICANDS], den


def exact_sign(x: Rad) -> int:
    """Sign decided by sympy; square roots of distinct squarefree integers are independent."""
    e = x.to_sympy()
    if e == 0:
        return 0
    return 1 if e.is_positive else -1


def mp_sign(x: Rad, prec: int = 128) -> int | None:
    """Sign from a 128-bit evaluation, or None when too close to zero to trust."""
    with mpmath.workprec(prec):
        v = x.to_mpf(prec)
        scale = sum(abs(float(q)) * r ** 0.5 for r, q in x.terms.items()) or 1.0
        if abs(v) <= scale * mpmath.mpf(2) ** (-prec + 16):
            return None
        return 1 if v > 0 else -1


# ---------------------------------------------------------------------------
# matrices


def rad_matrix(A) -> list[list[Rad]]:
    return [[Rad.of(A[i, j]) for j in range(A.n)] for i in range(A.n)]


def sympy_matrix(A, flips: int = 0) -> sympy.Matrix:
    R = rad_matrix(A)
    return sympy.Matrix([[x.conj(flips).to_sympy() for x in row] for row in R])


X = sympy.Symbol("x")


def sympy_charpoly(A, flips: int = 0) -> list:
    """Coefficients low to high of det(xI - A) computed by sympy."""
    M = sympy_matrix(A, flips)
    coeffs = M.charpoly(X).all_coeffs()
    return [sympy.expand(c) for c in reversed(coeffs)]


def same_number(a, b) -> bool:
    return sympy.expand(a - b) == 0


def norm_polynomial(A) -> sympy.Poly:
    """Product of the char polys of every conjugate of A, a polynomial over Q."""
    mask = 0
    for i in range(A.n):
        for j in range(A.n):
            for r, q in Rad.of(A[i, j]).terms.items():
                for bit, p in enumerate(PRIMES):
                    if r % p == 0:
                        mask |= 1 << bit
    flips = [f for f in range(8) if f & ~mask == 0]
    prod = sympy.Integer(1)
    for f in flips:
        prod *= sympy_matrix(A, f).charpoly(X).as_expr()
    return sympy.Poly(sympy.expand(prod), X, domain=sympy.QQ)


def exact_in_sprime(A) -> bool:
    """All eigenvalues of all conjugates lie in [-2, 2], by Sturm counting over Q."""
    p = norm_polynomial(A)
    sq = sympy.Poly(sympy.sqf_part(p.as_expr()), X, domain=sympy.QQ)
    return sympy.count_roots(sq, -2, 2) == sq.degree()


def numeric_conjugate_eigs(A) -> list[np.ndarray]:
    out = []
    R = rad_matrix(A)
    mask = 0
    for row in R:
        for x in row:
            for r in x.terms:
                for bit, p in enumerate(PRIMES):
                    if r % p == 0:
                        mask |= 1 << bit
    for f in range(8):
        if f & ~mask:
            continue
        M = np.array([[float(x.conj(f).to_mpf(64)) for x in row] for row in R])
        out.append(np.linalg.eigvalsh(M))
    return out


# ---------------------------------------------------------------------------
# group actions by brute force


def matrix_tuple(coords: np.ndarray) -> tuple:
    return tuple(map(int, coords.reshape(-1)))


def conj_coords(G, flips: int) -> np.ndarray:
    """Coordinates of the entrywise conjugate of G, computed through Rad."""
    from cyclomat.ring import RingElement

    out = np.zeros_like(G.coords)
    for i in range(G.n):
        for j in range(G.n):
            c, den = Rad.of(G.matrix[i, j]).conj(flips).external()
            out[i, j] = RingElement.from_radical(c, den).coords
    return out


def orbit(G, sigmas, negation: bool = True):
    """Every image of G under permutations, switchings, the given Galois maps and +-1."""
    n = G.n
    base = [conj_coords(G, s) for s in sigmas]
    out = set()
    for arr in base:
        for perm in itertools.permutations(range(n)):
            P = arr[np.ix_(perm, perm)]
            for signs in itertools.product((1, -1), repeat=n - 1):
                d = np.array((1,) + signs)
                S = P * (d[:, None] * d[None, :])[:, :, None]
                out.add(matrix_tuple(S))
                if negation:
                    out.add(matrix_tuple(-S))
    return out


def brute_equivalent(G, H, sigmas) -> bool:
    if G.n != H.n:
        return False
    return matrix_tuple(H.coords) in orbit(G, sigmas)


def brute_classes(graphs, sigmas) -> list[list[int]]:
    """Partition indices of ``graphs`` into equivalence classes."""
    classes: list = []
    orbits: list = []
    for i, G in enumerate(graphs):
        t = matrix_tuple(G.coords)
        for cls, orb in zip(classes, orbits):
            if graphs[cls[0]].n == G.n and t in orb:
                cls.append(i)
                break
        else:
            classes.append([i])
            orbits.append(orbit(G, sigmas))
    return classes


# ---------------------------------------------------------------------------
# plain graph algorithms


def components(adj: dict, vertices) -> int:
    vertices = set(vertices)
    seen: set = set()
    count = 0
    for v in vertices:
        if v in seen:
            continue
        count += 1
        stack = [v]
        seen.add(v)
        while stack:
            u = stack.pop()
            for w in adj[u]:
                if w in vertices and w not in seen:
                    seen.add(w)
                    stack.append(w)
    return count


def adjacency(G) -> dict:
    nz = G.coords.any(axis=2)
    return {i: [j for j in range(G.n) if j != i and nz[i, j]] for i in range(G.n)}


def brute_cut_vertices(G) -> set:
    adj = adjacency(G)
    base = components(adj, range(G.n))
    return {v for v in range(G.n) if G.n > 1 and components(adj, set(range(G.n)) - {v}) > base}


def induced_connected_subsets(G):
    adj = adjacency(G)
    for r in range(1, G.n + 1):
        for S in itertools.combinations(range(G.n), r):
            if components(adj, S) == 1:
                yield S


_SQRT_RADICANDS = np.sqrt(np.array(RADICANDS, dtype=float))
_FLIP_SIGNS = np.array([
    [(-1) ** sum(1 for bit, p in enumerate(PRIMES) if f >> bit & 1 and r % p == 0) for r in RADICANDS]
    for f in range(8)
], dtype=float)


def radical_array(A) -> np.ndarray:
    """(n, n, 8) float array of external radical coordinates (already divided by den)."""
    out = np.zeros((A.n, A.n, 8))
    for i in range(A.n):
        for j in range(A.n):
            c, den = A[i, j].to_radical()
            out[i, j] = np.array(c, dtype=float) / den
    return out


def conjugate_spectra(A) -> np.ndarray:
    """Eigenvalues of all eight sign-flip images of A, shape (8, n)."""
    R = radical_array(A)
    mats = np.einsum("ijk,fk->fij", R, _FLIP_SIGNS * _SQRT_RADICANDS)
    return np.linalg.eigvalsh(mats)


def exact_boundary_eigenvalue(A, value: int, flips=range(8)) -> bool:
    """Some conjugate of A has ``value`` as an exact eigenvalue (sympy determinant)."""
    for f in flips:
        M = sympy_matrix(A, f) - value * sympy.eye(A.n)
        if sympy.expand(M.det(method="berkowitz")) == 0:
            return True
    return False
