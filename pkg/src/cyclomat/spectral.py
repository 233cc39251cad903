"""Characteristic polynomials and exact spectral membership tests.

The characteristic polynomial is computed with Berkowitz's division-free
algorithm.  Ring elements are mapped to integer matrices through their regular
representation on the integral basis, so the whole computation becomes integer
linear algebra that numpy can vectorise.  When an a priori bound shows that
the coefficients fit in 62 bits the work is done in wrapping int64 arithmetic
(exact modulo 2**64, hence exact); otherwise Python integers are used.
"""
from __future__ import annotations

import math
from fractions import Fraction
from functools import lru_cache
from typing import Iterable, Sequence

import numpy as np

from .ring import (
    _MUL,
    _RADICAND,
    _galois_coords,
    _radical_coords2,
    _sign_radical_sum,
    ONE,
    ZERO,
    RingElement,
    RingId,
    admissible_entries,
    galois_group,
    parse_element,
)

# ---------------------------------------------------------------------------
# basis helpers


def basis_indices(mask: int) -> tuple[int, ...]:
    """Integral-basis indices spanning the subring with radical ``mask``."""
    return tuple(i for i in range(8) if i & ~mask == 0)


@lru_cache(maxsize=None)
def _regular_rep(mask: int) -> np.ndarray:
    """E[i] = matrix of multiplication by the i-th basis element of the subring."""
    idx = basis_indices(mask)
    pos = {b: k for k, b in enumerate(idx)}
    d = len(idx)
    E = np.zeros((d, d, d), dtype=np.int64)
    for a, i in enumerate(idx):
        for c, j in enumerate(idx):
            for k, coef in _MUL[i, j]:
                E[a, pos[k], c] += coef
    return E


@lru_cache(maxsize=None)
def embedding_table(mask: int = 7) -> np.ndarray:
    """table[s, i] = float value of sigma_s applied to basis element i.

    Rows are indexed by the automorphisms in ``galois_group(mask)``.
    """
    out = []
    for s in galois_group(mask):
        row = []
        for i in range(8):
            e = [0] * 8
            e[i] = 1
            row.append(float(RingElement(_galois_coords(e, s))))
        out.append(row)
    return np.array(out)


@lru_cache(maxsize=None)
def _coord_norm(mask: int) -> float:
    """Row-sum norm of the map from conjugate values back to coordinates."""
    idx = basis_indices(mask)
    T = embedding_table(mask)[:, idx]
    return float(np.abs(np.linalg.inv(T)).sum(axis=1).max())


# ---------------------------------------------------------------------------
# matrices


def _as_element(x) -> RingElement:
    return x if isinstance(x, RingElement) else parse_element(x)


class SymMatrix:
    """Immutable symmetric matrix over Z[sqrt2, sqrt3, phi].

    ``coords`` is an int64 array of shape (n, n, 8) holding the integral-basis
    coordinates of every entry.  With ``strict=True`` every entry must come
    from the admissible entry set of ``ring``.
    """

    __slots__ = ("n", "coords", "mask", "ring", "_entries", "_hash")

    def __init__(self, entries, ring: RingId | None = None, strict: bool = False):
        if isinstance(entries, np.ndarray) and entries.ndim == 3:
            arr = np.array(entries, dtype=np.int64)
        else:
            rows = [[_as_element(x) for x in row] for row in entries]
            n = len(rows)
            if any(len(r) != n for r in rows):
                raise ValueError("matrix must be square")
            arr = np.zeros((n, n, 8), dtype=np.int64)
            for i, r in enumerate(rows):
                for j, x in enumerate(r):
                    arr[i, j] = x.coords
        if arr.shape[:2] != (arr.shape[0], arr.shape[0]) or arr.shape[2:] != (8,):
            raise ValueError("bad coordinate array shape")
        if not np.array_equal(arr, arr.transpose(1, 0, 2)):
            raise ValueError("matrix is not symmetric")
        arr.setflags(write=False)
        self.n = arr.shape[0]
        self.coords = arr
        used = np.flatnonzero(arr.reshape(-1, 8).any(axis=0))
        m = 0
        for i in used:
            m |= int(i)
        self.mask = m
        if ring is None:
            ring = RingId.from_mask(m)
        elif m & ~ring.mask:
            raise ValueError(f"entries do not lie in {ring.name}")
        self.ring = ring
        self._entries = None
        self._hash = None
        if strict:
            allowed = {e.coords for e in admissible_entries(ring)}
            for i in range(self.n):
                for j in range(self.n):
                    if tuple(int(v) for v in arr[i, j]) not in allowed:
                        raise ValueError(f"entry ({i},{j}) is not admissible over {ring.name}")

    @classmethod
    def from_coords(cls, arr: np.ndarray, ring: RingId | None = None) -> "SymMatrix":
        return cls(np.asarray(arr, dtype=np.int64), ring)

    @property
    def entries(self) -> tuple[tuple[RingElement, ...], ...]:
        if self._entries is None:
            self._entries = tuple(
                tuple(RingElement([int(v) for v in self.coords[i, j]], self.ring) for j in range(self.n))
                for i in range(self.n)
            )
        return self._entries

    def __getitem__(self, ij) -> RingElement:
        i, j = ij
        return self.entries[i][j]

    def __len__(self):
        return self.n

    def __eq__(self, other):
        if not isinstance(other, SymMatrix):
            return NotImplemented
        return self.n == other.n and np.array_equal(self.coords, other.coords)

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.n, self.coords.tobytes()))
        return self._hash

    def __neg__(self) -> "SymMatrix":
        return SymMatrix(-self.coords, self.ring)

    def __repr__(self):
        rows = ["[" + ", ".join(str(x) for x in r) + "]" for r in self.entries]
        return f"SymMatrix({self.ring.tag}, [{', '.join(rows)}])"

    def galois(self, sigma: int) -> "SymMatrix":
        if sigma & ~self.ring.mask:
            raise ValueError(f"automorphism {sigma} is not defined on {self.ring.name}")
        return SymMatrix(galois_array(self.coords, sigma), self.ring)

    def principal(self, idx: Sequence[int]) -> "SymMatrix":
        idx = list(idx)
        return SymMatrix(self.coords[np.ix_(idx, idx)], self.ring)

    def delete(self, v: int) -> "SymMatrix":
        return self.principal([i for i in range(self.n) if i != v])

    def conjugate_floats(self) -> np.ndarray:
        """Float matrices of all conjugates, shape (len(group), n, n)."""
        return conjugate_floats(self.coords, self.mask)

    def charges(self) -> list[RingElement]:
        return [self.entries[i][i] for i in range(self.n)]


def galois_array(arr: np.ndarray, sigma: int) -> np.ndarray:
    """Apply an automorphism to a coordinate array (last axis = 8 coords)."""
    out = np.array(arr, copy=True)
    for m in range(4):
        s = -1 if bin(m & sigma & 3).count("1") & 1 else 1
        a = arr[..., m]
        b = arr[..., m | 4]
        if sigma & 4:
            out[..., m] = s * (a + b)
            out[..., m | 4] = -s * b
        else:
            out[..., m] = s * a
            out[..., m | 4] = s * b
    return out


def conjugate_floats(arr: np.ndarray, mask: int) -> np.ndarray:
    """Float conjugates of one or many coordinate arrays.

    ``arr`` has shape (..., n, n, 8); the result has shape (..., g, n, n) where
    g runs over ``galois_group(mask)``.
    """
    table = embedding_table(mask)  # (g, 8)
    return np.moveaxis(arr.astype(np.float64) @ table.T, -1, -3)


# ---------------------------------------------------------------------------
# characteristic polynomials


class CharPoly:
    """Monic polynomial with coefficients in Z[sqrt2, sqrt3, phi].

    ``coeffs[k]`` is the coefficient of x**k, so ``coeffs[-1] == 1``.
    """

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Iterable):
        c = tuple(_as_element(x) for x in coeffs)
        if not c or c[-1] != 1:
            raise ValueError("characteristic polynomial must be monic")
        self.coeffs = c

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    def __eq__(self, other):
        if not isinstance(other, CharPoly):
            return NotImplemented
        return self.coeffs == other.coeffs

    def __hash__(self):
        return hash(self.coeffs)

    def __repr__(self):
        return f"CharPoly({self})"

    def __str__(self):
        terms = []
        for k in range(self.degree, -1, -1):
            c = self.coeffs[k]
            if c.is_zero():
                continue
            mono = "" if k == 0 else ("x" if k == 1 else f"x^{k}")
            cs = str(c)
            if any(ch in cs[1:] for ch in "+-"):
                cs = f"({cs})"
            if mono and c == 1:
                body = mono
            elif mono and c == -1:
                body = "-" + mono
            elif mono:
                body = cs + "*" + mono
            else:
                body = cs
            terms.append(body)
        if not terms:
            return "0"
        out = terms[0]
        for t in terms[1:]:
            out += " - " + t[1:] if t.startswith("-") else " + " + t
        return out

    def galois(self, sigma: int) -> "CharPoly":
        return CharPoly(RingElement(_galois_coords(c.coords, sigma)) for c in self.coeffs)

    def __call__(self, x):
        """Evaluate at a ring element, a number, or a square matrix (numpy or SymMatrix)."""
        if isinstance(x, SymMatrix):
            return _eval_matrix(self, x)
        acc = 0
        for c in reversed(self.coeffs):
            acc = acc * x + (c if isinstance(x, RingElement) else float(c))
        return acc

    @property
    def mask(self) -> int:
        m = 0
        for c in self.coeffs:
            m |= c.mask
        return m


def _eval_matrix(p: CharPoly, A: SymMatrix) -> np.ndarray:
    """p(A) as an (n, n, 8) coordinate array (object dtype, exact)."""
    n = A.n
    E = _regular_rep(7)
    big = _big_matrix(A.coords.astype(object), 7)
    d = 8
    acc = np.zeros((n * d, n * d), dtype=object)
    ident = np.kron(np.eye(n, dtype=np.int64), np.eye(d, dtype=np.int64)).astype(object)
    for c in reversed(p.coeffs):
        Lc = np.einsum("i,ikj->kj", np.array(c.coords, dtype=object), E.astype(object))
        acc = acc.dot(big) + np.kron(np.eye(n, dtype=np.int64).astype(object), Lc)
    # read off coordinates: first column of each block
    return acc[:, 0::d].reshape(n, d, n).transpose(0, 2, 1)


def _big_matrix(arr: np.ndarray, mask: int) -> np.ndarray:
    idx = list(basis_indices(mask))
    E = _regular_rep(mask)
    if arr.dtype == object:
        E = E.astype(object)
    n = arr.shape[0]
    d = len(idx)
    sub = arr[..., idx]
    blocks = np.einsum("abi,ikj->akbj", sub, E)
    return blocks.reshape(n * d, n * d)


def _coefficient_bound(arr: np.ndarray, mask: int) -> float:
    n = arr.shape[0]
    if n == 0:
        return 1.0
    fl = np.abs(conjugate_floats(arr, mask))
    rho = float(fl.sum(axis=-1).max()) if fl.size else 0.0
    return _coord_norm(mask) * (1.0 + rho) ** n


def char_poly_coords(arr: np.ndarray, mask: int | None = None) -> list[tuple[int, ...]]:
    """Berkowitz characteristic polynomial of a coordinate array.

    Returns integral-basis coordinate tuples for the coefficients of
    det(xI - A), ordered from x**0 up to x**n.
    """
    arr = np.asarray(arr)
    n = arr.shape[0]
    if mask is None:
        mask = 0
        for i in np.flatnonzero(arr.reshape(-1, 8).any(axis=0)):
            mask |= int(i)
    idx = list(basis_indices(mask))
    d = len(idx)
    one = [0] * d
    one[0] = 1
    if n == 0:
        return [tuple(1 if i == 0 else 0 for i in range(8))]
    exact_int = _coefficient_bound(arr, mask) < 2.0**62
    dtype = np.int64 if exact_int else object
    E = _regular_rep(mask).astype(dtype)
    M = _big_matrix(arr.astype(dtype), mask)

    def lmul(q: np.ndarray) -> np.ndarray:
        return np.einsum("i,ikj->kj", q, E)

    # start from the trailing 1x1 block
    s = (n - 1) * d
    p = [np.array(one, dtype=dtype), -M[s:s + d, s].copy()]
    with np.errstate(over="ignore"):
        for k in range(n - 2, -1, -1):
            s = k * d
            R = M[s:s + d, s + d:]
            v = M[s + d:, s].copy()
            A1 = M[s + d:, s + d:]
            m = n - 1 - k
            q = [np.array(one, dtype=dtype), -M[s:s + d, s].copy()]
            for j in range(m):
                q.append(-(R @ v))
                if j + 1 < m:
                    v = A1 @ v
            Lq = [lmul(t) for t in q]
            newp = []
            for i in range(m + 2):
                acc = np.zeros(d, dtype=dtype)
                for j in range(max(0, i - (m + 1)), min(i, m) + 1):
                    acc = acc + Lq[i - j] @ p[j]
                newp.append(acc)
            p = newp
    out = []
    for c in reversed(p):
        full = [0] * 8
        for pos, b in enumerate(idx):
            full[b] = int(c[pos])
        out.append(tuple(full))
    return out


def char_poly(A: SymMatrix) -> CharPoly:
    """Exact monic characteristic polynomial det(xI - A)."""
    return CharPoly(RingElement(c, A.ring) for c in char_poly_coords(A.coords, A.mask))


def is_integral(p: CharPoly) -> bool:
    return all(c.is_rational_integer() for c in p.coeffs)


# ---------------------------------------------------------------------------
# roots in [-2, 2]


def _taylor_shift(coeffs: list[list[int]], c: int) -> list[list[int]]:
    """Coefficients (low to high) of p(x + c) for integer c, coordinate-wise."""
    a = [list(v) for v in coeffs]
    n = len(a) - 1
    for i in range(n):
        for k in range(n - 1, i - 1, -1):
            nxt = a[k + 1]
            cur = a[k]
            for t in range(8):
                cur[t] += c * nxt[t]
    return a


def _pm2_from_coords(coeffs: Sequence[Sequence[int]], sigmas: Sequence[int]) -> bool:
    """Sign-alternation test for every conjugate listed in ``sigmas``."""
    n = len(coeffs) - 1
    left = _taylor_shift(coeffs, -2)  # p(x - 2): roots r + 2
    right = _taylor_shift(coeffs, 2)  # p(x + 2); (-1)^n p(2 - x) reflects it
    rad_left = [_radical_coords2(c) for c in left]
    rad_right = [_radical_coords2(c) for c in right]
    for s in sigmas:
        flips = [-1 if bin(m & s).count("1") & 1 else 1 for m in range(8)]
        for k in range(n + 1):
            want = -1 if (n - k) & 1 else 1
            # p(x - 2): coefficient of x^k must have sign (-1)^(n-k) or vanish
            v = [f * t for f, t in zip(flips, rad_left[k])]
            sg = _sign_radical_sum(v)
            if sg and sg != want:
                return False
            # (-1)^n p(2 - x) = (-1)^n q(-x) with q(x) = p(x + 2); its x^k
            # coefficient is (-1)^(n+k) q_k, which must have sign (-1)^(n-k),
            # i.e. q_k itself must be nonnegative.
            v = [f * t for f, t in zip(flips, rad_right[k])]
            if _sign_radical_sum(v) < 0:
                return False
    return True


def roots_in_pm2(p: CharPoly) -> bool:
    """True iff every root of the real-rooted monic ``p`` lies in [-2, 2]."""
    return _pm2_from_coords([c.coords for c in p.coeffs], [0])


def sprime_from_charpoly(coeffs: Sequence[Sequence[int]], mask: int) -> bool:
    return _pm2_from_coords(coeffs, galois_group(mask))


def in_sprime(A: SymMatrix) -> bool:
    """Every Galois conjugate of A has spectrum inside [-2, 2]."""
    return sprime_from_charpoly(char_poly_coords(A.coords, A.mask), A.mask)


def in_s(A: SymMatrix) -> bool:
    """A is cyclotomic: in S' and with an integral characteristic polynomial."""
    coeffs = char_poly_coords(A.coords, A.mask)
    if any(any(c[1:]) for c in coeffs):
        return False
    return sprime_from_charpoly(coeffs, A.mask)


# ---------------------------------------------------------------------------
# degrees and eigenvectors


def vertex_degree(A: SymMatrix, v: int) -> RingElement:
    """Sum of squared weights at ``v``, including the charge."""
    if not 0 <= v < A.n:
        raise IndexError(f"vertex {v} out of range for n={A.n}")
    total = ZERO
    for x in A.entries[v]:
        if x:
            total = total + x * x
    return total


def degree_bound_ok(A: SymMatrix) -> bool:
    """No vertex of A or of any conjugate of A has degree above 4."""
    four = RingElement.from_int(4)
    for v in range(A.n):
        d = vertex_degree(A, v)
        for s in galois_group(d.mask):
            if (four - d.galois(s)).sign() < 0:
                return False
    return True


def eigen_check(A: SymMatrix, x: Sequence, lam) -> bool:
    """Exact test of A x = lam x."""
    x = [_as_element(t) for t in x]
    lam = _as_element(lam)
    if len(x) != A.n:
        raise ValueError(f"vector has length {len(x)}, matrix has size {A.n}")
    for i in range(A.n):
        acc = ZERO
        for j in range(A.n):
            a = A.entries[i][j]
            if a and x[j]:
                acc = acc + a * x[j]
        if acc != lam * x[i]:
            return False
    return True


# ---------------------------------------------------------------------------
# interlacing via the Cauchy index


class _FieldElt:
    """Element num/den of Q(sqrt2, sqrt3, sqrt5) with num integral and den > 0."""

    __slots__ = ("num", "den")

    def __init__(self, num: RingElement, den: int = 1):
        if den < 0:
            num, den = -num, -den
        g = math.gcd(den, *num.coords)
        if g > 1:
            num = RingElement([c // g for c in num.coords])
            den //= g
        self.num = num
        self.den = den

    def is_zero(self):
        return self.num.is_zero()

    def sign(self):
        return self.num.sign()

    def __add__(self, o):
        return _FieldElt(self.num * o.den + o.num * self.den, self.den * o.den)

    def __sub__(self, o):
        return _FieldElt(self.num * o.den - o.num * self.den, self.den * o.den)

    def __mul__(self, o):
        return _FieldElt(self.num * o.num, self.den * o.den)

    def __neg__(self):
        return _FieldElt(-self.num, self.den)

    def inverse(self):
        if self.num.is_zero():
            raise ZeroDivisionError("inverse of zero")
        others = ONE
        m = self.num.mask
        for s in galois_group(m):
            if s:
                others = others * RingElement(_galois_coords(self.num.coords, s))
        norm = self.num * others
        if not norm.is_rational_integer():
            raise ArithmeticError("norm computation failed")
        N = norm.coords[0]
        return _FieldElt(others * self.den, N)


def _trim(p: list) -> list:
    while p and p[-1].is_zero():
        p.pop()
    return p


def _poly_rem(a: list, b: list) -> list:
    a = list(a)
    inv = b[-1].inverse()
    db = len(b) - 1
    while len(a) - 1 >= db and a:
        f = a[-1] * inv
        shift = len(a) - 1 - db
        for i in range(db + 1):
            a[shift + i] = a[shift + i] - f * b[i]
        a.pop()
        _trim(a)
    return a


def _sign_changes(signs: list[int]) -> int:
    s = [x for x in signs if x]
    return sum(1 for a, b in zip(s, s[1:]) if a != b)


def cauchy_index(num: CharPoly | Sequence, den: CharPoly | Sequence) -> tuple[int, int]:
    """Cauchy index of num/den over the real line and the degree of gcd(num, den)."""
    def conv(p):
        cs = p.coeffs if isinstance(p, CharPoly) else p
        return _trim([_FieldElt(_as_element(c)) for c in cs])

    seq = [conv(den), conv(num)]
    while seq[-1]:
        r = _poly_rem(seq[-2], seq[-1])
        if not r:
            break
        seq.append([-c for c in r])
    plus = [p[-1].sign() for p in seq if p]
    minus = [p[-1].sign() * (-1 if (len(p) - 1) & 1 else 1) for p in seq if p]
    g = seq[-1] if seq[-1] else seq[-2]
    return _sign_changes(minus) - _sign_changes(plus), len(g) - 1


def interlaces(parent: CharPoly, child: CharPoly) -> bool:
    """Roots of ``child`` interlace those of ``parent`` (both real-rooted, monic)."""
    if parent.degree != child.degree + 1:
        raise ValueError("parent degree must exceed child degree by one")
    if child.degree == 0:
        return True
    ind, gdeg = cauchy_index(child, parent)
    return ind == parent.degree - gdeg
