"""Exact arithmetic in Z[sqrt2, sqrt3, phi] and its quadratic subrings.

Elements are stored as 8 integer coordinates over the integral basis

    1, sqrt2, sqrt3, sqrt6, phi, sqrt2*phi, sqrt3*phi, sqrt6*phi

indexed by a 3-bit mask (bit 0: sqrt2, bit 1: sqrt3, bit 2: phi).  Every
element of the ring generated by {sqrt2, sqrt3, phi} has integer coordinates
in this basis, so no denominators are ever carried around.  The public
serialisation uses the radical basis 1, sqrt2, sqrt3, sqrt5, sqrt6, sqrt10,
sqrt15, sqrt30 with a common denominator 1 or 2.

Galois automorphisms are encoded by a mask of flipped radicals using the same
bit layout: bit 0 flips sqrt2, bit 1 flips sqrt3, bit 2 flips sqrt5 (so
phi -> 1 - phi).
"""
from __future__ import annotations

import enum
import math
import re
from fractions import Fraction
from functools import reduce
from typing import Iterable, Sequence

# radical index (bit0: 2, bit1: 3, bit2: 5) -> squarefree radicand
_RADICAND = (1, 2, 3, 6, 5, 10, 15, 30)
# external coordinate order: 1, s2, s3, s5, s6, s10, s15, s30
_EXTERNAL_ORDER = (0, 1, 2, 4, 3, 5, 6, 7)
_BASIS_NAMES = ("1", "√2", "√3", "√6", "φ", "√2φ", "√3φ", "√6φ")


class RingId(enum.Enum):
    Z = 0
    ZSQRT2 = 1
    ZSQRT3 = 2
    ZPHI = 4
    COMPOSITUM = 7

    @property
    def mask(self) -> int:
        return self.value

    @property
    def conj(self) -> int:
        """The generator of the Galois group of a quadratic ring."""
        if self in (RingId.Z, RingId.COMPOSITUM):
            raise ValueError(f"{self.name} has no single conjugation")
        return self.value

    @classmethod
    def from_mask(cls, mask: int) -> "RingId":
        if mask in (0, 1, 2, 4):
            return cls(mask)
        return cls.COMPOSITUM

    @classmethod
    def parse(cls, tag: str) -> "RingId":
        try:
            return _RING_TAGS[tag.strip().lower()]
        except KeyError:
            raise ValueError(f"unknown ring {tag!r}") from None

    @property
    def tag(self) -> str:
        return self.name.lower()

    def join(self, other: "RingId") -> "RingId":
        return RingId.from_mask(self.mask | other.mask)


_RING_TAGS = {r.name.lower(): r for r in RingId}
_RING_TAGS.update({"zs2": RingId.ZSQRT2, "zs3": RingId.ZSQRT3, "r": RingId.COMPOSITUM})


def galois_group(mask: int | RingId) -> list[int]:
    """All automorphism masks acting on the radicals in ``mask``."""
    if isinstance(mask, RingId):
        mask = mask.mask
    return [s for s in range(8) if s & ~mask == 0]


def _coord_mask(c: Sequence[int]) -> int:
    m = 0
    for i, v in enumerate(c):
        if v:
            m |= (i & 3) | (4 if i & 4 else 0)
    return m


def _build_mul_table():
    table = {}
    for i in range(8):
        for j in range(8):
            r = (i ^ j) & 3
            common = i & j & 3
            coef = (2 if common & 1 else 1) * (3 if common & 2 else 1)
            if i & 4 and j & 4:
                # phi^2 = 1 + phi
                table[i, j] = ((r, coef), (r | 4, coef))
            else:
                table[i, j] = ((r | ((i | j) & 4), coef),)
    return table


_MUL = _build_mul_table()


def _mul_coords(x: Sequence[int], y: Sequence[int]) -> tuple[int, ...]:
    out = [0] * 8
    nx = [(i, a) for i, a in enumerate(x) if a]
    ny = [(j, b) for j, b in enumerate(y) if b]
    for i, a in nx:
        for j, b in ny:
            for k, c in _MUL[i, j]:
                out[k] += a * b * c
    return tuple(out)


def _galois_coords(x: Sequence[int], sigma: int) -> tuple[int, ...]:
    out = [0] * 8
    for m in range(4):
        s = -1 if bin(m & sigma & 3).count("1") & 1 else 1
        a, b = x[m], x[m | 4]
        if sigma & 4:
            out[m] = s * (a + b)
            out[m | 4] = -s * b
        else:
            out[m] = s * a
            out[m | 4] = s * b
    return tuple(out)


def _radical_coords2(x: Sequence[int]) -> list[int]:
    """Twice the coordinates of x over sqrt(1), sqrt2, ..., sqrt30 (mask order)."""
    v = [0] * 8
    for m in range(4):
        v[m] = 2 * x[m] + x[m | 4]
        v[m | 4] = x[m | 4]
    return v


def _sign_radical_sum(v: Sequence[int]) -> int:
    """Exact sign of sum(v[m] * sqrt(_RADICAND[m]))."""
    terms = [(c, _RADICAND[m]) for m, c in enumerate(v) if c]
    if not terms:
        return 0
    if len(terms) == 1:
        return 1 if terms[0][0] > 0 else -1
    if all(abs(c) < 1 << 50 for c, _ in terms):
        approx = 0.0
        scale = 0.0
        for c, d in terms:
            t = c * math.sqrt(d)
            approx += t
            scale += abs(t)
        if abs(approx) > 1e-12 * scale:
            return 1 if approx > 0 else -1
    # interval refinement: floor(sqrt(d) * 2^p) brackets sqrt(d) * 2^p
    p = 64
    while True:
        lo = hi = 0
        for c, d in terms:
            r = math.isqrt(d << (2 * p)) if d > 1 else 1 << p
            exact = d == 1
            if c > 0:
                lo += c * r
                hi += c * (r if exact else r + 1)
            else:
                lo += c * (r if exact else r + 1)
                hi += c * r
        if lo > 0:
            return 1
        if hi < 0:
            return -1
        p *= 2


def _float_radical_sum(v: Sequence[int]) -> float:
    """sum(v[m] * sqrt(_RADICAND[m])) to double precision, even under cancellation."""
    terms = [(c, _RADICAND[m]) for m, c in enumerate(v) if c]
    approx = sum(c * math.sqrt(d) for c, d in terms)
    scale = sum(abs(c) * math.sqrt(d) for c, d in terms)
    if abs(approx) > 1e-6 * scale or _sign_radical_sum(v) == 0:
        return approx if terms else 0.0
    # fixed point with p fractional bits; the error is below sum(|c|)
    err = sum(abs(c) for c, _ in terms) + 1
    p = 64
    while True:
        total = sum(c * (math.isqrt(d << (2 * p)) if d > 1 else 1 << p) for c, d in terms)
        if abs(total) > err << 60:
            return total / (1 << p) if p < 1000 else float(Fraction(total, 1 << p))
        p *= 2


class RingElement:
    """Immutable element of Z[sqrt2, sqrt3, phi] tagged with a ring.

    ``coords`` are over the integral basis (see module docstring).  The ring
    tag only grows under arithmetic (join of operand rings) and controls
    which Galois automorphisms are admissible.
    """

    __slots__ = ("coords", "ring")

    def __init__(self, coords: Iterable[int], ring: RingId | None = None):
        c = tuple(int(v) for v in coords)
        if len(c) != 8:
            raise ValueError("RingElement needs exactly 8 coordinates")
        need = _coord_mask(c)
        if ring is None:
            ring = RingId.from_mask(need)
        elif need & ~ring.mask:
            raise ValueError(f"coordinates {c} do not lie in {ring.name}")
        object.__setattr__(self, "coords", c)
        object.__setattr__(self, "ring", ring)

    def __setattr__(self, name, value):
        raise AttributeError("RingElement is immutable")

    # construction helpers
    @classmethod
    def from_int(cls, n: int, ring: RingId = RingId.Z) -> "RingElement":
        return cls((n, 0, 0, 0, 0, 0, 0, 0), ring)

    @classmethod
    def from_radical(cls, c: Sequence[int], den: int = 1, ring: RingId | None = None) -> "RingElement":
        """Build from numerators over (1, √2, √3, √5, √6, √10, √15, √30) / den."""
        if den not in (1, 2):
            raise ValueError("den must be 1 or 2")
        if len(c) != 8:
            raise ValueError("need 8 radical coordinates")
        v = [0] * 8
        for pos, m in enumerate(_EXTERNAL_ORDER):
            v[m] = int(c[pos]) * (2 // den)
        x = [0] * 8
        for m in range(4):
            hi, lo = v[m | 4], v[m]
            if (lo - hi) % 2:
                raise ValueError("coordinates violate the half-integrality condition")
            x[m | 4] = hi
            x[m] = (lo - hi) // 2
        return cls(x, ring)

    def to_radical(self) -> tuple[list[int], int]:
        """Reduced numerators over the radical basis and the denominator."""
        v = _radical_coords2(self.coords)
        if all(t % 2 == 0 for t in v):
            return [v[m] // 2 for m in _EXTERNAL_ORDER], 1
        return [v[m] for m in _EXTERNAL_ORDER], 2

    def to_json(self) -> dict:
        c, den = self.to_radical()
        return {"c": c, "den": den}

    @classmethod
    def from_json(cls, obj: dict, ring: RingId | None = None) -> "RingElement":
        if not isinstance(obj, dict) or set(obj) != {"c", "den"}:
            raise ValueError(f"malformed element {obj!r}")
        c, den = obj["c"], obj["den"]
        if not (isinstance(c, list) and len(c) == 8 and all(isinstance(t, int) for t in c)):
            raise ValueError(f"malformed coordinates {c!r}")
        if den == 2 and all(t % 2 == 0 for t in c):
            raise ValueError("element encoding is not reduced")
        return cls.from_radical(c, den, ring)

    # basic predicates
    @property
    def mask(self) -> int:
        """Radicals actually occurring in this element."""
        return _coord_mask(self.coords)

    def is_zero(self) -> bool:
        return not any(self.coords)

    def __bool__(self) -> bool:
        return any(self.coords)

    def is_rational_integer(self) -> bool:
        return not any(self.coords[1:])

    def sign(self) -> int:
        c = self.coords
        if not any(c[1:]):
            return (c[0] > 0) - (c[0] < 0)
        return _sign_radical_sum(_radical_coords2(c))

    def galois(self, sigma: int) -> "RingElement":
        if not 0 <= sigma < 8 or sigma & ~self.ring.mask:
            raise ValueError(f"automorphism {sigma} is not defined on {self.ring.name}")
        if not sigma:
            return self
        return RingElement(_galois_coords(self.coords, sigma), self.ring)

    def conjugates(self) -> list["RingElement"]:
        return [self.galois(s) for s in galois_group(self.ring)]

    # arithmetic
    def _coerce(self, other) -> "RingElement | None":
        if isinstance(other, RingElement):
            return other
        if isinstance(other, int):
            return RingElement.from_int(other)
        return None

    def __add__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return RingElement(map(int.__add__, self.coords, o.coords), self.ring.join(o.ring))

    __radd__ = __add__

    def __sub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return RingElement(map(int.__sub__, self.coords, o.coords), self.ring.join(o.ring))

    def __rsub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o - self

    def __neg__(self):
        return RingElement([-v for v in self.coords], self.ring)

    def __pos__(self):
        return self

    def __mul__(self, other):
        if isinstance(other, int):
            return RingElement([v * other for v in self.coords], self.ring)
        if not isinstance(other, RingElement):
            return NotImplemented
        return RingElement(_mul_coords(self.coords, other.coords), self.ring.join(other.ring))

    __rmul__ = __mul__

    def __pow__(self, k: int):
        if not isinstance(k, int) or k < 0:
            return NotImplemented
        out = RingElement.from_int(1, self.ring)
        base = self
        while k:
            if k & 1:
                out = out * base
            base = base * base
            k >>= 1
        return out

    # comparison and hashing are by value; the ring tag is ignored
    def __eq__(self, other):
        if isinstance(other, RingElement):
            return self.coords == other.coords
        if isinstance(other, int):
            return self.coords[0] == other and not any(self.coords[1:])
        return NotImplemented

    def __hash__(self):
        return hash(self.coords)

    def __lt__(self, other):
        return (self - other).sign() < 0

    def __le__(self, other):
        return (self - other).sign() <= 0

    def __gt__(self, other):
        return (self - other).sign() > 0

    def __ge__(self, other):
        return (self - other).sign() >= 0

    def __float__(self):
        return _float_radical_sum(_radical_coords2(self.coords)) / 2

    def embed(self, sigma: int = 0) -> float:
        """Float value of the conjugate ``sigma(self)``."""
        return float(RingElement(_galois_coords(self.coords, sigma)) if sigma else self)

    def __repr__(self):
        return f"RingElement({self})"

    def __str__(self):
        v = _radical_coords2(self.coords)
        if not any(v):
            return "0"
        parts = []
        for pos, m in enumerate(_EXTERNAL_ORDER):
            q = Fraction(v[m], 2)
            if not q:
                continue
            if m == 0:
                body = str(abs(q))
            else:
                rad = f"√{_RADICAND[m]}"
                body = rad if abs(q) == 1 else f"{abs(q)}{rad}"
            parts.append(("-" if q < 0 else "+", body))
        s = "".join(f"{sgn}{body}" for sgn, body in parts)
        return s[1:] if s.startswith("+") else s


def _el(*coords: int, ring: RingId | None = None) -> RingElement:
    c = list(coords) + [0] * (8 - len(coords))
    return RingElement(c, ring)


ZERO = RingElement.from_int(0)
ONE = RingElement.from_int(1)
TWO = RingElement.from_int(2)
SQRT2 = _el(0, 1)
SQRT3 = _el(0, 0, 1)
PHI = _el(0, 0, 0, 0, 1)
PHIBAR = _el(1, 0, 0, 0, -1)
SQRT5 = _el(-1, 0, 0, 0, 2)

_TOKENS = {
    "sqrt2": SQRT2, "s2": SQRT2, "√2": SQRT2,
    "sqrt3": SQRT3, "s3": SQRT3, "√3": SQRT3,
    "sqrt5": SQRT5, "s5": SQRT5, "√5": SQRT5,
    "phi": PHI, "φ": PHI,
    "phibar": PHIBAR, "phib": PHIBAR, "φ̄": PHIBAR,
}
_TERM = re.compile(r"\s*([+-]?)\s*(\d*)\s*\*?\s*(sqrt\d|s\d|√\d|phibar|phib|phi|φ̄|φ)?\s*")


def parse_element(text: str | int | RingElement) -> RingElement:
    """Parse small expressions such as ``"-phibar"``, ``"1+sqrt2"`` or ``"2*sqrt3"``."""
    if isinstance(text, RingElement):
        return text
    if isinstance(text, int):
        return RingElement.from_int(text)
    s = text.strip().replace(" ", "")
    if not s:
        raise ValueError("empty element")
    total = ZERO
    pos = 0
    while pos < len(s):
        m = _TERM.match(s, pos)
        if not m or m.end() == pos or not (m.group(2) or m.group(3)):
            raise ValueError(f"cannot parse element {text!r}")
        sign = -1 if m.group(1) == "-" else 1
        coef = int(m.group(2)) if m.group(2) else 1
        if m.group(3):
            try:
                unit = _TOKENS[m.group(3)]
            except KeyError:
                raise ValueError(f"unknown radical in {text!r}") from None
        else:
            unit = ONE
        total = total + unit * (sign * coef)
        pos = m.end()
        if pos < len(s) and s[pos] not in "+-":
            raise ValueError(f"cannot parse element {text!r}")
    return total


def join_rings(rings: Iterable[RingId]) -> RingId:
    return reduce(RingId.join, rings, RingId.Z)


def admissible_entries(ring: RingId) -> list[RingElement]:
    """Zero plus every nonzero x in ``ring`` whose conjugates all satisfy x^2 <= 4.

    For the compositum this is the fourteen-element set
    {±1, ±2, ±√2, ±√3, ±φ, ±φ̄} together with 0.
    """
    base = [ONE, TWO]
    if ring.mask & 1:
        base.append(SQRT2)
    if ring.mask & 2:
        base.append(SQRT3)
    if ring.mask & 4:
        base += [PHI, PHIBAR]
    out = [RingElement(ZERO.coords, ring)]
    for b in base:
        out.append(RingElement(b.coords, ring))
        out.append(RingElement((-b).coords, ring))
    return out
