"""Dense integer polynomials and coefficient-shape analysis.

Coefficients are Python ints, so arithmetic never overflows.  ``coeffs[k]`` is
the coefficient of ``x**k``; the zero polynomial has an empty coefficient tuple.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from math import lcm
from typing import Iterable, Sequence


class Polynomial:
    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Iterable[int] = ()):
        c = [int(a) for a in coeffs]
        while c and c[-1] == 0:
            c.pop()
        self.coeffs: tuple[int, ...] = tuple(c)

    @classmethod
    def const(cls, c: int) -> "Polynomial":
        return cls((c,))

    @classmethod
    def x(cls) -> "Polynomial":
        return cls((0, 1))

    @property
    def degree(self) -> int:
        """Degree, with -1 for the zero polynomial."""
        return len(self.coeffs) - 1

    def __getitem__(self, k: int) -> int:
        return self.coeffs[k] if 0 <= k < len(self.coeffs) else 0

    def __len__(self) -> int:
        return len(self.coeffs)

    def __iter__(self):
        return iter(self.coeffs)

    def __bool__(self) -> bool:
        return bool(self.coeffs)

    def __eq__(self, other) -> bool:
        if isinstance(other, Polynomial):
            return self.coeffs == other.coeffs
        if isinstance(other, (list, tuple)):
            return self.coeffs == Polynomial(other).coeffs
        if isinstance(other, int):
            return self.coeffs == Polynomial.const(other).coeffs
        return NotImplemented

    def __hash__(self) -> int:
        return hash(self.coeffs)

    def __repr__(self) -> str:
        return f"Polynomial({list(self.coeffs)})"

    def __str__(self) -> str:
        terms = []
        for k, a in enumerate(self.coeffs):
            if a == 0:
                continue
            if k == 0:
                terms.append(str(a))
            else:
                mono = "x" if k == 1 else f"x^{k}"
                terms.append(mono if a == 1 else f"{a}*{mono}")
        return " + ".join(terms) or "0"

    def __add__(self, other) -> "Polynomial":
        return add(self, _coerce(other))

    __radd__ = __add__

    def __neg__(self) -> "Polynomial":
        return Polynomial(-a for a in self.coeffs)

    def __sub__(self, other) -> "Polynomial":
        return add(self, -_coerce(other))

    def __rsub__(self, other) -> "Polynomial":
        return add(_coerce(other), -self)

    def __mul__(self, other) -> "Polynomial":
        return mul(self, _coerce(other))

    __rmul__ = __mul__

    def __pow__(self, e: int) -> "Polynomial":
        return power(self, e)

    def to_json(self) -> list[str]:
        return [str(a) for a in self.coeffs]

    @classmethod
    def from_json(cls, data: Sequence[str | int]) -> "Polynomial":
        return cls(int(a) for a in data)


def _coerce(p) -> Polynomial:
    if isinstance(p, Polynomial):
        return p
    if isinstance(p, int):
        return Polynomial.const(p)
    if isinstance(p, (list, tuple)):
        return Polynomial(p)
    raise TypeError(f"cannot use {type(p).__name__} as a polynomial")


def add(p: Polynomial, q: Polynomial) -> Polynomial:
    a, b = p.coeffs, q.coeffs
    if len(a) < len(b):
        a, b = b, a
    out = list(a)
    for i, c in enumerate(b):
        out[i] += c
    return Polynomial(out)


def add_scalar(p: Polynomial, c: int) -> Polynomial:
    return add(p, Polynomial.const(c))


def mul(p: Polynomial, q: Polynomial) -> Polynomial:
    a, b = p.coeffs, q.coeffs
    if not a or not b:
        return Polynomial()
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                out[i + j] += x * y
    return Polynomial(out)


def power(p: Polynomial, e: int) -> Polynomial:
    if e < 0:
        raise ValueError("negative exponent")
    result = Polynomial.const(1)
    base = p
    while e:
        if e & 1:
            result = mul(result, base)
        e >>= 1
        if e:
            base = mul(base, base)
    return result


def binomial_power(a: int, b: int, e: int) -> Polynomial:
    """``(a + b*x)**e`` expanded directly from binomial coefficients."""
    if e < 0:
        raise ValueError("negative exponent")
    out = []
    c = 1
    for k in range(e + 1):
        out.append(c * a ** (e - k) * b ** k)
        c = c * (e - k) // (k + 1)
    return Polynomial(out)


# -- shape -----------------------------------------------------------------

@dataclass
class ShapeReport:
    unimodal: bool
    dip_witness: int | None
    log_concave: bool
    lc_witness: int | None
    modes: list[int] = field(default_factory=list)
    real_rooted: bool | None = None

    def to_json(self) -> dict:
        def num(v):
            return None if v is None else str(v)

        return {
            "unimodal": self.unimodal,
            "dip_witness": num(self.dip_witness),
            "log_concave": self.log_concave,
            "lc_witness": num(self.lc_witness),
            "modes": [str(m) for m in self.modes],
            "real_rooted": self.real_rooted,
        }


def dip_index(seq: Sequence[int]) -> int | None:
    """Bottom of the first valley: an index ``j`` with a strict fall somewhere
    before it and ``seq[j] < seq[j + 1]``.  ``None`` iff ``seq`` is unimodal."""
    fell = False
    for j in range(1, len(seq)):
        if seq[j] < seq[j - 1]:
            fell = True
        elif seq[j] > seq[j - 1] and fell:
            return j - 1
    return None


def lc_violation(seq: Sequence[int]) -> int | None:
    """First interior ``i`` with ``seq[i]**2 < seq[i-1]*seq[i+1]``."""
    for i in range(1, len(seq) - 1):
        if seq[i] * seq[i] < seq[i - 1] * seq[i + 1]:
            return i
    return None


def shape(p: Polynomial | Sequence[int], with_roots: bool = False) -> ShapeReport:
    seq = list(p.coeffs if isinstance(p, Polynomial) else Polynomial(p).coeffs)
    if any(a < 0 for a in seq):
        raise ValueError("shape analysis needs nonnegative coefficients")
    dip = dip_index(seq)
    lc = lc_violation(seq)
    top = max(seq, default=0)
    modes = [k for k, a in enumerate(seq) if a == top] if seq else []
    rr = real_rooted(Polynomial(seq)) if with_roots and seq else None
    return ShapeReport(dip is None, dip, lc is None, lc, modes, rr)


def is_unimodal(p) -> bool:
    return dip_index(list(p)) is None


def is_log_concave(p) -> bool:
    return lc_violation(list(p)) is None


# -- real-rootedness via Sturm sequences ------------------------------------

def _trim(a: list) -> list:
    while a and a[-1] == 0:
        a.pop()
    return a


def _rem(a: list, b: list) -> list:
    """Remainder of ``a`` modulo ``b`` (ascending Fraction coefficients)."""
    a = list(a)
    db = len(b) - 1
    lead = b[-1]
    while len(a) - 1 >= db and a:
        f = a[-1] / lead
        shift = len(a) - 1 - db
        for i, c in enumerate(b):
            a[shift + i] -= f * c
        a.pop()
        _trim(a)
    return a


def _gcd(a: list, b: list) -> list:
    while b:
        a, b = b, _rem(a, b)
    return [c / a[-1] for c in a]


def _exact_div(a: list, b: list) -> list:
    a = list(a)
    db = len(b) - 1
    q = [Fraction(0)] * (len(a) - db)
    while len(a) - 1 >= db and a:
        f = a[-1] / b[-1]
        shift = len(a) - 1 - db
        q[shift] = f
        for i, c in enumerate(b):
            a[shift + i] -= f * c
        a.pop()
        _trim(a)
    if a:
        raise ArithmeticError("division left a remainder")
    return q


def _derivative(a: list) -> list:
    return [k * a[k] for k in range(1, len(a))]


def _sign_changes(signs: list[int]) -> int:
    signs = [s for s in signs if s]
    return sum(1 for s, t in zip(signs, signs[1:]) if s != t)


def sturm_sequence(p: Polynomial) -> list[list[Fraction]]:
    a = [Fraction(c) for c in p.coeffs]
    seq = [a, _derivative(a)]
    while seq[-1]:
        r = _rem(seq[-2], seq[-1])
        seq.append([-c for c in r])
    seq.pop()
    return seq


def distinct_real_roots(p: Polynomial) -> int:
    if not p:
        raise ValueError("zero polynomial")
    seq = sturm_sequence(p)

    def sign(c):
        return (c > 0) - (c < 0)

    at_pos = [sign(s[-1]) for s in seq]
    at_neg = [sign(s[-1]) * (-1) ** (len(s) - 1) for s in seq]
    return _sign_changes(at_neg) - _sign_changes(at_pos)


def squarefree_part(p: Polynomial) -> list[Fraction]:
    a = [Fraction(c) for c in p.coeffs]
    d = _derivative(a)
    if not d:
        return a
    return _exact_div(a, _gcd(a, d))


def real_rooted(p: Polynomial) -> bool:
    """True iff every complex root of ``p`` is real (decided exactly)."""
    if not p:
        raise ValueError("real-rootedness of the zero polynomial is undefined")
    sqf = squarefree_part(p)
    deg = len(sqf) - 1
    if deg <= 1:
        return True
    den = lcm(*(c.denominator for c in sqf))
    return distinct_real_roots(Polynomial(int(c * den) for c in sqf)) == deg
