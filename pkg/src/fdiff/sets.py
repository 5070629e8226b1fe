"""Forbidden-difference sets: families, exact membership, enumeration, residues.

A ``ForbiddenSet`` is a symbolic description of X.  Every polynomial-shaped
family is handled as an integer polynomial ``h`` evaluated over a domain
(all integers, positive integers, or primes); ``Explicit`` is a finite list.

Spec grammar (shared with the CLI)::

    squares  squares+c  squares-c  powers:k  primes  primes+c  primes-c
    polyz:a_d,...,a_0   polyp:a_d,...,a_0   list:v1,v2,...   file:<path>
"""

from __future__ import annotations

import bisect
import enum
import math
import re
from dataclasses import dataclass
from functools import cached_property
from pathlib import Path
from typing import Iterable, Iterator

from .primes import is_prime, iroot, prime_divisors, primes_in_range

WORKING_RANGE = 1 << 62


class RangeError(ValueError):
    """Raised when a value falls outside the supported |v| <= 2**62 range."""


class SetSpecError(ValueError):
    """Raised for set specifications that do not parse."""


class Family(str, enum.Enum):
    SQUARES = "squares"
    SQUARES_SHIFT = "squares_shift"
    POWERS = "powers"
    PRIMES = "primes"
    PRIMES_SHIFT = "primes_shift"
    POLYZ = "polyz"
    POLYP = "polyp"
    EXPLICIT = "explicit"


class _Domain(enum.Enum):
    INTEGERS = "Z"
    POSITIVE = "N"
    PRIMES = "P"


_PRIME_FAMILIES = (Family.PRIMES, Family.PRIMES_SHIFT, Family.POLYP)


def _check_range(*values: int) -> None:
    for v in values:
        if abs(v) > WORKING_RANGE:
            raise RangeError(f"{v} is outside the working range |v| <= 2**62")


def _strip(coeffs: Iterable[int]) -> tuple[int, ...]:
    out = tuple(int(c) for c in coeffs)
    i = 0
    while i < len(out) - 1 and out[i] == 0:
        i += 1
    return out[i:]


def _horner(coeffs: tuple[int, ...], t: int) -> int:
    acc = 0
    for c in coeffs:
        acc = acc * t + c
    return acc


@dataclass(frozen=True)
class ForbiddenSet:
    """Immutable description of a set X of forbidden differences.

    Build instances with the classmethod constructors or ``parse_set_spec``.
    """

    family: Family
    shift: int = 0
    power: int = 2
    coeffs: tuple[int, ...] = ()
    values: tuple[int, ...] = ()

    def __post_init__(self) -> None:
        if self.family is Family.POWERS and self.power < 2:
            raise SetSpecError("powers needs k >= 2")
        if self.family in (Family.POLYZ, Family.POLYP):
            if not self.coeffs or all(c == 0 for c in self.coeffs):
                raise SetSpecError("polynomial families need a nonzero polynomial")
        if self.family is Family.EXPLICIT:
            if list(self.values) != sorted(set(self.values)):
                raise SetSpecError("explicit values must be sorted and distinct")
            _check_range(*self.values)

    # constructors -------------------------------------------------------

    @classmethod
    def squares(cls) -> ForbiddenSet:
        return cls(Family.SQUARES)

    @classmethod
    def squares_shift(cls, c: int) -> ForbiddenSet:
        return cls(Family.SQUARES) if c == 0 else cls(Family.SQUARES_SHIFT, shift=c)

    @classmethod
    def powers(cls, k: int) -> ForbiddenSet:
        return cls(Family.SQUARES) if k == 2 else cls(Family.POWERS, power=k)

    @classmethod
    def primes(cls) -> ForbiddenSet:
        return cls(Family.PRIMES)

    @classmethod
    def primes_shift(cls, c: int) -> ForbiddenSet:
        return cls(Family.PRIMES) if c == 0 else cls(Family.PRIMES_SHIFT, shift=c)

    @classmethod
    def polyz(cls, coeffs: Iterable[int]) -> ForbiddenSet:
        return cls(Family.POLYZ, coeffs=_strip(coeffs))

    @classmethod
    def polyp(cls, coeffs: Iterable[int]) -> ForbiddenSet:
        return cls(Family.POLYP, coeffs=_strip(coeffs))

    @classmethod
    def explicit(cls, values: Iterable[int]) -> ForbiddenSet:
        return cls(Family.EXPLICIT, values=tuple(sorted({int(v) for v in values})))

    # derived views ------------------------------------------------------

    @property
    def spec(self) -> str:
        """Canonical spec string; ``parse_set_spec(x.spec) == x``."""
        f = self.family
        if f is Family.SQUARES:
            return "squares"
        if f is Family.SQUARES_SHIFT:
            return f"squares{self.shift:+d}"
        if f is Family.POWERS:
            return f"powers:{self.power}"
        if f is Family.PRIMES:
            return "primes"
        if f is Family.PRIMES_SHIFT:
            return f"primes{self.shift:+d}"
        if f in (Family.POLYZ, Family.POLYP):
            return f"{f.value}:" + ",".join(map(str, self.coeffs))
        return "list:" + ",".join(map(str, self.values))

    @property
    def is_prime_family(self) -> bool:
        return self.family in _PRIME_FAMILIES

    @cached_property
    def _poly(self) -> tuple[tuple[int, ...], _Domain]:
        f = self.family
        if f is Family.SQUARES:
            return (1, 0, 0), _Domain.POSITIVE
        if f is Family.SQUARES_SHIFT:
            return (1, 0, self.shift), _Domain.POSITIVE
        if f is Family.POWERS:
            return (1,) + (0,) * self.power, _Domain.POSITIVE
        if f is Family.PRIMES:
            return (1, 0), _Domain.PRIMES
        if f is Family.PRIMES_SHIFT:
            return (1, self.shift), _Domain.PRIMES
        if f is Family.POLYZ:
            return self.coeffs, _Domain.INTEGERS
        if f is Family.POLYP:
            return self.coeffs, _Domain.PRIMES
        raise TypeError("explicit sets have no polynomial form")

    def __str__(self) -> str:
        return self.spec


# ----------------------------------------------------------------------
# parsing

_SHIFT_RE = re.compile(r"^(squares|primes)([+-]\d+)?$")


def _int_list(text: str) -> list[int]:
    text = text.strip()
    if not text:
        return []
    try:
        return [int(tok) for tok in text.split(",")]
    except ValueError as exc:
        raise SetSpecError(f"bad integer list: {text!r}") from exc


def read_int_lines(path: str | Path) -> list[int]:
    """Integers from a UTF-8 file, one per line, ``#`` comments allowed."""
    out = []
    for lineno, line in enumerate(Path(path).read_text(encoding="utf-8").splitlines(), 1):
        line = line.split("#", 1)[0].strip()
        if not line:
            continue
        try:
            out.append(int(line))
        except ValueError as exc:
            raise SetSpecError(f"{path}:{lineno}: not an integer: {line!r}") from exc
    return out


def parse_set_spec(spec: str) -> ForbiddenSet:
    spec = spec.strip()
    m = _SHIFT_RE.match(spec)
    if m:
        c = int(m.group(2) or 0)
        return ForbiddenSet.squares_shift(c) if m.group(1) == "squares" else ForbiddenSet.primes_shift(c)
    kind, sep, rest = spec.partition(":")
    if not sep:
        raise SetSpecError(f"unknown set spec: {spec!r}")
    if kind == "powers":
        try:
            k = int(rest)
        except ValueError as exc:
            raise SetSpecError(f"bad exponent in {spec!r}") from exc
        return ForbiddenSet.powers(k)
    if kind == "polyz":
        return ForbiddenSet.polyz(_int_list(rest))
    if kind == "polyp":
        return ForbiddenSet.polyp(_int_list(rest))
    if kind == "list":
        return ForbiddenSet.explicit(_int_list(rest))
    if kind == "file":
        return ForbiddenSet.explicit(read_int_lines(rest))
    raise SetSpecError(f"unknown set spec: {spec!r}")


# ----------------------------------------------------------------------
# polynomial preimages


def _preimage(coeffs: tuple[int, ...], domain: _Domain, lo: int, hi: int) -> Iterator[int]:
    """Yield every domain point t with lo <= h(t) <= hi (h of degree >= 1).

    Outside [-M, M] the polynomial is strictly monotone, so the preimage of an
    interval there is a contiguous run of t found by bisection.
    """
    d = len(coeffs) - 1
    lead = abs(coeffs[0])
    # h'(t) has the sign of its leading term once d*|a_d|*|t| > sum i*|a_i|.
    lower = sum(i * abs(c) for i, c in zip(range(d - 1, 0, -1), coeffs[1:d]))
    mono = lower // (d * lead) + 1 if d >= 2 else 0
    # |h(t)| > R once |a_d|*|t| > R + sum |a_i| (for |t| >= 1).
    R = max(abs(lo), abs(hi))
    far = (R + sum(abs(c) for c in coeffs[1:])) // lead + 1

    def ok(t: int) -> bool:
        if domain is _Domain.POSITIVE and t < 1:
            return False
        if domain is _Domain.PRIMES and not is_prime(t):
            return False
        return True

    start = -mono
    if domain is not _Domain.INTEGERS:
        start = max(start, 1)
    for t in range(start, mono + 1):
        if lo <= _horner(coeffs, t) <= hi and ok(t):
            yield t

    def run(a: int, b: int, increasing: bool) -> tuple[int, int]:
        # smallest/largest t in [a, b] with h(t) inside [lo, hi]; h monotone there
        def first(pred) -> int:
            x, y = a, b + 1
            while x < y:
                mid = (x + y) // 2
                if pred(_horner(coeffs, mid)):
                    y = mid
                else:
                    x = mid + 1
            return x

        if increasing:
            return first(lambda v: v >= lo), first(lambda v: v > hi) - 1
        return first(lambda v: v <= hi), first(lambda v: v < lo) - 1

    segments = []
    if far > mono:
        # for t > 0 the leading term's sign is sign(a_d); for t < 0 it flips with odd d
        segments.append((mono + 1, far, coeffs[0] > 0, False))
        if domain is _Domain.INTEGERS:
            inc_neg = (coeffs[0] > 0) == (d % 2 == 1)
            segments.append((-far, -mono - 1, inc_neg, True))
    for a, b, inc, _ in segments:
        if a > b:
            continue
        t0, t1 = run(a, b, inc)
        if t0 > t1:
            continue
        if domain is _Domain.PRIMES:
            yield from primes_in_range(t0, t1)
        else:
            yield from range(t0, t1 + 1)


# ----------------------------------------------------------------------
# operations


def contains(X: ForbiddenSet, v: int) -> bool:
    """Exact membership test ``v in X``."""
    _check_range(v)
    f = X.family
    if f is Family.EXPLICIT:
        i = bisect.bisect_left(X.values, v)
        return i < len(X.values) and X.values[i] == v
    if f in (Family.SQUARES, Family.SQUARES_SHIFT):
        w = v - X.shift
        return w >= 1 and math.isqrt(w) ** 2 == w
    if f is Family.POWERS:
        return v >= 1 and iroot(v, X.power) ** X.power == v
    if f in (Family.PRIMES, Family.PRIMES_SHIFT):
        return is_prime(v - X.shift)
    coeffs, domain = X._poly
    if len(coeffs) == 1:
        return coeffs[0] == v
    return next(_preimage(coeffs, domain, v, v), None) is not None


def elements_in_range(X: ForbiddenSet, lo: int, hi: int) -> list[int]:
    """Sorted, distinct members of X in [lo, hi]."""
    if lo > hi:
        raise ValueError("elements_in_range needs lo <= hi")
    _check_range(lo, hi)
    f = X.family
    if f is Family.EXPLICIT:
        return list(X.values[bisect.bisect_left(X.values, lo) : bisect.bisect_right(X.values, hi)])
    if f in (Family.PRIMES, Family.PRIMES_SHIFT):
        c = X.shift
        return [p + c for p in primes_in_range(lo - c, hi - c)]
    coeffs, domain = X._poly
    if len(coeffs) == 1:
        return [coeffs[0]] if lo <= coeffs[0] <= hi else []
    return sorted({_horner(coeffs, t) for t in _preimage(coeffs, domain, lo, hi)})


def residues_mod(X: ForbiddenSet, m: int) -> frozenset[int]:
    """Residue classes mod m that contain a nonzero member of X.

    For prime-based families the classes are h(u) for units u (each unit class
    holds infinitely many primes) together with h(p) for the finitely many
    primes p dividing m.  A literal 0 in X is never counted, matching the
    convention that X-sets only constrain differences of distinct elements.
    """
    if m < 1:
        raise ValueError("modulus must be >= 1")
    if X.family is Family.EXPLICIT:
        return frozenset(v % m for v in X.values if v != 0)
    coeffs, domain = X._poly
    if len(coeffs) == 1:
        return frozenset({coeffs[0] % m})
    if domain is not _Domain.PRIMES:
        return frozenset(_horner(coeffs, t) % m for t in range(m))
    out = {_horner(coeffs, u) % m for u in range(m) if math.gcd(u, m) == 1}
    for p in prime_divisors(m):
        value = _horner(coeffs, p)
        if value != 0:
            out.add(value % m)
    return frozenset(out)


def forbidden_distances(X: ForbiddenSet, span: int) -> frozenset[int]:
    """Distances 1 <= d <= span with d in X or -d in X."""
    if span < 1:
        return frozenset()
    members = elements_in_range(X, -span, span)
    return frozenset(abs(v) for v in members if v != 0)


def is_x_set(X: ForbiddenSet, A: Iterable[int]) -> bool:
    return first_violation(X, A) is None


def first_violation(X: ForbiddenSet, A: Iterable[int]) -> tuple[int, int] | None:
    """A pair (a, b), a < b, of elements whose difference lies in X, or None."""
    pts = sorted(set(A))
    if len(pts) < 2:
        return None
    bad = forbidden_distances(X, pts[-1] - pts[0])
    for i, a in enumerate(pts):
        for b in pts[i + 1 :]:
            if b - a in bad:
                return a, b
    return None
