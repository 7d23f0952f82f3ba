"""Exact integer sequences for permutation statistics.

All counts are plain Python ``int`` values, so nothing ever overflows.
An :class:`Engine` memoizes the sequences up to ``n_max``; the module-level
functions delegate to a shared default engine.
"""

from __future__ import annotations

import threading
from dataclasses import dataclass
from typing import Iterable, Sequence

__all__ = [
    "Engine",
    "IntPoly",
    "RencontresRow",
    "DEFAULT_ENGINE",
    "factorial",
    "binomial",
    "falling_factorial",
    "derangement",
    "rencontres_closed",
    "rencontres_recursive",
    "stirling2",
    "bell",
    "poly_eval",
]


@dataclass(frozen=True)
class IntPoly:
    """Integer polynomial ``a_0 + a_1 x + ... + a_m x^m``.

    ``coeffs[i]`` is ``a_i``. Trailing zeros are stripped, so the zero
    polynomial has ``coeffs == ()`` and degree 0.
    """

    coeffs: tuple[int, ...] = ()

    def __post_init__(self):
        c = tuple(int(a) for a in self.coeffs)
        while c and c[-1] == 0:
            c = c[:-1]
        object.__setattr__(self, "coeffs", c)

    @classmethod
    def from_coeffs(cls, coeffs: Iterable[int]) -> "IntPoly":
        return cls(tuple(coeffs))

    @classmethod
    def parse(cls, text: str) -> "IntPoly":
        """Parse ``"a0,a1,...,am"``; raises ``ValueError`` on junk."""
        parts = [p.strip() for p in text.split(",")]
        if not text.strip() or any(p == "" for p in parts):
            raise ValueError(f"malformed polynomial spec: {text!r}")
        return cls(tuple(int(p) for p in parts))

    @classmethod
    def constant(cls, a: int) -> "IntPoly":
        return cls((a,))

    @classmethod
    def monomial(cls, i: int, a: int = 1) -> "IntPoly":
        return cls((0,) * i + (a,))

    @classmethod
    def falling(cls, r: int) -> "IntPoly":
        """Monomial expansion of ``x(x-1)...(x-r+1)``."""
        p = cls((1,))
        for j in range(r):
            p = p * cls((-j, 1))
        return p

    @property
    def degree(self) -> int:
        return max(len(self.coeffs) - 1, 0)

    def coefficient(self, i: int) -> int:
        return self.coeffs[i] if 0 <= i < len(self.coeffs) else 0

    def __call__(self, x: int) -> int:
        acc = 0
        for a in reversed(self.coeffs):
            acc = acc * x + a
        return acc

    def __add__(self, other: "IntPoly") -> "IntPoly":
        m = max(len(self.coeffs), len(other.coeffs))
        return IntPoly(tuple(self.coefficient(i) + other.coefficient(i) for i in range(m)))

    def __neg__(self) -> "IntPoly":
        return IntPoly(tuple(-a for a in self.coeffs))

    def __sub__(self, other: "IntPoly") -> "IntPoly":
        return self + (-other)

    def __mul__(self, other: "IntPoly") -> "IntPoly":
        if not self.coeffs or not other.coeffs:
            return IntPoly()
        out = [0] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            for j, b in enumerate(other.coeffs):
                out[i + j] += a * b
        return IntPoly(tuple(out))

    def to_spec(self) -> str:
        return ",".join(str(a) for a in self.coeffs) or "0"


@dataclass(frozen=True)
class RencontresRow:
    """``counts[k]`` is the number of permutations of n letters with exactly k fixed points."""

    n: int
    counts: tuple[int, ...]

    def __post_init__(self):
        if len(self.counts) != self.n + 1:
            raise ValueError(f"row for n={self.n} needs {self.n + 1} entries, got {len(self.counts)}")

    def __getitem__(self, k: int) -> int:
        # zero outside 0..n
        return self.counts[k] if 0 <= k <= self.n else 0

    def __len__(self) -> int:
        return len(self.counts)


def _check_nonneg(name: str, n: int) -> None:
    if n < 0:
        raise ValueError(f"{name} must be nonnegative, got {n}")


class Engine:
    """Memoizing calculator for factorials, derangements, rencontres rows,
    Stirling numbers of the second kind and Bell numbers.

    Values with index ``<= n_max`` are cached; larger ones are computed
    on demand and discarded. Cache growth happens under a lock so instances
    may be shared between threads.
    """

    def __init__(self, n_max: int = 1000):
        _check_nonneg("n_max", n_max)
        self.n_max = n_max
        self._lock = threading.RLock()
        self._fact = [1]
        self._der: dict[int, int] = {}
        self._stirling_rows: list[tuple[int, ...]] = [(1,)]
        self._rencontres_rows: list[tuple[int, ...]] = [(1,)]
        self._bell: dict[int, int] = {}

    # -- factorials / binomials -------------------------------------------

    def factorial(self, n: int) -> int:
        _check_nonneg("n", n)
        if n < len(self._fact):
            return self._fact[n]
        if n > self.n_max:
            acc = self.factorial(self.n_max)
            for i in range(self.n_max + 1, n + 1):
                acc *= i
            return acc
        with self._lock:
            while len(self._fact) <= n:
                self._fact.append(self._fact[-1] * len(self._fact))
            return self._fact[n]

    def binomial(self, n: int, m: int) -> int:
        """C(n, m), zero for ``m < 0`` or ``m > n``.

        A negative top is rejected unless ``m < 0`` already forces zero.
        """
        if m < 0:
            return 0
        if n < 0:
            raise ValueError(f"binomial undefined for negative n={n}")
        if m > n:
            return 0
        return self.factorial(n) // (self.factorial(m) * self.factorial(n - m))

    # -- derangements / rencontres ----------------------------------------

    def _derangement_uncached(self, n: int) -> int:
        # sum_k (-1)^k n!/k!, each quotient kept as an exact integer
        q = self.factorial(n)
        total = 0
        for k in range(n + 1):
            total += q if k % 2 == 0 else -q
            q //= k + 1
        return total

    def derangement(self, n: int) -> int:
        if n < 0:
            return 0
        cached = self._der.get(n)
        if cached is not None:
            return cached
        d = self._derangement_uncached(n)
        if n <= self.n_max:
            with self._lock:
                self._der.setdefault(n, d)
        return d

    def rencontres_closed(self, n: int, k: int) -> int:
        _check_nonneg("n", n)
        return self.binomial(n, k) * self.derangement(n - k)

    @staticmethod
    def _next_rencontres_row(prev: Sequence[int]) -> tuple[int, ...]:
        n = len(prev) - 1

        def f(k):
            return prev[k] if 0 <= k <= n else 0

        return tuple(f(k - 1) + (n - k) * f(k) + (k + 1) * f(k + 1) for k in range(n + 2))

    def rencontres_recursive(self, n: int) -> RencontresRow:
        """Row n built from ``(1,)`` by the fixed-point recursion only."""
        _check_nonneg("n", n)
        rows = self._rencontres_rows
        if n < len(rows):
            return RencontresRow(n, rows[n])
        if n > self.n_max:
            row = self.rencontres_recursive(self.n_max).counts
            for _ in range(self.n_max, n):
                row = self._next_rencontres_row(row)
            return RencontresRow(n, row)
        with self._lock:
            while len(rows) <= n:
                rows.append(self._next_rencontres_row(rows[-1]))
            return RencontresRow(n, rows[n])

    def rencontres_row(self, n: int) -> RencontresRow:
        """Row n from the closed form ``C(n,k) d(n-k)``."""
        return RencontresRow(n, tuple(self.rencontres_closed(n, k) for k in range(n + 1)))

    # -- falling factorial ------------------------------------------------

    @staticmethod
    def falling_factorial(x: int, r: int) -> int:
        _check_nonneg("r", r)
        acc = 1
        for j in range(r):
            acc *= x - j
        return acc

    # -- Stirling / Bell --------------------------------------------------

    @staticmethod
    def _next_stirling_row(prev: Sequence[int]) -> tuple[int, ...]:
        n = len(prev)  # prev is row n-1, with n entries
        return tuple(
            (m * prev[m] if m < n else 0) + (prev[m - 1] if m >= 1 else 0)
            for m in range(n + 1)
        )

    def stirling_row(self, n: int) -> tuple[int, ...]:
        """``(S(n,0), ..., S(n,n))``."""
        _check_nonneg("n", n)
        rows = self._stirling_rows
        if n < len(rows):
            return rows[n]
        if n > self.n_max:
            row = self.stirling_row(self.n_max)
            for _ in range(self.n_max, n):
                row = self._next_stirling_row(row)
            return row
        with self._lock:
            while len(rows) <= n:
                rows.append(self._next_stirling_row(rows[-1]))
            return rows[n]

    def stirling2(self, n: int, m: int) -> int:
        _check_nonneg("n", n)
        if m < 0 or m > n:
            return 0
        return self.stirling_row(n)[m]

    def bell(self, n: int) -> int:
        _check_nonneg("n", n)
        cached = self._bell.get(n)
        if cached is not None:
            return cached
        b = sum(self.stirling2(n, m) for m in range(n + 1))
        if n <= self.n_max:
            with self._lock:
                self._bell.setdefault(n, b)
        return b


DEFAULT_ENGINE = Engine()


def factorial(n: int) -> int:
    return DEFAULT_ENGINE.factorial(n)


def binomial(n: int, m: int) -> int:
    return DEFAULT_ENGINE.binomial(n, m)


def falling_factorial(x: int, r: int) -> int:
    """``x(x-1)...(x-r+1)``; the empty product for ``r == 0``."""
    return Engine.falling_factorial(x, r)


def derangement(n: int) -> int:
    """Fixed-point-free permutations of n letters; 0 for negative n."""
    return DEFAULT_ENGINE.derangement(n)


def rencontres_closed(n: int, k: int) -> int:
    return DEFAULT_ENGINE.rencontres_closed(n, k)


def rencontres_recursive(n: int) -> RencontresRow:
    return DEFAULT_ENGINE.rencontres_recursive(n)


def stirling2(n: int, m: int) -> int:
    return DEFAULT_ENGINE.stirling2(n, m)


def bell(n: int) -> int:
    return DEFAULT_ENGINE.bell(n)


def poly_eval(g: IntPoly, x: int) -> int:
    return g(x)
