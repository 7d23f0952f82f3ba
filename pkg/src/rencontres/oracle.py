"""Brute-force ground truth over the symmetric group.

Nothing here touches the sequences in :mod:`rencontres.core`; every count
comes from enumerating permutations. Enumeration is capped (default n = 10,
override with ``RENCONTRES_ORACLE_CAP``).
"""

from __future__ import annotations

import itertools
import os
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterator

import numpy as np

from . import _kernels
from .core import IntPoly, RencontresRow

DEFAULT_CAP = 10


class OracleCapError(ValueError):
    """Requested enumeration exceeds the configured cap."""


def oracle_cap() -> int:
    raw = os.environ.get("RENCONTRES_ORACLE_CAP")
    if raw is None or raw.strip() == "":
        return DEFAULT_CAP
    try:
        cap = int(raw)
    except ValueError:
        raise ValueError(f"RENCONTRES_ORACLE_CAP must be an integer, got {raw!r}") from None
    if cap < 0:
        raise ValueError(f"RENCONTRES_ORACLE_CAP must be nonnegative, got {cap}")
    return cap


def _check_cap(n: int) -> None:
    if n < 0:
        raise ValueError(f"n must be nonnegative, got {n}")
    cap = oracle_cap()
    if n > cap:
        raise OracleCapError(f"n={n} exceeds oracle cap {cap}")


@dataclass(frozen=True)
class Permutation:
    """One-line notation: ``image[j - 1] == sigma(j)``."""

    image: tuple[int, ...]

    def __post_init__(self):
        image = tuple(self.image)
        if sorted(image) != list(range(1, len(image) + 1)):
            raise ValueError(f"not a permutation of 1..{len(image)}: {image}")
        object.__setattr__(self, "image", image)

    @classmethod
    def identity(cls, n: int) -> "Permutation":
        return cls(tuple(range(1, n + 1)))

    @property
    def n(self) -> int:
        return len(self.image)

    def __call__(self, j: int) -> int:
        return self.image[j - 1]


def enumerate_permutations(n: int) -> Iterator[Permutation]:
    """Every permutation of {1..n} once, lexicographically."""
    _check_cap(n)
    for image in itertools.permutations(range(1, n + 1)):
        yield Permutation(image)


def fixed_points(p: Permutation) -> int:
    return sum(1 for j, v in enumerate(p.image, start=1) if v == j)


def invert(p: Permutation) -> Permutation:
    inv = [0] * p.n
    for j, v in enumerate(p.image, start=1):
        inv[v - 1] = j
    return Permutation(tuple(inv))


def compose(p: Permutation, q: Permutation) -> Permutation:
    """``p o q``, i.e. j -> p(q(j))."""
    if p.n != q.n:
        raise ValueError(f"cannot compose permutations of sizes {p.n} and {q.n}")
    return Permutation(tuple(p.image[v - 1] for v in q.image))


def permutation_matrix(p: Permutation) -> np.ndarray:
    """0/1 matrix with ``r[i, j] = 1`` iff ``p(j) == i`` (1-based i, j)."""
    r = np.zeros((p.n, p.n), dtype=np.int64)
    for j, v in enumerate(p.image):
        r[v - 1, j] = 1
    return r


def joint_fixed_point_counts(n: int) -> np.ndarray:
    """``out[a, b]`` = #{g in S_n : fix(g) = a, fix(g^-1) = b}."""
    _check_cap(n)
    return _kernels.tally_joint(n)


def rencontres_row_oracle(n: int) -> RencontresRow:
    hist = joint_fixed_point_counts(n).sum(axis=1)
    return RencontresRow(n, tuple(int(c) for c in hist))


def derangement_oracle(n: int) -> int:
    return rencontres_row_oracle(n)[0]


def weighted_sum_oracle(n: int, g: IntPoly) -> int:
    """sum over sigma in S_n of g(fix(sigma))."""
    row = rencontres_row_oracle(n)
    return sum(g(k) * c for k, c in enumerate(row.counts))


def inner_product_oracle(n: int, chi, phi) -> Fraction:
    """(1/n!) sum_g chi(g) phi(g^-1), with g^-1 formed explicitly for every g."""
    joint = joint_fixed_point_counts(n)
    total = 0
    order = 0
    for a in range(n + 1):
        for b in range(n + 1):
            c = int(joint[a, b])
            if c:
                total += c * chi(a) * phi(b)
                order += c
    return Fraction(total, order)
