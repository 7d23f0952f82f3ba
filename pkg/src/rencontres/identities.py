"""Both-sides evaluation of the derangement identities.

Every check computes its left and right hand sides along separate code
paths that share only the primitives in :mod:`rencontres.core`. Sums run
over ``k = 0..n`` exactly; out-of-range terms vanish through the zero
conventions of ``binomial`` and ``derangement`` instead of being skipped.
"""

from __future__ import annotations

import itertools
from typing import Callable, Iterable, Mapping, Sequence

from .core import DEFAULT_ENGINE, Engine, IntPoly
from .reports import PreconditionError, SweepSummary, VerificationReport

__all__ = [
    "IDENTITIES",
    "DEFAULT_POLY_POOL",
    "check_easy",
    "check_theorem1",
    "factorial_moment",
    "check_lemma2",
    "check_theorem2",
    "explore_theorem2",
    "check_stirling_expansion",
    "check_recursion",
    "check_binomial_transform",
    "sweep",
]


def _poly_params(g: IntPoly) -> dict[str, int]:
    return {f"a{i}": a for i, a in enumerate(g.coeffs)}


def check_easy(n: int, engine: Engine = DEFAULT_ENGINE) -> VerificationReport:
    """sum_k C(n,k) d(k) == n!"""
    lhs = sum(engine.binomial(n, k) * engine.derangement(k) for k in range(n + 1))
    return VerificationReport("easy", {"n": n}, lhs, engine.factorial(n))


def check_theorem1(n: int, l: int, engine: Engine = DEFAULT_ENGINE) -> VerificationReport:
    """sum_k C(n-l, k-l) d(n-k) == (n-l)!, both sides zero when l > n."""
    if n < 0 or l < 0:
        raise ValueError(f"n and l must be nonnegative, got n={n}, l={l}")
    lhs = sum(engine.binomial(n - l, k - l) * engine.derangement(n - k) for k in range(n + 1))
    rhs = engine.factorial(n - l) if l <= n else 0
    return VerificationReport("theorem1", {"n": n, "l": l}, lhs, rhs)


def factorial_moment(n: int, t: int, engine: Engine = DEFAULT_ENGINE) -> int:
    """sum_k [k]_{t+1} f_n(k), with f_n taken from the recursion-built row."""
    if t < -1:
        raise PreconditionError(f"factorial moment requires t >= -1, got t={t}")
    row = engine.rencontres_recursive(n)
    return sum(engine.falling_factorial(k, t + 1) * row[k] for k in range(n + 1))


def check_lemma2(n: int, t: int, engine: Engine = DEFAULT_ENGINE) -> VerificationReport:
    lhs = factorial_moment(n, t, engine)
    rhs = engine.factorial(n) if n >= t + 1 else 0
    return VerificationReport("lemma2_moment", {"n": n, "t": t}, lhs, rhs)


def _theorem2_sides(n: int, g: IntPoly, engine: Engine) -> tuple[int, int]:
    lhs = sum(g(k) * engine.binomial(n, k) * engine.derangement(n - k) for k in range(n + 1))
    bell_sum = sum(a * engine.bell(i) for i, a in enumerate(g.coeffs))
    return lhs, bell_sum * engine.factorial(n)


def check_theorem2(n: int, g: IntPoly, engine: Engine = DEFAULT_ENGINE) -> VerificationReport:
    """sum_k g(k) C(n,k) d(n-k) == (sum_i a_i B_i) n!, for n >= deg g."""
    if n < g.degree:
        raise PreconditionError(
            f"theorem2 hypothesis n >= deg(g) violated: n={n}, deg(g)={g.degree}"
        )
    lhs, rhs = _theorem2_sides(n, g, engine)
    return VerificationReport("theorem2", {"n": n, **_poly_params(g)}, lhs, rhs)


def explore_theorem2(n: int, g: IntPoly, engine: Engine = DEFAULT_ENGINE) -> VerificationReport:
    """Both sides of the Bell-weighted identity without the degree hypothesis.

    A mismatch here is data, not a failure of the identity.
    """
    lhs, rhs = _theorem2_sides(n, g, engine)
    return VerificationReport("theorem2_explore", {"n": n, **_poly_params(g)}, lhs, rhs)


def check_stirling_expansion(n: int, x: int, engine: Engine = DEFAULT_ENGINE) -> VerificationReport:
    """x^n == sum_m S(n,m) [x]_m"""
    rhs = sum(engine.stirling2(n, m) * engine.falling_factorial(x, m) for m in range(n + 1))
    return VerificationReport("stirling_expansion", {"n": n, "x": x}, x**n, rhs)


def check_recursion(n: int, engine: Engine = DEFAULT_ENGINE) -> SweepSummary:
    """Compare every entry of the recursion-built row n against the closed form."""
    row = engine.rencontres_recursive(n)
    return SweepSummary(
        [
            VerificationReport("recursion", {"n": n, "k": k}, row[k], engine.rencontres_closed(n, k))
            for k in range(n + 1)
        ]
    )


def check_binomial_transform(n: int, k: int, l: int, engine: Engine = DEFAULT_ENGINE) -> VerificationReport:
    """[k]_l C(n,k) == [n]_l C(n-l, k-l)"""
    lhs = engine.falling_factorial(k, l) * engine.binomial(n, k)
    head = engine.falling_factorial(n, l)
    # head vanishes for l > n, where C(n-l, .) has a negative top
    rhs = head * engine.binomial(n - l, k - l) if head else 0
    return VerificationReport("binomial_transform", {"n": n, "k": k, "l": l}, lhs, rhs)


def _character_norm(n: int, engine: Engine = DEFAULT_ENGINE) -> VerificationReport:
    from .characters import check_character_norm

    return check_character_norm(n, engine)


DEFAULT_POLY_POOL: tuple[IntPoly, ...] = (
    *(IntPoly.monomial(i) for i in range(7)),
    IntPoly((1, -2, 1)),
    IntPoly((7, -2, 0, 3)),
    *(IntPoly.falling(l) for l in range(7)),
)
"""Monomials k^0..k^6, (k-1)^2, 3k^3-2k+7, and [k]_l for l = 0..6."""


# tag -> (parameter names, check function)
IDENTITIES: dict[str, tuple[tuple[str, ...], Callable]] = {
    "easy": (("n",), check_easy),
    "theorem1": (("n", "l"), check_theorem1),
    "lemma2_moment": (("n", "t"), check_lemma2),
    "theorem2": (("n",), check_theorem2),
    "stirling_expansion": (("n", "x"), check_stirling_expansion),
    "recursion": (("n",), check_recursion),
    "binomial_transform": (("n", "k", "l"), check_binomial_transform),
    "character_norm": (("n",), _character_norm),
}


def _as_values(name: str, spec) -> Sequence[int]:
    if isinstance(spec, range):
        values = spec
    elif isinstance(spec, tuple) and len(spec) == 2 and all(isinstance(v, int) for v in spec):
        lo, hi = spec
        if lo > hi:
            raise ValueError(f"malformed range for {name}: {lo}..{hi}")
        values = range(lo, hi + 1)
    elif isinstance(spec, int):
        values = range(spec, spec + 1)
    else:
        raise ValueError(f"malformed range for {name}: {spec!r}")
    if len(values) == 0:
        raise ValueError(f"empty range for {name}")
    return values


def sweep(
    identity: str,
    ranges: Mapping[str, object],
    poly_pool: Iterable[IntPoly] | None = None,
    engine: Engine = DEFAULT_ENGINE,
    exploratory: bool = False,
) -> SweepSummary:
    """Run one identity over the Cartesian product of parameter ranges.

    ``ranges`` maps each parameter to an inclusive ``(lo, hi)`` pair, a
    ``range``, or a single int. Grid order is the order of the parameter
    names, last one fastest; for ``theorem2`` the polynomial varies fastest.
    Combinations with ``n < deg(g)`` are skipped for ``theorem2`` unless
    ``exploratory`` is set, in which case every pair is evaluated with
    :func:`explore_theorem2`.
    """
    if identity not in IDENTITIES:
        raise ValueError(f"unknown identity {identity!r}; expected one of {sorted(IDENTITIES)}")
    names, check = IDENTITIES[identity]
    missing = [p for p in names if p not in ranges]
    extra = [p for p in ranges if p not in names]
    if missing or extra:
        raise ValueError(f"{identity} takes ranges for {list(names)}; missing {missing}, unexpected {extra}")
    grids = [_as_values(p, ranges[p]) for p in names]

    summary = SweepSummary()
    if identity == "theorem2":
        pool = list(DEFAULT_POLY_POOL if poly_pool is None else poly_pool)
        if not pool:
            raise ValueError("theorem2 sweep needs a non-empty polynomial pool")
        for n in grids[0]:
            for g in pool:
                if exploratory:
                    summary.reports.append(explore_theorem2(n, g, engine))
                elif n >= g.degree:
                    summary.reports.append(check_theorem2(n, g, engine))
        return summary

    for combo in itertools.product(*grids):
        out = check(*combo, engine=engine)
        if isinstance(out, SweepSummary):
            summary.extend(out)
        else:
            summary.reports.append(out)
    return summary
