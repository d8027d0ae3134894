"""Brute-force ground truth for s_{r,v}(n).

A solution is an integer vector k with finitely many nonzero entries and
sum_j j^r |k_j|^v = n. The enumerator walks magnitudes m_j >= 0 depth first in
increasing j and weights each magnitude solution by 2^(number of nonzero m_j),
which accounts for the sign choices without branching on them.

Work grows like the number of magnitude solutions, so both entry points carry
an explicit node budget and raise :class:`GuardError` instead of truncating.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Iterator

from .errors import DomainError, GuardError

__all__ = [
    "CountParams",
    "SolutionVector",
    "count_bruteforce",
    "count_signed",
    "enumerate_solutions",
    "MAX_NODES",
    "MAX_SOLUTIONS",
]

MAX_NODES = 5_000_000
MAX_SOLUTIONS = 1_000_000


@dataclass(frozen=True)
class CountParams:
    """The Diophantine family n = sum_j j^r |k_j|^v."""

    r: int
    v: int

    def __post_init__(self):
        for name in ("r", "v"):
            value = getattr(self, name)
            if not isinstance(value, int) or isinstance(value, bool) or value < 1:
                raise DomainError(f"{name} must be a positive integer, got {value!r}")


@dataclass(frozen=True)
class SolutionVector:
    """Nonzero entries (j, k_j) of a solution, sorted by index j."""

    entries: tuple[tuple[int, int], ...]

    def __post_init__(self):
        js = [j for j, _ in self.entries]
        if js != sorted(set(js)) or any(j < 1 for j in js):
            raise DomainError("indices must be distinct positive integers in increasing order")
        if any(k == 0 for _, k in self.entries):
            raise DomainError("listed entries must be nonzero")

    @classmethod
    def from_dict(cls, mapping) -> "SolutionVector":
        return cls(tuple(sorted((int(j), int(k)) for j, k in mapping.items() if k != 0)))

    def as_dict(self) -> dict[int, int]:
        return dict(self.entries)

    def __getitem__(self, j: int) -> int:
        return self.as_dict().get(j, 0)

    def value(self, params: CountParams) -> int:
        return sum(j**params.r * abs(k) ** params.v for j, k in self.entries)

    def sort_key(self):
        return tuple((j, 0 if k > 0 else 1, abs(k)) for j, k in self.entries)


def _check_n(n):
    if not isinstance(n, int) or isinstance(n, bool) or n < 0:
        raise DomainError(f"n must be a nonnegative integer, got {n!r}")


def _magnitude_solutions(params: CountParams, n: int, max_nodes: int) -> Iterator[tuple]:
    """Yield every magnitude solution as a tuple of (j, m_j) with m_j >= 1."""
    r, v = params.r, params.v
    nodes = 0
    # each stack entry: (smallest index still free, remaining, chosen entries)
    stack = [(1, n, ())]
    while stack:
        j0, rem, chosen = stack.pop()
        nodes += 1
        if nodes > max_nodes:
            raise GuardError(
                f"too large for oracle: more than {max_nodes} search nodes for "
                f"(r={r}, v={v}, n={n})"
            )
        if rem == 0:
            yield chosen
            continue
        # push in reverse so that pops come out in increasing (j, m) order
        children = []
        j = j0
        while j**r <= rem:
            step = j**r
            m = 1
            while step * m**v <= rem:
                children.append((j + 1, rem - step * m**v, chosen + ((j, m),)))
                m += 1
            j += 1
        stack.extend(reversed(children))


def count_bruteforce(params: CountParams, n: int, max_nodes: int = MAX_NODES) -> int:
    """Count solutions of n = sum_j j^r |k_j|^v by exhaustive enumeration.

    Parameters
    ----------
    params : CountParams
    n : int
        Target, n >= 0. ``count_bruteforce(p, 0) == 1`` (the zero vector).
    max_nodes : int
        Search-node budget; exceeding it raises :class:`GuardError`.
    """
    _check_n(n)
    return sum(1 << len(sol) for sol in _magnitude_solutions(params, n, max_nodes))


def count_signed(params: CountParams, n: int, max_nodes: int = MAX_NODES) -> int:
    """Second, independent counter that branches on signed k_j directly.

    Slower than :func:`count_bruteforce` by the factor it saves; exists only
    as a cross-check of the 2^(#nonzero) weighting.
    """
    _check_n(n)
    r, v = params.r, params.v
    budget = [max_nodes]

    def rec(j, rem):
        budget[0] -= 1
        if budget[0] < 0:
            raise GuardError(f"too large for oracle: node budget {max_nodes} exhausted")
        if rem == 0:
            return 1
        if j**r > rem:
            return 0
        total = rec(j + 1, rem)
        k = 1
        while j**r * k**v <= rem:
            for _sign in (1, -1):
                total += rec(j + 1, rem - j**r * k**v)
            k += 1
        return total

    if n > 200:
        raise GuardError("too large for oracle: count_signed recursion limited to n <= 200")
    return rec(1, n)


def enumerate_solutions(
    params: CountParams,
    n: int,
    max_solutions: int = MAX_SOLUTIONS,
    max_nodes: int = MAX_NODES,
) -> list[SolutionVector]:
    """List every solution vector, ordered lexicographically by (j, sign, |k_j|).

    >>> enumerate_solutions(CountParams(2, 1), 4)  # doctest: +NORMALIZE_WHITESPACE
    [SolutionVector(entries=((1, 4),)), SolutionVector(entries=((1, -4),)),
     SolutionVector(entries=((2, 1),)), SolutionVector(entries=((2, -1),))]
    """
    _check_n(n)
    out = []
    for sol in _magnitude_solutions(params, n, max_nodes):
        for signs in range(1 << len(sol)):
            entries = tuple(
                (j, -m if (signs >> i) & 1 else m) for i, (j, m) in enumerate(sol)
            )
            out.append(SolutionVector(entries))
            if len(out) > max_solutions:
                raise GuardError(
                    f"too large for oracle: more than {max_solutions} solutions for n={n}"
                )
    out.sort(key=SolutionVector.sort_key)
    return out
