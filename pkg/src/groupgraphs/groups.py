"""Finite groups as validated Cayley tables with 0-based element indices.

The identity always sits at index 0 (tables are relabeled on import if
needed), so vertex numbering stays stable across every graph derived from
the same group.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from functools import cached_property
from typing import Optional, Sequence

import numpy as np

__all__ = [
    "FiniteGroup",
    "GroupProfile",
    "GroupTableError",
    "NotClosedError",
    "NoIdentityError",
    "NoInverseError",
    "NotAssociativeError",
    "ClassEquation",
    "from_cayley_table",
    "parse_cayley_table_text",
    "is_prime",
    "prime_factors",
]


class GroupTableError(ValueError):
    """A proposed Cayley table violates one of the group axioms."""


class NotClosedError(GroupTableError):
    """Some table entry is not an element index in [0, n)."""


class NoIdentityError(GroupTableError):
    """No element acts as a two-sided identity."""


class NoInverseError(GroupTableError):
    """Some element lacks a unique two-sided inverse."""


class NotAssociativeError(GroupTableError):
    """Some triple (i, j, k) violates (x_i x_j) x_k = x_i (x_j x_k)."""


def is_prime(m: int) -> bool:
    """Trial-division primality test, adequate for element orders under the cap."""
    if m < 2:
        return False
    if m < 4:
        return True
    if m % 2 == 0:
        return False
    d = 3
    while d * d <= m:
        if m % d == 0:
            return False
        d += 2
    return True


def prime_factors(m: int) -> list[int]:
    """Distinct prime factors of m in increasing order."""
    factors = []
    d = 2
    while d * d <= m:
        if m % d == 0:
            factors.append(d)
            while m % d == 0:
                m //= d
        d += 1 if d == 2 else 2
    if m > 1:
        factors.append(m)
    return factors


def _is_prime_power(m: int) -> bool:
    """True for p^k with k >= 1; false for 1."""
    return len(prime_factors(m)) == 1


@dataclass(frozen=True)
class GroupProfile:
    """Group-side predicates that the classification claims quantify over."""

    order: int
    is_abelian: bool
    center_size: int
    exponent: int
    is_full_exponent: bool
    is_p_group: bool
    p_prime: Optional[int]
    is_prime_order: bool
    is_prime_power_order: bool
    is_eppo: bool
    is_even_order: bool
    all_nonidentity_self_inverse: bool
    no_nonidentity_self_inverse: bool
    count_order_two: int
    is_cyclic: bool


@dataclass(frozen=True)
class ClassEquation:
    """Conjugacy-class breakdown of |G| = |Z(G)| + sum of non-central class sizes."""

    order: int
    center_size: int
    class_sizes: tuple[int, ...]
    holds: bool


class FiniteGroup:
    """A finite group given by its full multiplication table.

    ``table[i, j]`` is the index of ``x_i * x_j``; index 0 is the identity.
    Construction validates all four group axioms (closure, identity, unique
    two-sided inverses, associativity by full triple enumeration), so any
    instance can be trusted downstream.  Instances are immutable.
    """

    def __init__(self, table: np.ndarray, label: str = "G"):
        table = np.asarray(table, dtype=np.int64)
        if table.ndim != 2 or table.shape[0] != table.shape[1]:
            raise NotClosedError(f"{label}: table must be square, got shape {table.shape}")
        n = table.shape[0]
        if n == 0:
            raise NotClosedError(f"{label}: a group has at least one element")
        bad = np.argwhere((table < 0) | (table >= n))
        if bad.size:
            i, j = (int(v) for v in bad[0])
            raise NotClosedError(
                f"{label}: entry table[{i}][{j}] = {int(table[i, j])} not in [0, {n})"
            )
        if int(table[0, 0]) != 0 or not np.array_equal(table[0], np.arange(n)) or not np.array_equal(
            table[:, 0], np.arange(n)
        ):
            raise NoIdentityError(f"{label}: index 0 is not a two-sided identity")

        inverse = np.full(n, -1, dtype=np.int64)
        for i in range(n):
            right = np.flatnonzero(table[i] == 0)
            if len(right) != 1 or int(table[right[0], i]) != 0:
                raise NoInverseError(
                    f"{label}: element {i} has no unique two-sided inverse"
                )
            inverse[i] = right[0]

        for i in range(n):
            left = table[table[i]]          # (x_i x_j) x_k
            right_ = table[i][table]        # x_i (x_j x_k)
            if not np.array_equal(left, right_):
                j, k = (int(v) for v in np.argwhere(left != right_)[0])
                raise NotAssociativeError(
                    f"{label}: (x{i} x{j}) x{k} = {int(left[j, k])} but "
                    f"x{i} (x{j} x{k}) = {int(right_[j, k])}"
                )

        orders = np.empty(n, dtype=np.int64)
        for i in range(n):
            x, k = i, 1
            while x != 0:
                x = int(table[x, i])
                k += 1
            orders[i] = k

        table.setflags(write=False)
        inverse.setflags(write=False)
        orders.setflags(write=False)
        self.table = table
        self.order = n
        self.label = label
        self.identity_index = 0
        self.inverses = inverse
        self.element_orders = orders

    def __repr__(self) -> str:
        return f"FiniteGroup({self.label!r}, order={self.order})"

    def mul(self, i: int, j: int) -> int:
        self._check_index(i)
        self._check_index(j)
        return int(self.table[i, j])

    def inverse(self, i: int) -> int:
        """Index of the unique j with x_i * x_j = identity."""
        self._check_index(i)
        return int(self.inverses[i])

    def element_order(self, i: int) -> int:
        """Least k >= 1 with x_i^k = identity."""
        self._check_index(i)
        return int(self.element_orders[i])

    def _check_index(self, i: int) -> None:
        if not 0 <= i < self.order:
            raise IndexError(f"element index {i} out of range [0, {self.order})")

    @cached_property
    def is_abelian(self) -> bool:
        return bool(np.array_equal(self.table, self.table.T))

    @cached_property
    def exponent(self) -> int:
        return math.lcm(*(int(o) for o in self.element_orders))

    def center(self) -> set[int]:
        """Indices commuting with every element; always contains 0."""
        t = self.table
        return {i for i in range(self.order) if np.array_equal(t[i], t[:, i])}

    def centralizer(self, i: int) -> set[int]:
        """Indices j with x_i x_j = x_j x_i; contains the center and i itself."""
        self._check_index(i)
        return set(int(j) for j in np.flatnonzero(self.table[i] == self.table[:, i]))

    def conjugacy_classes(self) -> list[set[int]]:
        """Partition of the element indices into conjugacy classes, 0's class first."""
        t, inv = self.table, self.inverses
        seen = np.zeros(self.order, dtype=bool)
        classes = []
        for x in range(self.order):
            if seen[x]:
                continue
            orbit = {int(t[t[g, x], inv[g]]) for g in range(self.order)}
            for y in orbit:
                seen[y] = True
            classes.append(orbit)
        return classes

    def class_equation(self) -> ClassEquation:
        """Check |G| = |Z(G)| + sum over non-central classes of |G| / |C_G(x)|.

        A failure here signals an internal bug, never bad input: every
        constructed table has already passed the axiom checks.
        """
        center = self.center()
        sizes = []
        for cls in self.conjugacy_classes():
            rep = min(cls)
            if rep in center:
                continue
            sizes.append(len(cls))
            if len(cls) * len(self.centralizer(rep)) != self.order:
                return ClassEquation(self.order, len(center), tuple(sorted(sizes)), False)
        sizes = tuple(sorted(sizes))
        holds = self.order == len(center) + sum(sizes)
        return ClassEquation(self.order, len(center), sizes, holds)

    def profile(self) -> GroupProfile:
        """All group-side classification predicates, computed from the table."""
        n = self.order
        orders = [int(o) for o in self.element_orders]
        exponent = self.exponent
        factors = prime_factors(n)
        is_p = len(factors) == 1
        count2 = sum(1 for o in orders if o == 2)
        return GroupProfile(
            order=n,
            is_abelian=self.is_abelian,
            center_size=len(self.center()),
            exponent=exponent,
            is_full_exponent=exponent in orders,
            is_p_group=is_p,
            p_prime=factors[0] if is_p else None,
            is_prime_order=is_prime(n),
            is_prime_power_order=is_p,
            is_eppo=all(o == 1 or _is_prime_power(o) for o in orders),
            is_even_order=n % 2 == 0,
            all_nonidentity_self_inverse=exponent <= 2,
            no_nonidentity_self_inverse=count2 == 0,
            count_order_two=count2,
            is_cyclic=n in orders,
        )


def from_cayley_table(raw: Sequence[Sequence[int]] | np.ndarray, label: str = "G") -> FiniteGroup:
    """Validate a raw index table and return the group, identity relocated to 0.

    Accepts any square array of indices; if the two-sided identity sits at some
    index e != 0, elements 0 and e are swapped before validation so that
    downstream vertex numbering is canonical.
    """
    try:
        table = np.array(raw, dtype=np.int64)
    except ValueError as exc:
        raise NotClosedError(f"{label}: not a rectangular integer table: {exc}") from exc
    if table.ndim != 2 or table.shape[0] != table.shape[1]:
        raise NotClosedError(f"{label}: table must be square, got shape {table.shape}")
    n = table.shape[0]
    bad = np.argwhere((table < 0) | (table >= n))
    if bad.size:
        i, j = (int(v) for v in bad[0])
        raise NotClosedError(
            f"{label}: entry table[{i}][{j}] = {int(table[i, j])} not in [0, {n})"
        )
    identity = None
    idx = np.arange(n)
    for e in range(n):
        if np.array_equal(table[e], idx) and np.array_equal(table[:, e], idx):
            identity = e
            break
    if identity is None:
        raise NoIdentityError(f"{label}: no element acts as a two-sided identity")
    if identity != 0:
        swap = idx.copy()
        swap[0], swap[identity] = identity, 0
        table = swap[table[np.ix_(swap, swap)]]
    return FiniteGroup(table, label=label)


def parse_cayley_table_text(text: str, label: str = "G") -> FiniteGroup:
    """Parse the plain-text Cayley table format.

    First non-comment line holds n; the next n lines hold n whitespace-separated
    indices each.  '#' starts a line comment.  Ragged or missing rows are
    rejected before any group validation runs.
    """
    rows = []
    for lineno, line in enumerate(text.splitlines(), start=1):
        stripped = line.split("#", 1)[0].strip()
        if not stripped:
            continue
        try:
            values = [int(tok) for tok in stripped.split()]
        except ValueError as exc:
            raise ValueError(f"{label}: line {lineno}: not an integer row: {stripped!r}") from exc
        rows.append((lineno, values))
    if not rows:
        raise ValueError(f"{label}: empty table file")
    header_line, header = rows[0]
    if len(header) != 1 or header[0] < 1:
        raise ValueError(
            f"{label}: line {header_line}: expected a single positive integer n"
        )
    n = header[0]
    body = rows[1:]
    if len(body) != n:
        raise ValueError(f"{label}: expected {n} table rows, found {len(body)}")
    for lineno, row in body:
        if len(row) != n:
            raise ValueError(
                f"{label}: line {lineno}: expected {n} entries, found {len(row)}"
            )
    return from_cayley_table([row for _, row in body], label=label)
