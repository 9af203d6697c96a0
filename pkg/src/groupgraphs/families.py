"""Named group constructions and the text grammar that selects them.

Spec strings follow the CLI grammar: ``cyclic:6``, ``dihedral:5``,
``dicyclic:2``, ``symmetric:4``, ``ea:2,3``, ``product:cyclic:3*cyclic:5``,
``file:PATH``.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from itertools import permutations
from pathlib import Path

import numpy as np

from .groups import FiniteGroup, from_cayley_table, is_prime, parse_cayley_table_text

__all__ = [
    "DEFAULT_ORDER_CAP",
    "FamilySpec",
    "InvalidParameterError",
    "OrderCapExceededError",
    "build_family",
    "parse_group_spec",
]

DEFAULT_ORDER_CAP = 200


class InvalidParameterError(ValueError):
    """Family parameters out of range (non-positive n, composite p, ...)."""


class OrderCapExceededError(ValueError):
    """The requested group would exceed the configured order cap."""


@dataclass(frozen=True)
class FamilySpec:
    """One named group: a family kind plus its parameters.

    ``kind`` is one of cyclic, dihedral, dicyclic, symmetric, ea, product,
    file.  ``params`` carries the integer parameters, ``factors`` the
    component specs of a product, ``path`` the table file of a file spec.
    """

    kind: str
    params: tuple[int, ...] = ()
    factors: tuple["FamilySpec", ...] = ()
    path: str | None = None

    def label(self) -> str:
        if self.kind == "product":
            return "product:" + "*".join(f.label() for f in self.factors)
        if self.kind == "file":
            return f"file:{self.path}"
        return f"{self.kind}:" + ",".join(str(p) for p in self.params)

    @staticmethod
    def cyclic(n: int) -> "FamilySpec":
        return FamilySpec("cyclic", (n,))

    @staticmethod
    def dihedral(n: int) -> "FamilySpec":
        return FamilySpec("dihedral", (n,))

    @staticmethod
    def dicyclic(n: int) -> "FamilySpec":
        return FamilySpec("dicyclic", (n,))

    @staticmethod
    def symmetric(n: int) -> "FamilySpec":
        return FamilySpec("symmetric", (n,))

    @staticmethod
    def elementary_abelian(p: int, k: int) -> "FamilySpec":
        return FamilySpec("ea", (p, k))

    @staticmethod
    def product(*factors: "FamilySpec") -> "FamilySpec":
        return FamilySpec("product", factors=tuple(factors))

    @staticmethod
    def from_file(path: str | Path) -> "FamilySpec":
        return FamilySpec("file", path=str(path))


def parse_group_spec(text: str) -> FamilySpec:
    """Parse a group spec string into a FamilySpec."""
    text = text.strip()
    if text.startswith("file:"):
        path = text[len("file:"):]
        if not path:
            raise InvalidParameterError("file: spec needs a path")
        return FamilySpec.from_file(path)
    if text.startswith("product:"):
        rest = text[len("product:"):]
        parts = [p for p in rest.split("*") if p]
        if len(parts) < 2:
            raise InvalidParameterError(f"product spec needs >= 2 factors: {text!r}")
        factors = []
        for part in parts:
            sub = parse_group_spec(part)
            if sub.kind in ("product", "file"):
                raise InvalidParameterError(f"product factors must be plain families: {part!r}")
            factors.append(sub)
        return FamilySpec.product(*factors)
    kind, sep, rest = text.partition(":")
    if not sep or not rest:
        raise InvalidParameterError(f"malformed group spec: {text!r}")
    try:
        params = tuple(int(tok) for tok in rest.split(","))
    except ValueError as exc:
        raise InvalidParameterError(f"non-integer parameter in spec: {text!r}") from exc
    arity = {"cyclic": 1, "dihedral": 1, "dicyclic": 1, "symmetric": 1, "ea": 2}
    if kind not in arity:
        raise InvalidParameterError(f"unknown family {kind!r} in spec {text!r}")
    if len(params) != arity[kind]:
        raise InvalidParameterError(
            f"{kind} takes {arity[kind]} parameter(s), got {len(params)}: {text!r}"
        )
    return FamilySpec(kind, params)


def _spec_order(spec: FamilySpec) -> int:
    """Group order implied by the spec, computed before any table is built."""
    if spec.kind == "cyclic":
        return spec.params[0]
    if spec.kind == "dihedral":
        return 2 * spec.params[0]
    if spec.kind == "dicyclic":
        return 4 * spec.params[0]
    if spec.kind == "symmetric":
        return math.factorial(spec.params[0])
    if spec.kind == "ea":
        p, k = spec.params
        return p**k
    if spec.kind == "product":
        out = 1
        for f in spec.factors:
            out *= _spec_order(f)
        return out
    raise AssertionError(spec.kind)


def _cyclic_table(n: int) -> np.ndarray:
    idx = np.arange(n)
    return (idx[:, None] + idx[None, :]) % n


def _dihedral_table(n: int) -> np.ndarray:
    # element eps*n + k encodes s^eps r^k; r^k s = s r^(-k)
    order = 2 * n
    table = np.empty((order, order), dtype=np.int64)
    for e1 in (0, 1):
        for k1 in range(n):
            for e2 in (0, 1):
                for k2 in range(n):
                    k = (k2 - k1 if e2 else k1 + k2) % n
                    table[e1 * n + k1, e2 * n + k2] = (e1 ^ e2) * n + k
    return table


def _dicyclic_table(n: int) -> np.ndarray:
    # element k encodes a^k (k < 2n), 2n + k encodes a^k b;
    # relations: a^(2n) = e, b^2 = a^n, b a^k = a^(-k) b
    m = 2 * n
    order = 4 * n
    table = np.empty((order, order), dtype=np.int64)
    for k1 in range(m):
        for k2 in range(m):
            table[k1, k2] = (k1 + k2) % m
            table[k1, m + k2] = m + (k1 + k2) % m
            table[m + k1, k2] = m + (k1 - k2) % m
            table[m + k1, m + k2] = (k1 - k2 + n) % m
    return table


def _symmetric_table(n: int) -> np.ndarray:
    perms = list(permutations(range(n)))
    index = {p: i for i, p in enumerate(perms)}
    order = len(perms)
    table = np.empty((order, order), dtype=np.int64)
    for i, p in enumerate(perms):
        for j, q in enumerate(perms):
            table[i, j] = index[tuple(p[q[x]] for x in range(n))]
    return table


def _elementary_abelian_table(p: int, k: int) -> np.ndarray:
    order = p**k
    idx = np.arange(order)
    digits = np.empty((order, k), dtype=np.int64)
    rem = idx.copy()
    for d in range(k):
        digits[:, d] = rem % p
        rem //= p
    sums = (digits[:, None, :] + digits[None, :, :]) % p
    weights = p ** np.arange(k)
    return sums @ weights


def _product_table(tables: list[np.ndarray]) -> np.ndarray:
    table = tables[0]
    for other in tables[1:]:
        nb = other.shape[0]
        table = (table[:, None, :, None] * nb + other[None, :, None, :]).reshape(
            table.shape[0] * nb, table.shape[0] * nb
        )
    return table


def build_family(spec: FamilySpec, order_cap: int = DEFAULT_ORDER_CAP) -> FiniteGroup:
    """Build the group named by the spec, validating it like any import.

    Raises InvalidParameterError for bad parameters and OrderCapExceededError
    when the resulting order would pass ``order_cap``.
    """
    label = spec.label()
    if spec.kind == "file":
        path = Path(spec.path)
        try:
            text = path.read_text()
        except OSError as exc:
            raise ValueError(f"{label}: cannot read table file: {exc}") from exc
        group = parse_cayley_table_text(text, label=label)
        if group.order > order_cap:
            raise OrderCapExceededError(
                f"{label}: order {group.order} exceeds cap {order_cap}"
            )
        return group

    if spec.kind == "product":
        if len(spec.factors) < 2:
            raise InvalidParameterError(f"{label}: product needs >= 2 factors")
    elif any(p < 1 for p in spec.params):
        raise InvalidParameterError(f"{label}: parameters must be positive")
    if spec.kind == "ea":
        p, _ = spec.params
        if not is_prime(p):
            raise InvalidParameterError(f"{label}: {p} is not prime")

    order = _spec_order(spec)
    if order > order_cap:
        raise OrderCapExceededError(f"{label}: order {order} exceeds cap {order_cap}")

    if spec.kind == "cyclic":
        table = _cyclic_table(spec.params[0])
    elif spec.kind == "dihedral":
        table = _dihedral_table(spec.params[0])
    elif spec.kind == "dicyclic":
        table = _dicyclic_table(spec.params[0])
    elif spec.kind == "symmetric":
        table = _symmetric_table(spec.params[0])
    elif spec.kind == "ea":
        table = _elementary_abelian_table(*spec.params)
    elif spec.kind == "product":
        table = _product_table(
            [build_family(f, order_cap=order_cap).table for f in spec.factors]
        )
    else:
        raise InvalidParameterError(f"unknown family kind {spec.kind!r}")
    return from_cayley_table(table, label=label)
