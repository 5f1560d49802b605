"""Finite abelian groups presented as products of cyclic factors.

A group is a tuple of cyclic orders (n1, ..., nr); the empty tuple is the
trivial group.  Elements are plain residue tuples, always stored normalized
(0 <= residue_i < order_i), so equality and hashing are structural.  All
values are immutable and all operations pure.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from math import gcd, prod

from .errors import InvalidElementError, InvalidSpecificationError

Element = tuple[int, ...]


@dataclass(frozen=True)
class FinAbGroup:
    """Direct sum Z/n1 + ... + Z/nr of cyclic groups.

    The factor list is taken as given; it is not required to be in
    invariant-factor (divisibility) form.
    """

    orders: tuple[int, ...]

    def __post_init__(self):
        orders = tuple(self.orders)
        if any(not isinstance(n, int) or isinstance(n, bool) or n < 1 for n in orders):
            raise InvalidSpecificationError(
                f"cyclic factor orders must be positive integers, got {self.orders!r}"
            )
        object.__setattr__(self, "orders", orders)

    @classmethod
    def from_doc(cls, doc) -> "FinAbGroup":
        """Build a group from a ``{"orders": [n1, n2, ...]}`` document."""
        if not isinstance(doc, dict) or "orders" not in doc:
            raise InvalidSpecificationError(f"group document needs an 'orders' key: {doc!r}")
        orders = doc["orders"]
        if not isinstance(orders, (list, tuple)):
            raise InvalidSpecificationError(f"'orders' must be a list, got {orders!r}")
        return cls(tuple(orders))

    def to_doc(self) -> dict:
        return {"orders": list(self.orders)}

    @property
    def rank(self) -> int:
        return len(self.orders)

    @property
    def cardinality(self) -> int:
        return prod(self.orders)

    @property
    def exponent(self) -> int:
        out = 1
        for n in self.orders:
            out = out * n // gcd(out, n)
        return out

    @property
    def zero(self) -> Element:
        return (0,) * len(self.orders)

    def element(self, residues) -> Element:
        """Normalize a residue tuple into this group.

        Normalization is idempotent: re-normalizing a returned element is a
        no-op.
        """
        residues = tuple(residues)
        if len(residues) != len(self.orders):
            raise InvalidElementError(
                f"expected {len(self.orders)} residues, got {len(residues)}: {residues!r}"
            )
        if any(not isinstance(r, int) or isinstance(r, bool) for r in residues):
            raise InvalidElementError(f"residues must be integers: {residues!r}")
        return tuple(r % n for r, n in zip(residues, self.orders))

    def contains(self, a) -> bool:
        return (
            isinstance(a, tuple)
            and len(a) == len(self.orders)
            and all(isinstance(r, int) and 0 <= r < n for r, n in zip(a, self.orders))
        )

    def check(self, a) -> Element:
        if not self.contains(a):
            raise InvalidElementError(f"{a!r} is not a normalized element of {self}")
        return a

    def add(self, a: Element, b: Element) -> Element:
        self.check(a)
        self.check(b)
        return tuple((x + y) % n for x, y, n in zip(a, b, self.orders))

    def neg(self, a: Element) -> Element:
        self.check(a)
        return tuple((-x) % n for x, n in zip(a, self.orders))

    def scale(self, k: int, a: Element) -> Element:
        self.check(a)
        return tuple((k * x) % n for x, n in zip(a, self.orders))

    def elements(self) -> tuple[Element, ...]:
        """All elements in lexicographic order of residue tuples."""
        return tuple(itertools.product(*(range(n) for n in self.orders)))

    def index_of(self, a: Element) -> int:
        """Position of ``a`` in :meth:`elements` (mixed-radix value)."""
        self.check(a)
        idx = 0
        for r, n in zip(a, self.orders):
            idx = idx * n + r
        return idx

    def order_of(self, a: Element) -> int:
        """Least k >= 1 with k*a = 0."""
        self.check(a)
        out = 1
        for r, n in zip(a, self.orders):
            k = n // gcd(n, r)  # order of r in Z/n
            out = out * k // gcd(out, k)
        return out

    def __str__(self) -> str:
        if not self.orders:
            return "C1"
        return "x".join(f"C{n}" for n in self.orders)


def make_group(orders) -> FinAbGroup:
    """Group with the given list of cyclic factor orders."""
    return FinAbGroup(tuple(orders))
