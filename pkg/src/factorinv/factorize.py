"""Factorization engine for reduced atomic commutative monoids.

A monoid is presented by a finite alphabet of prime labels, a membership
predicate on exponent vectors, and an explicit finite atom set.  In the
reduced commutative case a factorization is just a multiset of atoms, so the
engine computes sets of lengths, distance sets, permutable distances,
elasticities, and catenary degrees by direct enumeration over exponent
vectors of bounded 1-norm.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Callable, Iterator, Optional

from .errors import (
    IncomparableError,
    InvalidSpecificationError,
    NotAMemberError,
    TruncatedEnumerationError,
)

Vector = tuple[int, ...]

#: Returned by catenary computations that cannot certify a finite bound.
#: Unreachable for block monoids at finite size bounds; it exists for
#: user-supplied monoids whose atom sets could be misdeclared.
INFINITE = float("inf")

#: Cap on the number of factorizations enumerated for a single element.
DEFAULT_FACTORIZATION_LIMIT = 1_000_000


@dataclass(frozen=True)
class Factorization:
    """A multiset of atoms, stored as sorted (atom index, multiplicity) pairs."""

    counts: tuple[tuple[int, int], ...]

    @property
    def length(self) -> int:
        return sum(m for _, m in self.counts)

    def as_dict(self) -> dict[int, int]:
        return dict(self.counts)


def permutable_distance(z1: Factorization, z2: Factorization) -> int:
    """Cancel the common atom multiset, return the larger remaining length."""
    c1, c2 = z1.as_dict(), z2.as_dict()
    shared = sum(min(m, c2[i]) for i, m in c1.items() if i in c2)
    return max(z1.length - shared, z2.length - shared)


def delta_of_set(lengths) -> tuple[int, ...]:
    """Successive gaps of a set of integers, sorted ascending."""
    ordered = sorted(set(lengths))
    return tuple(sorted({b - a for a, b in zip(ordered, ordered[1:])}))


def bottleneck_threshold(distances: dict[tuple[int, int], int], size: int):
    """Least N such that the graph on ``size`` vertices with the given edge
    weights is connected when restricted to edges of weight <= N.

    Kruskal-style union-find scan over edges sorted by weight; returns
    ``INFINITE`` when the edge set cannot connect the graph.
    """
    if size <= 1:
        return 0
    parent = list(range(size))

    def find(a):
        while parent[a] != a:
            parent[a] = parent[parent[a]]
            a = parent[a]
        return a

    components = size
    threshold = 0
    for (a, b), w in sorted(distances.items(), key=lambda kv: kv[1]):
        ra, rb = find(a), find(b)
        if ra != rb:
            parent[rb] = ra
            components -= 1
            threshold = max(threshold, w)
            if components == 1:
                return threshold
    return INFINITE


class PresentedMonoid:
    """Reduced atomic commutative monoid over a finite prime alphabet.

    ``membership`` must describe a submonoid of the free abelian monoid on
    the alphabet that is divisor-closed in the sense that quotients of
    members by members are members whenever they exist; the atom list must
    be the complete set of minimal nonzero members.
    """

    def __init__(self, alphabet, membership: Callable[[Vector], bool], atoms):
        self.alphabet = tuple(alphabet)
        if len(set(self.alphabet)) != len(self.alphabet):
            raise InvalidSpecificationError("alphabet labels must be distinct")
        self.membership = membership
        self.atoms = tuple(tuple(a) for a in atoms)
        self._validate_atoms()
        self._fact_cache: dict[tuple[Vector, int], tuple] = {}
        self._lenset_cache: dict[Vector, frozenset[int]] = {}

    def _validate_atoms(self):
        width = len(self.alphabet)
        seen = set()
        for a in self.atoms:
            if len(a) != width or any(x < 0 for x in a):
                raise InvalidSpecificationError(f"bad atom vector {a!r}")
            if not any(a):
                raise InvalidSpecificationError("atoms must be nonzero")
            if not self.membership(a):
                raise InvalidSpecificationError(f"atom {a!r} fails membership")
            if a in seen:
                raise InvalidSpecificationError(f"duplicate atom {a!r}")
            seen.add(a)
        for a, b in itertools.combinations(self.atoms, 2):
            if all(x <= y for x, y in zip(a, b)) or all(y <= x for x, y in zip(a, b)):
                raise InvalidSpecificationError(f"atom {a!r} divides atom {b!r}")

    # -- element handling ------------------------------------------------

    def contains(self, v) -> bool:
        v = tuple(v)
        return (
            len(v) == len(self.alphabet)
            and all(isinstance(x, int) and x >= 0 for x in v)
            and bool(self.membership(v))
        )

    def check_member(self, v) -> Vector:
        v = tuple(v)
        if not self.contains(v):
            raise NotAMemberError(f"{v!r} is not an element of the monoid")
        return v

    def elements(self, size_bound: int) -> Iterator[Vector]:
        """All members of 1-norm <= size_bound, by (norm, lex) order."""
        width = len(self.alphabet)
        for w in range(size_bound + 1):
            for v in _compositions(w, width):
                if self.membership(v):
                    yield v

    # -- factorizations --------------------------------------------------

    def factorizations(self, v, limit: Optional[int] = DEFAULT_FACTORIZATION_LIMIT):
        """Complete duplicate-free tuple of factorizations of ``v``.

        Atom multisets are enumerated with nondecreasing atom indices so
        each multiset appears once; results are memoized per monoid.  An
        enumeration that would exceed ``limit`` raises
        :class:`TruncatedEnumerationError` instead of silently truncating.
        """
        v = self.check_member(v)
        out = self._factorizations_from(v, 0)
        if limit is not None and len(out) > limit:
            raise TruncatedEnumerationError(
                f"element has more than {limit} factorizations"
            )
        return tuple(Factorization(counts) for counts in out)

    def factorization_of(self, v, multiplicities) -> Factorization:
        """Validated factorization of ``v`` from an atom-index -> multiplicity
        mapping: multiplicities must be positive and the weighted atom sum
        must equal ``v``."""
        v = self.check_member(v)
        counts = tuple(sorted(dict(multiplicities).items()))
        for idx, mult in counts:
            if not 0 <= idx < len(self.atoms):
                raise InvalidSpecificationError(f"no atom with index {idx}")
            if not isinstance(mult, int) or mult < 1:
                raise InvalidSpecificationError(f"multiplicity of atom {idx} must be >= 1")
        z = Factorization(counts)
        if self.weighted_sum(z) != v:
            raise NotAMemberError(f"{counts} does not factor {v}")
        return z

    def _factorizations_from(self, v: Vector, start: int) -> tuple:
        if not any(v):
            return ((),)
        key = (v, start)
        cached = self._fact_cache.get(key)
        if cached is not None:
            return cached
        results = []
        for j in range(start, len(self.atoms)):
            a = self.atoms[j]
            if all(x <= y for x, y in zip(a, v)):
                rest = tuple(y - x for x, y in zip(a, v))
                for tail in self._factorizations_from(rest, j):
                    if tail and tail[0][0] == j:
                        results.append(((j, tail[0][1] + 1),) + tail[1:])
                    else:
                        results.append(((j, 1),) + tail)
        out = tuple(results)
        self._fact_cache[key] = out
        return out

    def length_set(self, v) -> tuple[int, ...]:
        """Sorted set of factorization lengths of ``v``.

        Computed by a direct recursion over atoms (memoized on the exponent
        vector), which agrees with the lengths of :meth:`factorizations`.
        """
        v = self.check_member(v)
        return tuple(sorted(self._length_set(v)))

    def _length_set(self, v: Vector) -> frozenset[int]:
        if not any(v):
            return frozenset({0})
        cached = self._lenset_cache.get(v)
        if cached is not None:
            return cached
        out = set()
        for a in self.atoms:
            if all(x <= y for x, y in zip(a, v)):
                rest = tuple(y - x for x, y in zip(a, v))
                out.update(l + 1 for l in self._length_set(rest))
        result = frozenset(out)
        self._lenset_cache[v] = result
        return result

    # -- distances and catenary degrees ----------------------------------

    def weighted_sum(self, z: Factorization) -> Vector:
        total = [0] * len(self.alphabet)
        for idx, mult in z.counts:
            for i, x in enumerate(self.atoms[idx]):
                total[i] += mult * x
        return tuple(total)

    def distance(self, z1: Factorization, z2: Factorization) -> int:
        """Permutable distance between two factorizations of one element."""
        if self.weighted_sum(z1) != self.weighted_sum(z2):
            raise IncomparableError("factorizations do not factor the same element")
        return permutable_distance(z1, z2)

    def catenary_of(self, v):
        """Bottleneck connectivity threshold of the factorization graph of ``v``.

        Equals the catenary degree in the permutable distance; 0 when the
        factorization is unique.
        """
        v = self.check_member(v)
        raw = self._factorizations_from(v, 0)
        if len(raw) <= 1:
            return 0
        dicts = [dict(c) for c in raw]
        lens = [sum(m for _, m in c) for c in raw]
        edges = {}
        for a in range(len(raw)):
            da = dicts[a]
            for b in range(a + 1, len(raw)):
                db = dicts[b]
                shared = sum(min(m, db.get(i, 0)) for i, m in da.items())
                edges[(a, b)] = max(lens[a] - shared, lens[b] - shared)
        return bottleneck_threshold(edges, len(raw))

    def catenary(self, size_bound: int):
        """Max of :meth:`catenary_of` over members of 1-norm <= size_bound."""
        best = 0
        for v in self.elements(size_bound):
            best = max(best, self.catenary_of(v))
        return best

    def delta(self, size_bound: int) -> tuple[int, ...]:
        """Union of successive-gap sets over members of 1-norm <= size_bound."""
        out: set[int] = set()
        for v in self.elements(size_bound):
            out.update(delta_of_set(self._length_set(v)))
        return tuple(sorted(out))

    def rho2(self, size_bound: int) -> int:
        """Largest factorization length of a product of two atoms of total
        1-norm <= size_bound."""
        if size_bound < 2:
            raise InvalidSpecificationError("rho2 needs size_bound >= 2")
        best = 0
        for i, a in enumerate(self.atoms):
            for b in self.atoms[i:]:
                v = tuple(x + y for x, y in zip(a, b))
                if sum(v) <= size_bound:
                    best = max(best, max(self._length_set(v)))
        return best

    def half_factorial(self, size_bound: int):
        """(True, None) when every member of 1-norm <= size_bound has a
        singleton length set, else (False, (witness vector, its length set)).

        Members are scanned by (1-norm, lex) order, so the witness is the
        first violator in that order.
        """
        for v in self.elements(size_bound):
            lengths = self._length_set(v)
            if len(lengths) > 1:
                return False, (v, tuple(sorted(lengths)))
        return True, None


def _compositions(total: int, width: int) -> Iterator[Vector]:
    """Nonnegative integer vectors of given width summing to total, lex order."""
    if width == 0:
        if total == 0:
            yield ()
        return
    if width == 1:
        yield (total,)
        return
    for head in range(total + 1):
        for tail in _compositions(total - head, width - 1):
            yield (head,) + tail
