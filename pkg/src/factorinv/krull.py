"""Krull monoids given by a class map on a finite prime alphabet, the
transfer homomorphism onto the block monoid over the image classes, and the
synthetic tower model.

Members are exponent vectors over the primes whose class-weighted sum
vanishes.  Replacing each prime occurrence by its class is a length-
preserving monoid homomorphism onto the zero-sum sequences over the set of
occupied classes; block-level factorizations lift back by assigning primes
of the right class to each block.
"""

from __future__ import annotations

import itertools
from collections import Counter, defaultdict
from dataclasses import dataclass
from typing import Optional

from .abelian import Element, FinAbGroup
from .blocks import BlockMonoid, Sequence
from .errors import (
    FaithfulTowerError,
    InternalConsistencyError,
    InvalidSpecificationError,
)
from .factorize import PresentedMonoid, Vector, bottleneck_threshold
from .towers import FAITHFUL, TowerSpec


class KrullMonoid(PresentedMonoid):
    """Exponent vectors over named primes with vanishing class sum."""

    def __init__(self, group: FinAbGroup, primes, class_map: dict):
        self.group = group
        self.primes = tuple(primes)
        if not self.primes:
            raise InvalidSpecificationError("a Krull monoid needs at least one prime")
        if len(set(self.primes)) != len(self.primes):
            raise InvalidSpecificationError(f"prime names must be unique: {self.primes}")
        unknown = set(class_map) - set(self.primes)
        if unknown:
            raise InvalidSpecificationError(f"class map mentions unknown primes: {sorted(unknown)}")
        missing = set(self.primes) - set(class_map)
        if missing:
            raise InvalidSpecificationError(f"class map must be total on primes; missing {sorted(missing)}")
        self.classes = {p: group.check(tuple(class_map[p])) for p in self.primes}
        self.image_classes = tuple(sorted(set(self.classes.values())))
        self._class_list = tuple(self.classes[p] for p in self.primes)
        self._blocks = BlockMonoid(group, self.image_classes)
        super().__init__(
            alphabet=self.primes,
            membership=self._class_sum_vanishes,
            atoms=self._compute_atoms(),
        )
        self._atom_images = tuple(self.beta(a) for a in self.atoms)
        self._atom_image_keys = tuple(img.counts for img in self._atom_images)

    @classmethod
    def from_doc(cls, doc) -> "KrullMonoid":
        """Build from ``{"group": {...}, "primes": [{"name": ..., "class": [...]}, ...]}``."""
        try:
            group = FinAbGroup.from_doc(doc["group"])
            primes = [entry["name"] for entry in doc["primes"]]
            class_map = {entry["name"]: group.element(entry["class"]) for entry in doc["primes"]}
        except (KeyError, TypeError) as exc:
            raise InvalidSpecificationError(f"malformed Krull monoid document: {doc!r}") from exc
        return cls(group, primes, class_map)

    def _class_sum_vanishes(self, v) -> bool:
        for i, n in enumerate(self.group.orders):
            if sum(m * cls[i] for cls, m in zip(self._class_list, v)) % n:
                return False
        return True

    def _compute_atoms(self) -> list[Vector]:
        """Atoms are exactly the prime-level realizations of the minimal
        zero-sum sequences over the image classes."""
        by_class: dict[Element, list[int]] = defaultdict(list)
        for i, p in enumerate(self.primes):
            by_class[self.classes[p]].append(i)
        atoms = []
        for block_atom in self._blocks.atoms():
            choices = []
            for g, mult in block_atom.counts:
                combos = [
                    Counter(combo)
                    for combo in itertools.combinations_with_replacement(by_class[g], mult)
                ]
                choices.append(combos)
            for picks in itertools.product(*choices):
                vec = [0] * len(self.primes)
                for counter in picks:
                    for idx, mult in counter.items():
                        vec[idx] += mult
                atoms.append(tuple(vec))
        return sorted(set(atoms))

    # -- the transfer map --------------------------------------------------

    def block_monoid(self) -> BlockMonoid:
        """The zero-sum sequences over the occupied classes (the transfer target)."""
        return self._blocks

    def beta(self, v) -> Sequence:
        """Replace every prime occurrence of a member by its class."""
        v = self.check_member(v)
        counts: dict[Element, int] = {}
        for p, m in zip(self.primes, v):
            if m:
                g = self.classes[p]
                counts[g] = counts.get(g, 0) + m
        return Sequence.from_counts(self.group, counts)

    def lift_factorization(self, v, blocks) -> list[Vector]:
        """Split a member into factors with prescribed class images.

        ``blocks`` is a list of zero-sum sequences over the image classes
        multiplying to ``beta(v)``.  Each block is realized by consuming
        primes of the required classes from ``v`` in canonical prime order
        (first fit), so the result is deterministic; the pieces multiply to
        ``v`` and have the given blocks as their class images.  When the
        blocks are atoms of the block monoid, the pieces are atoms.
        """
        v = self.check_member(v)
        product = Sequence.empty(self.group)
        for block in blocks:
            product = product * block
        if product != self.beta(v):
            raise InvalidSpecificationError("blocks do not multiply to the class image of the element")
        remaining = list(v)
        pieces: list[Vector] = []
        for block in blocks:
            piece = [0] * len(self.primes)
            for g, mult in block.counts:
                needed = mult
                for i, p in enumerate(self.primes):
                    if needed == 0:
                        break
                    if self.classes[p] == g and remaining[i] > 0:
                        take = min(needed, remaining[i])
                        piece[i] += take
                        remaining[i] -= take
                        needed -= take
                if needed:
                    raise InternalConsistencyError(
                        f"cannot realize class {g!r} with the remaining primes"
                    )
            pieces.append(tuple(piece))
        if any(remaining):
            raise InternalConsistencyError("primes left over after assigning all blocks")
        return pieces

    # -- verification ------------------------------------------------------

    def two_splits(self, seq: Sequence) -> list[tuple[Sequence, Sequence]]:
        """All ordered splits of a zero-sum sequence into two zero-sum parts."""
        group = self.group
        support = seq.counts
        orders = group.orders
        splits = []
        for sub in itertools.product(*(range(m + 1) for _, m in support)):
            if any(
                sum(k * g[i] for (g, _), k in zip(support, sub)) % n
                for i, n in enumerate(orders)
            ):
                continue
            left = Sequence.from_counts(group, {g: k for (g, _), k in zip(support, sub)})
            splits.append((left, seq.quotient(left)))
        return splits

    def verify_transfer(self, size_bound: int) -> "TransferReport":
        """Exhaustively check the transfer properties up to a size bound.

        For every member v with |v| <= size_bound: the class image is empty
        only for the empty member; every 2-split of the image lifts to a
        product decomposition of v with the prescribed images; and the
        length set of v equals the length set of its image in the block
        monoid.  Also checks that every zero-sum sequence over the image
        classes of length <= size_bound has a preimage.  Stops at the first
        violation.
        """
        blocks = self._blocks.presented()
        elements = 0
        splits = 0
        split_cache: dict[tuple, list] = {}
        length_cache: dict[tuple, tuple[int, ...]] = {}
        for v in self.elements(size_bound):
            elements += 1
            image = self.beta(v)
            if image.length == 0 and any(v):
                return TransferReport(False, elements, splits, f"nonempty member {v} has empty image")
            if image.length != sum(v):
                return TransferReport(False, elements, splits, f"image of {v} has wrong length")
            key = image.counts
            theirs = length_cache.get(key)
            if theirs is None:
                theirs = length_cache[key] = blocks.length_set(self._blocks.vector_of(image))
            mine = self.length_set(v)
            if mine != theirs:
                return TransferReport(
                    False, elements, splits,
                    f"length sets differ at {v}: {mine} vs {theirs}",
                )
            image_splits = split_cache.get(key)
            if image_splits is None:
                image_splits = split_cache[key] = self.two_splits(image)
            for left, right in image_splits:
                splits += 1
                b, c = self.lift_factorization(v, [left, right])
                if tuple(x + y for x, y in zip(b, c)) != v:
                    return TransferReport(False, elements, splits, f"lift of {v} does not multiply back")
                if self.beta(b) != left or self.beta(c) != right:
                    return TransferReport(False, elements, splits, f"lift of {v} has wrong images")
        surjectivity = 0
        for seq in self._blocks.zero_sum_up_to(size_bound):
            surjectivity += 1
            preimage = self._any_preimage(seq)
            if self.beta(preimage) != seq:
                return TransferReport(
                    False, elements, splits, f"no preimage found for {seq}", surjectivity
                )
        return TransferReport(True, elements, splits, None, surjectivity)

    def _any_preimage(self, seq: Sequence) -> Vector:
        vec = [0] * len(self.primes)
        for g, mult in seq.counts:
            for i, p in enumerate(self.primes):
                if self.classes[p] == g:
                    vec[i] += mult
                    break
            else:
                raise InternalConsistencyError(f"class {g!r} has no prime")
        return tuple(vec)

    def atom_image(self, atom_index: int) -> Sequence:
        return self._atom_images[atom_index]

    def fiber_catenary(self, size_bound: int) -> int:
        """Worst bottleneck threshold inside a fiber of the transfer map.

        Factorizations of one element lie in the same fiber when the
        multisets of class images of their atoms coincide; within each such
        fiber the permutable-distance bottleneck threshold is computed, and
        the maximum over all members of 1-norm <= size_bound is returned.
        """
        worst = 0
        image_keys = self._atom_image_keys
        for v in self.elements(size_bound):
            raw = self._factorizations_from(v, 0)
            if len(raw) <= 1:
                continue
            fibers: dict[tuple, list] = defaultdict(list)
            for counts in raw:
                key = []
                for idx, mult in counts:
                    key.extend((image_keys[idx],) * mult)
                fibers[tuple(sorted(key))].append(counts)
            for members in fibers.values():
                if len(members) <= 1:
                    continue
                dicts = [dict(c) for c in members]
                lens = [sum(m for _, m in c) for c in members]
                edges = {}
                for a in range(len(members)):
                    da = dicts[a]
                    for b in range(a + 1, len(members)):
                        db = dicts[b]
                        shared = sum(min(m, db.get(i, 0)) for i, m in da.items())
                        edges[(a, b)] = max(lens[a] - shared, lens[b] - shared)
                worst = max(worst, bottleneck_threshold(edges, len(members)))
        return worst


@dataclass(frozen=True)
class TransferReport:
    ok: bool
    elements_checked: int
    splits_checked: int
    failure: Optional[str] = None
    surjectivity_checked: int = 0


def make_krull(group: FinAbGroup, primes, class_map: dict) -> KrullMonoid:
    """Krull monoid with the given primes and class map."""
    return KrullMonoid(group, primes, class_map)


def synth_hnp(spec: TowerSpec) -> KrullMonoid:
    """The combinatorial model of the non-zero-divisors of a bounded
    hereditary Noetherian prime ring with the given tower data.

    Primes are the tower names and the class map sends a tower to its class;
    members model cyclically presented modules as formal tower sums with
    vanishing class sum.  Every faithful tower must be trivial: a
    non-trivial faithful tower breaks the model (and the transfer theory it
    encodes), so it is rejected.
    """
    for tower in spec.towers:
        if tower.kind == FAITHFUL and tower.length > 1:
            raise FaithfulTowerError(
                f"faithful tower {tower.name!r} has length {tower.length} > 1"
            )
    return KrullMonoid(
        spec.group,
        [t.name for t in spec.towers],
        {t.name: t.cls for t in spec.towers},
    )
