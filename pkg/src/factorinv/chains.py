"""Finite labeled lattices of right ideals: maximal chains of principal
nodes model rigid factorizations, and step-label multisets drive the
composition distance.

The built-in lattices transcribe intervals of principal right ideals in
matrix rings over the first Weyl algebra A = K<x, y | xy - yx = 1> and over
the idealizer subring K + xA.  They are data, not symbolic computations:
the nodes, principality flags, and cover labels record known module facts
about those rings.
"""

from __future__ import annotations

import itertools
from collections import Counter
from dataclasses import dataclass, field

from .errors import (
    CoverCycleError,
    ExtremaError,
    IncomparableError,
    InvalidSpecificationError,
    LabelMultisetError,
    NonPrincipalBoundError,
    UnknownBuiltinError,
)


@dataclass(frozen=True)
class Chain:
    """A maximal chain of principal nodes, bottom to top, together with the
    label multiset of each step (sorted tuples)."""

    nodes: tuple[str, ...]
    step_labels: tuple[tuple[str, ...], ...]
    lattice: "IdealLattice" = field(compare=False, repr=False)

    @property
    def length(self) -> int:
        return len(self.step_labels)


class IdealLattice:
    """Cover DAG of right ideals with principality flags and simple labels.

    Validation enforces: a finite poset given by its Hasse diagram with a
    unique top and bottom, Jordan-Hoelder consistency (all maximal cover
    paths between two comparable nodes carry equal label multisets), and
    principal top and bottom.
    """

    def __init__(self, simples, nodes, covers, top, bottom):
        self.simples = tuple(simples)
        self.principal = {}
        for node in nodes:
            node_id, flag = node["id"], node["principal"]
            if node_id in self.principal:
                raise InvalidSpecificationError(f"duplicate node id {node_id!r}")
            if not isinstance(flag, bool):
                raise InvalidSpecificationError(f"principal flag of {node_id!r} must be boolean")
            self.principal[node_id] = flag
        self.covers = []
        for cover in covers:
            upper, lower, label = cover["upper"], cover["lower"], cover["label"]
            for node_id in (upper, lower):
                if node_id not in self.principal:
                    raise InvalidSpecificationError(f"cover references unknown node {node_id!r}")
            if label not in self.simples:
                raise InvalidSpecificationError(f"cover label {label!r} is not a declared simple")
            self.covers.append((upper, lower, label))
        self.top = top
        self.bottom = bottom
        self._below: dict[str, list[tuple[str, str]]] = {n: [] for n in self.principal}
        for upper, lower, label in self.covers:
            self._below[upper].append((lower, label))
        self._validate()
        self._interval_cache: dict[tuple[str, str], Counter] = {}

    @classmethod
    def from_doc(cls, doc) -> "IdealLattice":
        """Build and validate a lattice from its document form."""
        try:
            return cls(doc["simples"], doc["nodes"], doc["covers"], doc["top"], doc["bottom"])
        except (KeyError, TypeError) as exc:
            raise InvalidSpecificationError(f"malformed lattice document: {doc!r}") from exc

    def to_doc(self) -> dict:
        return {
            "simples": list(self.simples),
            "nodes": [{"id": n, "principal": p} for n, p in self.principal.items()],
            "covers": [{"upper": u, "lower": l, "label": lab} for u, l, lab in self.covers],
            "top": self.top,
            "bottom": self.bottom,
        }

    # -- validation ---------------------------------------------------------

    def _validate(self):
        nodes = set(self.principal)
        if self.top not in nodes or self.bottom not in nodes:
            raise ExtremaError("declared top or bottom is not a node")

        # acyclicity by depth-first search over the downward edges
        state: dict[str, int] = {}

        def visit(node):
            state[node] = 1
            for child, _ in self._below[node]:
                mark = state.get(child)
                if mark == 1:
                    raise CoverCycleError(f"cycle in covers through {child!r}")
                if mark is None:
                    visit(child)
            state[node] = 2

        for node in nodes:
            if node not in state:
                visit(node)

        uppers = {u for u, _, _ in self.covers}
        lowers = {l for _, l, _ in self.covers}
        maximal = nodes - lowers
        minimal = nodes - uppers
        if len(nodes) == 1:
            maximal = minimal = nodes
        if maximal != {self.top}:
            raise ExtremaError(f"expected unique top {self.top!r}, maximal nodes are {sorted(maximal)}")
        if minimal != {self.bottom}:
            raise ExtremaError(f"expected unique bottom {self.bottom!r}, minimal nodes are {sorted(minimal)}")

        # Hasse condition: no cover edge duplicates a longer descending path
        for upper, lower, _ in self.covers:
            for child, _ in self._below[upper]:
                if child != lower and self._descends(child, lower):
                    raise CoverCycleError(
                        f"cover {upper!r} -> {lower!r} shortcuts a longer path"
                    )

        # Jordan-Hoelder consistency, exhaustively (lattices are small)
        for upper in nodes:
            self._check_paths(upper)

        if not self.principal[self.top]:
            raise NonPrincipalBoundError(f"top {self.top!r} must be principal")
        if not self.principal[self.bottom]:
            raise NonPrincipalBoundError(f"bottom {self.bottom!r} must be principal")

    def _descends(self, start: str, target: str) -> bool:
        stack = [start]
        seen = set()
        while stack:
            node = stack.pop()
            if node == target:
                return True
            if node in seen:
                continue
            seen.add(node)
            stack.extend(child for child, _ in self._below[node])
        return False

    def _check_paths(self, upper: str):
        """All cover paths from ``upper`` down to each descendant must carry
        equal label multisets."""
        collected: dict[str, Counter] = {upper: Counter()}

        def walk(node, labels):
            for child, label in self._below[node]:
                next_labels = labels + Counter([label])
                known = collected.get(child)
                if known is None:
                    collected[child] = next_labels
                elif known != next_labels:
                    raise LabelMultisetError(
                        f"paths from {upper!r} to {child!r} carry different label multisets"
                    )
                walk(child, next_labels)

        walk(upper, Counter())

    # -- intervals and chains -------------------------------------------------

    def interval_labels(self, upper: str, lower: str) -> Counter:
        """Label multiset of any cover path from upper to lower (well defined
        by validation)."""
        key = (upper, lower)
        cached = self._interval_cache.get(key)
        if cached is not None:
            return cached

        def search(node, labels):
            if node == lower:
                return labels
            for child, label in self._below[node]:
                found = search(child, labels + Counter([label]))
                if found is not None:
                    return found
            return None

        labels = search(upper, Counter())
        if labels is None:
            raise IncomparableError(f"{lower!r} is not below {upper!r}")
        self._interval_cache[key] = labels
        return labels

    def comparable(self, upper: str, lower: str) -> bool:
        return self._descends(upper, lower)

    def composition_length(self) -> int:
        return sum(self.interval_labels(self.top, self.bottom).values())

    def principal_covers_above(self, node: str) -> list[str]:
        """Principal nodes strictly above ``node`` with no principal node in
        between."""
        above = [
            p
            for p in self.principal
            if p != node and self.principal[p] and self._descends(p, node)
        ]
        out = []
        for p in above:
            if not any(r != p and self._descends(p, r) for r in above):
                out.append(p)
        return sorted(out)

    def rigid_factorizations(self) -> tuple[Chain, ...]:
        """All maximal chains of principal nodes from bottom to top.

        Maximality means no principal node lies strictly between consecutive
        chain nodes, so each step is an atom; its label multiset is the
        interval's composition-factor multiset.
        """
        chains: list[Chain] = []

        def climb(path):
            node = path[-1]
            if node == self.top:
                steps = tuple(
                    tuple(sorted(self.interval_labels(b, a).elements()))
                    for a, b in zip(path, path[1:])
                )
                chains.append(Chain(tuple(path), steps, self))
                return
            for upper in self.principal_covers_above(node):
                climb(path + [upper])

        climb([self.bottom])
        return tuple(sorted(chains, key=lambda c: c.nodes))

    def length_set(self) -> tuple[int, ...]:
        return tuple(sorted({c.length for c in self.rigid_factorizations()}))


def composition_distance(c1: Chain, c2: Chain) -> int:
    """Distance between two chains of one lattice: steps are identified when
    their label multisets agree; matched steps cancel and the larger
    remaining count is returned."""
    if c1.lattice is not c2.lattice:
        raise IncomparableError("chains belong to different lattices")
    m1, m2 = Counter(c1.step_labels), Counter(c2.step_labels)
    shared = sum(min(m, m2[s]) for s, m in m1.items() if s in m2)
    return max(c1.length - shared, c2.length - shared)


# -- built-in lattices --------------------------------------------------------

# x^2 y = (1 + xy) x in the first Weyl algebra A.  The interval [x^2 y A, A]
# has composition length 3; the ideal x^2 A + (1+xy) A is stably free but not
# principal, so the route through (1+xy)A cannot be refined by principal
# ideals and contributes a rigid factorization of length 2.
_WEYL_X2Y = {
    "simples": ["A/xA", "A/yA"],
    "nodes": [
        {"id": "A", "principal": True},
        {"id": "xA", "principal": True},
        {"id": "x2A", "principal": True},
        {"id": "x2A+(1+xy)A", "principal": False},
        {"id": "(1+xy)A", "principal": True},
        {"id": "x2yA", "principal": True},
    ],
    "covers": [
        {"upper": "A", "lower": "xA", "label": "A/xA"},
        {"upper": "xA", "lower": "x2A", "label": "A/xA"},
        {"upper": "x2A", "lower": "x2yA", "label": "A/yA"},
        {"upper": "A", "lower": "x2A+(1+xy)A", "label": "A/xA"},
        {"upper": "x2A+(1+xy)A", "lower": "(1+xy)A", "label": "A/yA"},
        {"upper": "(1+xy)A", "lower": "x2yA", "label": "A/xA"},
    ],
    "top": "A",
    "bottom": "x2yA",
}

# diag(1+xy, 1) in the 2x2 matrix ring over A: the interval below the full
# ring is the submodule lattice of A/(1+xy)A, of length 2, and the
# intermediate ideal corresponds to the free module A + (x^2 A + (1+xy) A);
# both steps are simple, so 1+xy is a product of two atoms.
_M2A_EMBED = {
    "simples": ["A/xA", "A/yA"],
    "nodes": [
        {"id": "A+A", "principal": True},
        {"id": "A+I", "principal": True},
        {"id": "(1+xy)A+A", "principal": True},
    ],
    "covers": [
        {"upper": "A+A", "lower": "A+I", "label": "A/xA"},
        {"upper": "A+I", "lower": "(1+xy)A+A", "label": "A/yA"},
    ],
    "top": "A+A",
    "bottom": "(1+xy)A+A",
}

# diag(x(x-y), 1) in the 2x2 matrix ring over A: A/x(x-y)A is uniserial with
# the unique series A > xA > x(x-y)A, so the element has exactly one rigid
# factorization even though its two atoms have non-isomorphic quotients.
_M2A_UNISERIAL = {
    "simples": ["A/xA", "A/(x-y)A"],
    "nodes": [
        {"id": "A", "principal": True},
        {"id": "xA", "principal": True},
        {"id": "x(x-y)A", "principal": True},
    ],
    "covers": [
        {"upper": "A", "lower": "xA", "label": "A/xA"},
        {"upper": "xA", "lower": "x(x-y)A", "label": "A/(x-y)A"},
    ],
    "top": "A",
    "bottom": "x(x-y)A",
}


def _m2r_nonhf() -> dict:
    """Non-half-factorial example in the 2x2 matrix ring over the idealizer
    R = K + xA of xA.

    The interval between x(x-y)R + I and R + R (first and second coordinate
    chains R > xA > x(x-y)A > x(x-y)R and R > J > I, with J = xR + (1+xy)R
    and I = x^2 A + (1+xy) R) is transcribed as the product grid of the two
    chains.  Simples: W1 = A/R and W2 = R/xA form the single non-trivial
    faithful tower (top W1, base W2); V = A/(x-y)A stays simple over R.  A
    grid node is principal exactly when its two coordinate ranks at W2 sum
    to 2: the computed ranks are 1, 0, 0, 1 down the first chain and 1, 2, 1
    down the second.  The ideal class group of R is trivial, yet the length
    set below is {2, 3}.
    """
    first = ["R", "xA", "x(x-y)A", "x(x-y)R"]
    first_labels = ["W2", "V", "W1"]
    first_rank = [1, 0, 0, 1]
    second = ["R", "J", "I"]
    second_labels = ["W1", "W2"]
    second_rank = [1, 2, 1]

    def node_id(i, j):
        return f"{first[i]}+{second[j]}"

    nodes = [
        {"id": node_id(i, j), "principal": first_rank[i] + second_rank[j] == 2}
        for i in range(len(first))
        for j in range(len(second))
    ]
    covers = []
    for i in range(len(first)):
        for j in range(len(second)):
            if i + 1 < len(first):
                covers.append(
                    {"upper": node_id(i, j), "lower": node_id(i + 1, j), "label": first_labels[i]}
                )
            if j + 1 < len(second):
                covers.append(
                    {"upper": node_id(i, j), "lower": node_id(i, j + 1), "label": second_labels[j]}
                )
    return {
        "simples": ["W1", "W2", "V"],
        "nodes": nodes,
        "covers": covers,
        "top": node_id(0, 0),
        "bottom": node_id(len(first) - 1, len(second) - 1),
    }


_BUILTINS = {
    "weyl_x2y": _WEYL_X2Y,
    "m2a_embed": _M2A_EMBED,
    "m2a_uniserial": _M2A_UNISERIAL,
    "m2r_nonhf": _m2r_nonhf(),
}

BUILTIN_NAMES = tuple(sorted(_BUILTINS))


def builtin(name: str) -> IdealLattice:
    """One of the built-in example lattices, validated on load."""
    try:
        doc = _BUILTINS[name]
    except KeyError:
        raise UnknownBuiltinError(
            f"no builtin lattice {name!r}; available: {', '.join(BUILTIN_NAMES)}"
        ) from None
    return IdealLattice.from_doc(doc)


def load_lattice(doc) -> IdealLattice:
    """Validate and load a lattice document."""
    return IdealLattice.from_doc(doc)
