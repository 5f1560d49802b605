from collections import Counter

import pytest

from factorinv.chains import (
    BUILTIN_NAMES,
    IdealLattice,
    builtin,
    composition_distance,
    load_lattice,
)
from factorinv.errors import (
    CoverCycleError,
    ExtremaError,
    IncomparableError,
    LabelMultisetError,
    NonPrincipalBoundError,
    UnknownBuiltinError,
)


def total_order(labels=("s", "s"), principal=(True, True, True)):
    n = len(labels) + 1
    return {
        "simples": sorted(set(labels)),
        "nodes": [{"id": f"n{i}", "principal": principal[i]} for i in range(n)],
        "covers": [
            {"upper": f"n{i}", "lower": f"n{i+1}", "label": labels[i]}
            for i in range(len(labels))
        ],
        "top": "n0",
        "bottom": f"n{n-1}",
    }


def test_load_total_order():
    lattice = load_lattice(total_order())
    assert lattice.composition_length() == 2
    chains = lattice.rigid_factorizations()
    assert len(chains) == 1
    assert chains[0].length == 2


def test_load_rejects_cycle():
    doc = total_order()
    doc["covers"].append({"upper": "n2", "lower": "n0", "label": "s"})
    with pytest.raises(CoverCycleError):
        load_lattice(doc)


def test_load_rejects_shortcut_cover():
    doc = total_order()
    doc["covers"].append({"upper": "n0", "lower": "n2", "label": "s"})
    with pytest.raises((CoverCycleError, LabelMultisetError)):
        load_lattice(doc)


def test_load_rejects_multiple_tops():
    doc = total_order()
    doc["nodes"].append({"id": "stray", "principal": True})
    doc["covers"].append({"upper": "stray", "lower": "n2", "label": "s"})
    with pytest.raises(ExtremaError):
        load_lattice(doc)


def test_load_rejects_label_mismatch():
    doc = {
        "simples": ["a", "b"],
        "nodes": [
            {"id": "top", "principal": True},
            {"id": "l", "principal": True},
            {"id": "r", "principal": True},
            {"id": "bot", "principal": True},
        ],
        "covers": [
            {"upper": "top", "lower": "l", "label": "a"},
            {"upper": "top", "lower": "r", "label": "b"},
            {"upper": "l", "lower": "bot", "label": "a"},
            {"upper": "r", "lower": "bot", "label": "b"},
        ],
        "top": "top",
        "bottom": "bot",
    }
    with pytest.raises(LabelMultisetError):
        load_lattice(doc)


def test_load_accepts_consistent_diamond():
    doc = {
        "simples": ["a", "b"],
        "nodes": [
            {"id": "top", "principal": True},
            {"id": "l", "principal": True},
            {"id": "r", "principal": False},
            {"id": "bot", "principal": True},
        ],
        "covers": [
            {"upper": "top", "lower": "l", "label": "a"},
            {"upper": "top", "lower": "r", "label": "b"},
            {"upper": "l", "lower": "bot", "label": "b"},
            {"upper": "r", "lower": "bot", "label": "a"},
        ],
        "top": "top",
        "bottom": "bot",
    }
    lattice = load_lattice(doc)
    chains = lattice.rigid_factorizations()
    assert [c.nodes for c in chains] == [("bot", "l", "top")]


def test_load_rejects_nonprincipal_extrema():
    doc = total_order(principal=(False, True, True))
    with pytest.raises(NonPrincipalBoundError):
        load_lattice(doc)
    doc = total_order(principal=(True, True, False))
    with pytest.raises(NonPrincipalBoundError):
        load_lattice(doc)


def test_builtin_names_and_unknown():
    assert set(BUILTIN_NAMES) == {"weyl_x2y", "m2a_embed", "m2a_uniserial", "m2r_nonhf"}
    with pytest.raises(UnknownBuiltinError):
        builtin("nosuch")


def test_builtin_weyl_chains():
    lattice = builtin("weyl_x2y")
    chains = lattice.rigid_factorizations()
    assert sorted(c.length for c in chains) == [2, 3]
    assert lattice.length_set() == (2, 3)


def test_builtin_weyl_distance():
    chains = builtin("weyl_x2y").rigid_factorizations()
    short = next(c for c in chains if c.length == 2)
    long = next(c for c in chains if c.length == 3)
    assert composition_distance(short, long) == 2
    assert composition_distance(short, short) == 0


def test_builtin_uniserial_unique_chain():
    lattice = builtin("m2a_uniserial")
    chains = lattice.rigid_factorizations()
    assert len(chains) == 1
    assert chains[0].length == 2
    # the two steps carry different simple classes
    assert chains[0].step_labels[0] != chains[0].step_labels[1]


def test_builtin_embed_length_two():
    lattice = builtin("m2a_embed")
    chains = lattice.rigid_factorizations()
    assert len(chains) == 1
    assert lattice.length_set() == (2,)


def test_builtin_nonhf_length_set():
    lattice = builtin("m2r_nonhf")
    assert lattice.length_set() == (2, 3)
    chains = lattice.rigid_factorizations()
    assert sorted(c.length for c in chains) == [2, 2, 3]


def test_nonhf_distance_between_unequal_lengths():
    chains = builtin("m2r_nonhf").rigid_factorizations()
    by_len = {}
    for c in chains:
        by_len.setdefault(c.length, []).append(c)
    d = composition_distance(by_len[2][0], by_len[3][0])
    assert d >= 2


def test_chain_maximality():
    # no principal node refines any step of any returned chain
    for name in BUILTIN_NAMES:
        lattice = builtin(name)
        for chain in lattice.rigid_factorizations():
            for lower, upper in zip(chain.nodes, chain.nodes[1:]):
                between = [
                    n
                    for n in lattice.principal
                    if n not in (lower, upper)
                    and lattice.principal[n]
                    and lattice.comparable(upper, n)
                    and lattice.comparable(n, lower)
                ]
                assert not between


def test_chain_lengths_bounded_by_composition_length():
    for name in BUILTIN_NAMES:
        lattice = builtin(name)
        total = lattice.composition_length()
        for chain in lattice.rigid_factorizations():
            assert chain.length <= total
            assert sum(len(s) for s in chain.step_labels) == total


def test_step_labels_are_interval_multisets():
    lattice = builtin("weyl_x2y")
    for chain in lattice.rigid_factorizations():
        for (lower, upper), labels in zip(
            zip(chain.nodes, chain.nodes[1:]), chain.step_labels
        ):
            assert Counter(labels) == lattice.interval_labels(upper, lower)


def test_composition_distance_identical_multisets():
    # chains with equal step-label multisets in any order are at distance 0
    doc = {
        "simples": ["a", "b"],
        "nodes": [
            {"id": "top", "principal": True},
            {"id": "l", "principal": True},
            {"id": "r", "principal": True},
            {"id": "bot", "principal": True},
        ],
        "covers": [
            {"upper": "top", "lower": "l", "label": "a"},
            {"upper": "top", "lower": "r", "label": "b"},
            {"upper": "l", "lower": "bot", "label": "b"},
            {"upper": "r", "lower": "bot", "label": "a"},
        ],
        "top": "top",
        "bottom": "bot",
    }
    chains = load_lattice(doc).rigid_factorizations()
    assert len(chains) == 2
    assert composition_distance(chains[0], chains[1]) == 0


def test_composition_distance_different_lattices():
    c1 = builtin("weyl_x2y").rigid_factorizations()[0]
    c2 = builtin("m2a_embed").rigid_factorizations()[0]
    with pytest.raises(IncomparableError):
        composition_distance(c1, c2)


def test_builtin_doc_roundtrip():
    for name in BUILTIN_NAMES:
        lattice = builtin(name)
        again = IdealLattice.from_doc(lattice.to_doc())
        assert again.length_set() == lattice.length_set()
