import random
from math import prod

import pytest

from factorinv.abelian import make_group
from factorinv.blocks import Sequence
from factorinv.errors import (
    FaithfulTowerError,
    InvalidSpecificationError,
    NotAMemberError,
)
from factorinv.krull import KrullMonoid, make_krull, synth_hnp
from factorinv.towers import Tower, TowerSpec


def c2_monoid():
    G = make_group([2])
    return make_krull(G, ["p", "q"], {"p": (1,), "q": (1,)})


def test_make_krull_factorial():
    G = make_group([4])
    H = make_krull(G, ["p", "q"], {"p": (0,), "q": (0,)})
    assert H.contains((3, 5))
    assert set(H.atoms) == {(1, 0), (0, 1)}


def test_make_krull_even_weight():
    H = c2_monoid()
    assert H.contains((1, 1))
    assert H.contains((2, 0))
    assert not H.contains((1, 0))


def test_make_krull_c3():
    G = make_group([3])
    H = make_krull(G, ["p", "q", "r"], {"p": (1,), "q": (1,), "r": (1,)})
    assert H.contains((1, 1, 1))


def test_make_krull_validation():
    G = make_group([2])
    with pytest.raises(InvalidSpecificationError):
        make_krull(G, ["p"], {"p": (1,), "ghost": (0,)})
    with pytest.raises(InvalidSpecificationError):
        make_krull(G, ["p", "q"], {"p": (1,)})
    with pytest.raises(InvalidSpecificationError):
        make_krull(G, [], {})


def test_krull_atoms_examples():
    G = make_group([4])
    H = make_krull(G, ["p", "q"], {"p": (0,), "q": (0,)})
    assert set(H.atoms) == {(1, 0), (0, 1)}

    H = c2_monoid()
    assert set(H.atoms) == {(2, 0), (1, 1), (0, 2)}

    G3 = make_group([3])
    H3 = make_krull(G3, ["p", "q", "r"], {"p": (1,), "q": (2,), "r": (0,)})
    assert set(H3.atoms) == {(0, 0, 1), (3, 0, 0), (0, 3, 0), (1, 1, 0)}


def test_krull_atoms_match_divisibility_minimality():
    # atoms = members minimal for componentwise division, by brute force
    rng = random.Random(3)
    for _ in range(10):
        nprimes = rng.randint(1, 5)
        orders = [rng.randint(1, 6)]
        G = make_group(orders)
        cmap = {f"p{i}": rng.choice(G.elements()) for i in range(nprimes)}
        H = make_krull(G, sorted(cmap), cmap)
        bound = max(sum(a) for a in H.atoms)
        members = [v for v in H.elements(bound) if any(v)]
        minimal = set()
        for v in members:
            proper = [
                w
                for w in members
                if w != v and all(x <= y for x, y in zip(w, v))
            ]
            if not proper:
                minimal.add(v)
        assert minimal == set(H.atoms)


def test_beta_examples():
    H = c2_monoid()
    G = H.group
    assert H.beta((0, 0)) == Sequence.empty(G)
    assert H.beta((1, 1)) == Sequence.from_counts(G, {(1,): 2})
    G3 = make_group([3])
    H3 = make_krull(G3, ["p"], {"p": (1,)})
    assert H3.beta((3,)) == Sequence.from_counts(G3, {(1,): 3})


def test_beta_is_homomorphism_and_zero_sum():
    H = c2_monoid()
    for x in H.elements(4):
        for y in H.elements(4):
            xy = tuple(a + b for a, b in zip(x, y))
            assert H.beta(xy) == H.beta(x) * H.beta(y)
        assert H.beta(x).sum() == H.group.zero


def test_beta_not_a_member():
    H = c2_monoid()
    with pytest.raises(NotAMemberError):
        H.beta((1, 0))


def test_membership_closed_under_quotients():
    # y <= x componentwise with both members means x - y is a member
    rng = random.Random(8)
    for _ in range(5):
        G = make_group([rng.randint(1, 6)])
        cmap = {f"p{i}": rng.choice(G.elements()) for i in range(rng.randint(1, 4))}
        H = make_krull(G, sorted(cmap), cmap)
        members = list(H.elements(6))
        for x in members:
            for y in members:
                if all(b <= a for a, b in zip(x, y)):
                    assert H.contains(tuple(a - b for a, b in zip(x, y)))


def test_atom_correspondence():
    # x is an atom iff beta(x) is an atom of the block monoid
    G = make_group([4])
    H = make_krull(G, ["p", "q", "r"], {"p": (1,), "q": (2,), "r": (3,)})
    block_atoms = {tuple(sorted(a.counts)) for a in H.block_monoid().atoms()}
    members = [v for v in H.elements(6) if any(v)]
    atom_set = set(H.atoms)
    for v in members:
        image_key = tuple(sorted(H.beta(v).counts))
        if v in atom_set:
            assert image_key in block_atoms
        elif image_key in block_atoms:
            assert v in atom_set, f"{v} should be an atom"


def test_lift_factorization_atom_identity():
    H = c2_monoid()
    x = (1, 1)
    [piece] = H.lift_factorization(x, [H.beta(x)])
    assert piece == x


def test_lift_factorization_two_blocks():
    H = c2_monoid()
    G = H.group
    block = Sequence.from_counts(G, {(1,): 2})
    b, c = H.lift_factorization((2, 2), [block, block])
    assert tuple(x + y for x, y in zip(b, c)) == (2, 2)
    assert H.beta(b) == block
    assert H.beta(c) == block


def test_lift_factorization_factorial_units():
    G = make_group([5])
    H = make_krull(G, ["p", "q"], {"p": (0,), "q": (0,)})
    zero_atom = Sequence.from_counts(G, {(0,): 1})
    pieces = H.lift_factorization((2, 1), [zero_atom] * 3)
    assert [sum(p) for p in pieces] == [1, 1, 1]
    total = tuple(sum(col) for col in zip(*pieces))
    assert total == (2, 1)


def test_lift_factorization_rejects_wrong_blocks():
    H = c2_monoid()
    bad = Sequence.from_counts(H.group, {(1,): 4})
    with pytest.raises(InvalidSpecificationError):
        H.lift_factorization((1, 1), [bad])


def test_verify_transfer_factorial():
    G = make_group([3])
    H = make_krull(G, ["p", "q"], {"p": (0,), "q": (0,)})
    rep = H.verify_transfer(6)
    assert rep.ok, rep


def test_verify_transfer_c2():
    rep = c2_monoid().verify_transfer(8)
    assert rep.ok, rep
    assert rep.elements_checked > 0 and rep.splits_checked > 0


def test_fiber_catenary_factorial():
    G = make_group([3])
    H = make_krull(G, ["p", "q"], {"p": (0,), "q": (0,)})
    assert H.fiber_catenary(6) == 0


def test_fiber_catenary_two_primes_shared_class():
    # (p^2)(q^2) and (pq)(pq) have the same class-image multiset, so they sit
    # in one fiber at permutable distance 2
    H = c2_monoid()
    assert H.fiber_catenary(4) == 2


def test_fiber_catenary_four_primes():
    G = make_group([2])
    H = make_krull(G, ["p", "q", "r", "s"], {p: (1,) for p in "pqrs"})
    assert H.fiber_catenary(8) <= 2


def test_catenary_equals_block_catenary_or_two():
    # with every class occupied and witnesses inside the bound, the catenary
    # degree equals that of the block monoid, except that it never drops
    # below 2 once some element factors in two ways
    G3 = make_group([3])
    H = make_krull(
        G3,
        ["p1", "p2", "q1", "q2"],
        {"p1": (1,), "p2": (1,), "q1": (2,), "q2": (2,)},
    )
    bound = 6
    block_cat = H.block_monoid().presented().catenary(bound)
    assert block_cat == 3
    assert H.catenary(bound) == max(block_cat, 2) == 3

    # block monoid of C2 is factorial, but two primes in one class already
    # force distance-2 rearrangements
    H2 = c2_monoid()
    assert H2.block_monoid().presented().catenary(8) == 0
    assert H2.catenary(8) == 2

    # factorial case: no two distinct factorizations at all
    G = make_group([5])
    H0 = make_krull(G, ["p", "q"], {"p": (0,), "q": (0,)})
    assert H0.catenary(8) == 0


def test_catenary_transfer_relation():
    rng = random.Random(11)
    for _ in range(8):
        nprimes = rng.randint(1, 6)
        orders = [rng.randint(1, 4) for _ in range(rng.randint(1, 2))]
        if prod(orders) > 8:
            continue
        G = make_group(orders)
        cmap = {f"p{i}": rng.choice(G.elements()) for i in range(nprimes)}
        H = make_krull(G, sorted(cmap), cmap)
        bound = 6
        lhs = H.catenary(bound)
        rhs = max(
            H.block_monoid().presented().catenary(bound),
            H.fiber_catenary(bound),
        )
        assert lhs <= rhs, (cmap, lhs, rhs)


def tower_spec(entries, orders=(2,)):
    G = make_group(list(orders))
    towers = tuple(
        Tower(name=n, kind=k, length=l, cls=G.element(c)) for n, k, l, c in entries
    )
    return TowerSpec(G, towers)


def test_synth_single_zero_class_tower_is_factorial():
    spec = tower_spec([("T", "cycle", 1, (0,))])
    H = synth_hnp(spec)
    assert set(H.atoms) == {(1,)}
    ok, _ = H.half_factorial(8)
    assert ok


def test_synth_two_cycle_towers_c2():
    spec = tower_spec([("S", "cycle", 2, (1,)), ("T", "cycle", 3, (1,))])
    H = synth_hnp(spec)
    assert set(H.atoms) == {(2, 0), (1, 1), (0, 2)}
    assert H.verify_transfer(8).ok


def test_synth_rejects_nontrivial_faithful_tower():
    spec = tower_spec([("F", "faithful", 2, (0,))])
    with pytest.raises(FaithfulTowerError) as exc:
        synth_hnp(spec)
    assert "F" in str(exc.value)


def test_synth_allows_trivial_faithful_tower():
    spec = tower_spec([("F", "faithful", 1, (0,)), ("T", "cycle", 2, (1,))])
    H = synth_hnp(spec)
    assert H.primes == ("F", "T")
    assert H.image_classes == ((0,), (1,))


def test_from_doc():
    doc = {
        "group": {"orders": [2]},
        "primes": [{"name": "p", "class": [1]}, {"name": "q", "class": [1]}],
    }
    H = KrullMonoid.from_doc(doc)
    assert set(H.atoms) == {(2, 0), (1, 1), (0, 2)}
    with pytest.raises(InvalidSpecificationError):
        KrullMonoid.from_doc({"group": {"orders": [2]}})
