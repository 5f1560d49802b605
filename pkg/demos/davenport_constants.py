"""
Davenport constants of small abelian groups
===========================================

D(G) is the maximal length of a minimal zero-sum sequence over G; it equals
one plus the maximal length of a zero-sum-free sequence and bounds the atom
lengths of every block monoid over G.  The table below covers all abelian
groups of order at most 16.
"""

import itertools

from factorinv import davenport, make_group, minimal_zero_sum_sequences


def abelian_groups_up_to(max_order):
    def partitions(n):
        if n == 0:
            yield []
            return
        for first in range(n, 0, -1):
            for rest in partitions(n - first):
                if not rest or first >= rest[0]:
                    yield [first] + rest

    for n in range(1, max_order + 1):
        factors = {}
        m, d = n, 2
        while d * d <= m:
            while m % d == 0:
                factors[d] = factors.get(d, 0) + 1
                m //= d
            d += 1
        if m > 1:
            factors[m] = factors.get(m, 0) + 1
        per_prime = [list(partitions(e)) for e in factors.values()]
        for combo in itertools.product(*per_prime):
            orders = []
            for p, part in zip(factors.keys(), combo):
                orders.extend(p ** e for e in part)
            yield sorted(orders)


print(f"{'group':>14}  {'|G|':>4}  {'exponent':>8}  {'D(G)':>5}")
for orders in abelian_groups_up_to(16):
    G = make_group(orders)
    print(f"{str(G):>14}  {G.cardinality:>4}  {G.exponent:>8}  {davenport(G):>5}")

# For a rank-2 group C_m + C_n with m | n the constant is m + n - 1; one
# extremal atom for C3 + C3 has length 5:
G = make_group([3, 3])
longest = max(minimal_zero_sum_sequences(G), key=lambda a: a.length)
print("\nextremal atom over C3xC3:", longest, "of length", longest.length)
