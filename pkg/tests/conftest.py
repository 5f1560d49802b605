import itertools


def partitions(n):
    if n == 0:
        yield []
        return
    for first in range(n, 0, -1):
        for rest in partitions(n - first):
            if not rest or first >= rest[0]:
                yield [first] + rest


def prime_factorization(n):
    out = {}
    d = 2
    while d * d <= n:
        while n % d == 0:
            out[d] = out.get(d, 0) + 1
            n //= d
        d += 1
    if n > 1:
        out[n] = out.get(n, 0) + 1
    return out


def abelian_groups_up_to(max_order):
    """Cyclic-order lists of all abelian groups of order <= max_order, one
    per isomorphism class."""
    groups = []
    for n in range(1, max_order + 1):
        factors = prime_factorization(n)
        per_prime = [list(partitions(e)) for e in factors.values()]
        for combo in itertools.product(*per_prime):
            orders = []
            for p, part in zip(factors.keys(), combo):
                orders.extend(p ** e for e in part)
            groups.append(sorted(orders))
    return groups
