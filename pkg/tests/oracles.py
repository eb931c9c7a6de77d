"""Brute-force reference implementations used as test oracles.

Everything here works on raw row tuples and re-derives each notion from its
definition with plain loops.  Nothing is imported from the package.
"""

import itertools


def all_tables(n):
    for cells in itertools.product(range(n), repeat=n * n):
        yield tuple(tuple(cells[i * n:(i + 1) * n]) for i in range(n))


def associative(t):
    n = len(t)
    return all(t[t[x][y]][z] == t[x][t[y][z]] for x in range(n) for y in range(n) for z in range(n))


def right_ids(t, g):
    return {x for x in range(len(t)) if t[g][x] == g}


def left_ids(t, g):
    return {x for x in range(len(t)) if t[x][g] == g}


def all_ids(t):
    out = set()
    for g in range(len(t)):
        out |= right_ids(t, g) | left_ids(t, g)
    return out


def def21_inverses(t, g):
    own = right_ids(t, g) | left_ids(t, g)
    return {h for h in range(len(t)) if t[g][h] in own or t[h][g] in own}


def d_inverses(t, g):
    return {h for h in def21_inverses(t, g) if t[h][g] in right_ids(t, g) and t[g][h] in left_ids(t, g)}


def literal_dg(t):
    if not associative(t):
        return False
    for g in range(len(t)):
        inv = def21_inverses(t, g)
        if not right_ids(t, g) or not left_ids(t, g) or not inv or inv != d_inverses(t, g):
            return False
    return True


def strict_dg(t):
    return literal_dg(t) and all(
        len(right_ids(t, g)) == len(left_ids(t, g)) == len(def21_inverses(t, g)) == 1 for g in range(len(t))
    )


def two_sided_identity(t):
    n = len(t)
    for e in range(n):
        if all(t[e][x] == x == t[x][e] for x in range(n)):
            return e
    return None


def monoid(t):
    return associative(t) and two_sided_identity(t) is not None


def group(t):
    if not monoid(t):
        return False
    e = two_sided_identity(t)
    n = len(t)
    return all(any(t[g][h] == e == t[h][g] for h in range(n)) for g in range(n))


def regular(t):
    n = len(t)
    return associative(t) and all(any(t[t[x][y]][x] == x for y in range(n)) for x in range(n))


def inverse_semigroup(t):
    # unique y with x y x = x and y x y = y
    n = len(t)
    if not associative(t):
        return False
    for x in range(n):
        ys = [y for y in range(n) if t[t[x][y]][x] == x and t[t[y][x]][y] == y]
        if len(ys) != 1:
            return False
    return True


def commutative(t):
    n = len(t)
    return all(t[a][b] == t[b][a] for a in range(n) for b in range(n))


def group_inverse(t, g):
    e = two_sided_identity(t)
    return next(h for h in range(len(t)) if t[g][h] == e)


def group_subgroups(t):
    """All subgroups of a group as sorted tuples, smallest mask first."""
    n = len(t)
    e = two_sided_identity(t)
    out = []
    for mask in range(1, 1 << n):
        s = {i for i in range(n) if mask >> i & 1}
        if e in s and all(t[a][b] in s for a in s for b in s) and all(group_inverse(t, a) in s for a in s):
            out.append(tuple(sorted(s)))
    return out


def left_coset(t, g, s):
    return frozenset(t[g][x] for x in s)


def right_coset(t, g, s):
    return frozenset(t[x][g] for x in s)


def normal_in_group(t, s):
    return all(left_coset(t, g, s) == right_coset(t, g, s) for g in range(len(t)))


def group_quotient_partition(t, s):
    return sorted({left_coset(t, g, s) for g in range(len(t))}, key=min)


def isomorphic_by_search(a, b):
    """Search all bijections ``a -> b`` for one that preserves the product."""
    n = len(a)
    if n != len(b):
        return False
    for perm in itertools.permutations(range(n)):
        if all(perm[a[x][y]] == b[perm[x]][perm[y]] for x in range(n) for y in range(n)):
            return True
    return False


def homomorphisms(dom, cod):
    n, k = len(dom), len(cod)
    out = []
    for images in itertools.product(range(k), repeat=n):
        if all(images[dom[x][y]] == cod[images[x]][images[y]] for x in range(n) for y in range(n)):
            out.append(images)
    return out


def cyclic_rows(k):
    return tuple(tuple((i + j) % k for j in range(k)) for i in range(k))
