"""Orlik-Solomon combinatorics: circuits, broken circuits, nbc sets.

Only the graded dimensions of the cohomology of the complement are computed;
the algebra itself is represented combinatorially through nbc sets.
"""

import itertools
from fractions import Fraction
from math import gcd

from .exactlin import rref


class CircuitSet:
    """All minimal dependent subsets of the arrangement's covectors."""

    __slots__ = ("circuits",)

    def __init__(self, circuits):
        self.circuits = tuple(tuple(sorted(c)) for c in circuits)

    def __iter__(self):
        return iter(self.circuits)

    def __len__(self):
        return len(self.circuits)


class NbcBasis:
    """Independent index sets containing no broken circuit, by cardinality."""

    __slots__ = ("order", "sets_by_size")

    def __init__(self, order, sets_by_size):
        self.order = tuple(order)
        self.sets_by_size = tuple(tuple(s) for s in sets_by_size)

    @property
    def sizes(self):
        return tuple(len(s) for s in self.sets_by_size)

    @property
    def total(self):
        return sum(self.sizes)


def _subset_rank(covs, idx):
    return len(rref([covs[i] for i in idx]))


_circuit_cache = {}


def circuits(arr):
    """Minimal dependent subsets, found by increasing size with pruning.

    A size-k subset all of whose (k-1)-subsets are independent is a circuit
    iff its rank is k-1.  No circuit exceeds rank+1 elements in a central
    arrangement.  Results are cached on the canonical covector list, since
    nbc enumeration under several orders reuses the same circuits.
    """
    cache_key = (arr.dim, arr.hyperplanes)  # index sets depend on the order
    cached = _circuit_cache.get(cache_key)
    if cached is not None:
        return cached
    covs = arr.hyperplanes
    n = len(covs)
    found = []
    # DFS over independent subsets in increasing index order.  At a node I,
    # a later covector h lying in span(I) closes the unique circuit inside
    # I + {h}; it equals I + {h} exactly when the representation of h over
    # I uses every element, and every circuit is met exactly once this way
    # (at I = circuit minus its largest element).  Rows carry integer
    # forward-elimination state plus the combination over I.

    def dfs(current, rows, start):
        for h in range(start, n):
            v = list(covs[h])
            combo = [0] * len(current)
            mult = 1
            for rv, rlead, rcombo in rows:
                if v[rlead] != 0:
                    p, f = rv[rlead], v[rlead]
                    v = [p * x - f * y for x, y in zip(v, rv)]
                    combo = [p * a - f * b for a, b in zip(combo, rcombo)]
                    mult *= p
            lead = next((j for j, x in enumerate(v) if x != 0), None)
            if lead is None:
                if all(c != 0 for c in combo):
                    found.append(tuple(current) + (h,))
                continue
            g = abs(mult)
            for x in v:
                g = gcd(g, abs(x))
            for c in combo:
                g = gcd(g, abs(c))
            new_rows = [(rv, rlead, rcombo + [0]) for rv, rlead, rcombo
                        in rows]
            new_rows.append(([x // g for x in v], lead,
                             [c // g for c in combo] + [mult // g]))
            current.append(h)
            dfs(current, new_rows, h + 1)
            current.pop()

    dfs([], [], 0)
    result = CircuitSet(sorted(found))
    _circuit_cache[cache_key] = result
    return result


def broken_circuits(circuit_set, order):
    """Each circuit minus its least element w.r.t. the given order."""
    pos = {h: i for i, h in enumerate(order)}
    out = []
    for c in circuit_set:
        least = min(c, key=lambda h: pos[h])
        out.append(frozenset(h for h in c if h != least))
    return out


def nbc_basis(arr, order=None):
    """Enumerate the nbc sets of the arrangement under a hyperplane order.

    DFS over hyperplanes in order position, maintaining an incremental row
    basis for the independence test; branches are cut as soon as a set is
    dependent or contains a broken circuit, since both defects persist in
    supersets.
    """
    n = len(arr.hyperplanes)
    if order is None:
        order = tuple(range(n))
    order = tuple(order)
    if sorted(order) != list(range(n)):
        raise ValueError("order must be a permutation of 0..%d" % (n - 1))
    covs = arr.hyperplanes
    bcs = broken_circuits(circuits(arr), order)
    pos = {h: i for i, h in enumerate(order)}
    # broken circuits indexed by their order-largest element: a violation can
    # only appear when that element is added
    bc_by_top = {}
    for bc in bcs:
        top = max(bc, key=lambda h: pos[h])
        bc_by_top.setdefault(top, []).append(bc)
    sets_by_size = [[] for _ in range(arr.rank + 1)]

    def dfs(start_pos, current, basis_rows):
        sets_by_size[len(current)].append(tuple(sorted(current)))
        for p in range(start_pos, n):
            h = order[p]
            cur_set = set(current)
            cur_set.add(h)
            violated = False
            for bc in bc_by_top.get(h, ()):
                if bc <= cur_set:
                    violated = True
                    break
            if violated:
                continue
            new_rows = rref(list(basis_rows) + [covs[h]])
            if len(new_rows) == len(basis_rows):
                continue  # dependent; supersets stay dependent
            current.append(h)
            dfs(p + 1, current, new_rows)
            current.pop()

    dfs(0, [], [])
    for bucket in sets_by_size:
        bucket.sort()
    return NbcBasis(order, sets_by_size)


def os_dimension(arr):
    """Total number of nbc sets = pi(arr, 1)."""
    return nbc_basis(arr).total
