"""Intersection lattice of a central arrangement and its polynomials.

Includes a finite-field point-counting fast path for the characteristic
polynomial, cross-validated against the Mobius-sum definition.
"""

import itertools
from fractions import Fraction
from math import gcd

from .errors import BadPrime, DimensionMismatch, InconsistentCounts
from .exactlin import (Subspace, common_kernel, in_row_span, normalize_covector,
                       rank_of, rref, span_coordinates)
from .intpoly import IntPolynomial, lagrange_interpolate


class Arrangement:
    """Ambient dimension plus an ordered, deduplicated list of covectors.

    Optional metadata: a label, per-hyperplane 'T'/'F' tags, and a Weyl block
    layout (tuple of symmetric-group sizes m, each acting on a zero-sum block
    contributing m-1 essential coordinates).
    """

    __slots__ = ("dim", "hyperplanes", "label", "tags", "weyl", "_rank")

    def __init__(self, dim, covectors, label=None, tags=None, weyl=None):
        self.dim = int(dim)
        hyps = []
        kept_tags = []
        seen = set()
        covectors = list(covectors)
        if tags is not None and len(tags) != len(covectors):
            raise ValueError("tags length %d != covector count %d"
                             % (len(tags), len(covectors)))
        for i, c in enumerate(covectors):
            if len(c) != self.dim:
                raise DimensionMismatch(
                    "covector length %d != dim %d" % (len(c), self.dim))
            nc = normalize_covector(c)
            if nc in seen:
                continue
            seen.add(nc)
            hyps.append(nc)
            if tags is not None:
                kept_tags.append(tags[i])
        self.hyperplanes = tuple(hyps)
        self.label = label
        self.tags = tuple(kept_tags) if tags is not None else None
        self.weyl = tuple(weyl) if weyl is not None else None
        self._rank = None

    def __len__(self):
        return len(self.hyperplanes)

    @property
    def rank(self):
        if self._rank is None:
            self._rank = rank_of(self.hyperplanes, dim=self.dim) \
                if self.hyperplanes else 0
        return self._rank

    def covector_set(self):
        return frozenset(self.hyperplanes)

    def canonical_key(self):
        return (self.dim, tuple(sorted(self.hyperplanes)))

    def __repr__(self):
        return "Arrangement(dim=%d, n=%d%s)" % (
            self.dim, len(self.hyperplanes),
            ", label=%r" % self.label if self.label else "")


class Flat:
    """A flat of the lattice: an intersection of some of the hyperplanes."""

    __slots__ = ("subspace", "hyperplanes", "rank", "mobius")

    def __init__(self, subspace, hyperplanes, rank, mobius=None):
        self.subspace = subspace
        self.hyperplanes = frozenset(hyperplanes)  # indices into arrangement
        self.rank = rank
        self.mobius = mobius

    def __repr__(self):
        return "Flat(rank=%d, hyperplanes=%s, mobius=%r)" % (
            self.rank, sorted(self.hyperplanes), self.mobius)


class IntersectionLattice:
    __slots__ = ("arrangement", "flats", "by_rank", "bottom", "covers")

    def __init__(self, arrangement, flats, by_rank, covers):
        self.arrangement = arrangement
        self.flats = flats
        self.by_rank = by_rank
        self.bottom = by_rank[0][0]
        self.covers = covers


def build_lattice(arr):
    """Rank-level closure of intersections, with Mobius numbers.

    Flats are keyed by the span of their contained covectors (equivalently
    by their subspace); containment of flats is containment of the
    hyperplane index sets, which is valid because every flat of a central
    arrangement is the intersection of the hyperplanes containing it.
    """
    n = len(arr.hyperplanes)
    covs = arr.hyperplanes
    bottom_key = ()
    bottom = Flat(Subspace.full(arr.dim), frozenset(), 0, mobius=1)
    by_rank = [[bottom]]
    # span_of[flat id] = rref rows of the covectors through the flat
    level = {bottom_key: (bottom, [])}
    seen_hsets = {frozenset()}
    while True:
        next_level = {}
        for _, (flat, span_rows) in level.items():
            r = flat.rank
            for h in range(n):
                if h in flat.hyperplanes:
                    continue
                if in_row_span(covs[h], span_rows):
                    continue  # would not increase rank: already in this flat
                new_rows = rref(list(span_rows) + [covs[h]])
                key = tuple(new_rows)
                if key in next_level:
                    continue
                hset = frozenset(i for i in range(n)
                                 if in_row_span(covs[i], new_rows))
                if hset in seen_hsets:
                    continue
                sub = common_kernel([covs[i] for i in sorted(hset)],
                                    dim=arr.dim)
                new_flat = Flat(sub, hset, r + 1)
                next_level[key] = (new_flat, new_rows)
                seen_hsets.add(hset)
        if not next_level:
            break
        by_rank.append([f for f, _ in next_level.values()])
        # deterministic order within a level: sort by hyperplane index set
        by_rank[-1].sort(key=lambda f: tuple(sorted(f.hyperplanes)))
        level = next_level
    flats = [f for lvl in by_rank for f in lvl]
    # Mobius recursion mu(bottom) = 1, mu(X) = -sum_{Z < X} mu(Z)
    for f in flats:
        if f.rank == 0:
            continue
        acc = 0
        for g in flats:
            if g.rank < f.rank and g.hyperplanes <= f.hyperplanes:
                acc += g.mobius
        f.mobius = -acc
        sign = -1 if f.rank % 2 else 1
        assert f.mobius * sign > 0, \
            "Mobius sign violation at rank %d" % f.rank
    covers = _covering_relations(by_rank)
    return IntersectionLattice(arr, flats, by_rank, covers)


def _covering_relations(by_rank):
    covers = {}
    for r in range(len(by_rank) - 1):
        for i, f in enumerate(by_rank[r]):
            ups = []
            for j, g in enumerate(by_rank[r + 1]):
                if f.hyperplanes <= g.hyperplanes:
                    ups.append((r + 1, j))
            covers[(r, i)] = ups
    for j in range(len(by_rank[-1])):
        covers[(len(by_rank) - 1, j)] = []
    return covers


def poincare_polynomial(lat):
    """pi(A, t) = sum_X mu(X) (-t)^rank(X)."""
    coeffs = [0] * len(lat.by_rank)
    for f in lat.flats:
        coeffs[f.rank] += f.mobius * (-1) ** f.rank
    return IntPolynomial(coeffs)


def characteristic_polynomial(lat):
    """chi(A, t) = sum_X mu(X) t^{dim X}."""
    d = lat.arrangement.dim
    coeffs = [0] * (d + 1)
    for f in lat.flats:
        coeffs[d - f.rank] += f.mobius
    return IntPolynomial(coeffs)


def whitney_numbers(lat):
    """(|w_0|, ..., |w_r|): absolute Mobius sums per rank."""
    return tuple(poincare_polynomial(lat).coeffs)


def essentialize(arr):
    """Rewrite the covectors in a basis of their own span.

    The result has dim = rank(arr) and the identical dependency structure
    (same matroid, same lattice combinatorics).  Hyperplane order, tags and
    label are preserved; the Weyl layout is dropped because the block
    structure has no meaning in the new coordinates.
    """
    if arr.rank == arr.dim:
        return arr
    _, coords = span_coordinates(arr.hyperplanes)
    return Arrangement(arr.rank, [normalize_covector(c) for c in coords],
                       label=arr.label, tags=arr.tags)


# ---------------------------------------------------------------------------
# finite-field fast path


def _int_det(rows):
    """Determinant of a small square integer matrix (Bareiss elimination)."""
    m = [list(r) for r in rows]
    n = len(m)
    sign = 1
    prev = 1
    for k in range(n - 1):
        if m[k][k] == 0:
            swap = None
            for i in range(k + 1, n):
                if m[i][k] != 0:
                    swap = i
                    break
            if swap is None:
                return 0
            m[k], m[swap] = m[swap], m[k]
            sign = -sign
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) // prev
            m[i][k] = 0
        prev = m[k][k]
    return sign * m[n - 1][n - 1]


def bad_primes(arr):
    """Primes modulo which the covector matroid degenerates.

    A prime q preserves every subset rank iff every Q-independent subset S
    of covectors stays independent mod q, i.e. q does not divide the gcd of
    the maximal minors of S.  Returns the set of all primes dividing such a
    gcd for some independent subset of size <= dim.  Point counts over any
    prime outside this set follow the characteristic polynomial.
    """
    covs = arr.hyperplanes
    d = arr.dim
    n = len(covs)
    bad = set()
    max_k = min(d, n)
    for k in range(2, max_k + 1):
        for idx in itertools.combinations(range(n), k):
            sub = [covs[i] for i in idx]
            g = 0
            for cols in itertools.combinations(range(d), k):
                det = _int_det([[row[c] for c in cols] for row in sub])
                g = gcd(g, abs(det))
                if g == 1:
                    break
            if g > 1:
                # subset independent over Q but all minors share a factor
                bad |= _prime_factors(g)
    return bad


def _prime_factors(x):
    out = set()
    p = 2
    while p * p <= x:
        if x % p == 0:
            out.add(p)
            while x % p == 0:
                x //= p
        p += 1 if p == 2 else 2
    if x > 1:
        out.add(x)
    return out


def _is_prime(q):
    if q < 2:
        return False
    p = 2
    while p * p <= q:
        if q % p == 0:
            return False
        p += 1 if p == 2 else 2
    return True


def admissible_primes(arr, count):
    """The `count` smallest primes admissible for finite-field counting."""
    bad = bad_primes(arr)
    out = []
    q = 2
    while len(out) < count:
        if _is_prime(q) and q not in bad:
            out.append(q)
        q += 1
    return out


def complement_count(arr, q):
    """Number of points of F_q^dim lying on none of the hyperplanes.

    Iterates over the fibers of the last coordinate: for each prefix in
    F_q^{dim-1}, collect the forbidden last-coordinate values.
    """
    d = arr.dim
    if d == 0:
        return 1
    covs = [tuple(x % q for x in c) for c in arr.hyperplanes]
    if d == 1:
        return q - (1 if covs else 0)
    pre = []
    for c in covs:
        head = [(i, c[i]) for i in range(d - 1) if c[i]]
        last = c[d - 1]
        inv = pow(last, -1, q) if last else None
        pre.append((head, last, inv))
    total = 0
    for point in itertools.product(range(q), repeat=d - 1):
        forbidden = set()
        alive = True
        for head, last, inv in pre:
            s = 0
            for i, ci in head:
                s += ci * point[i]
            s %= q
            if last:
                forbidden.add((-s * inv) % q)
            elif s == 0:
                alive = False
                break
        if alive:
            total += q - len(forbidden)
    return total


def char_poly_finite_field(arr, primes):
    """Characteristic polynomial via point counts over several primes.

    Interpolates through the first dim+1 pairs (q, count) and checks the
    remaining primes against the interpolated polynomial, so a degenerate
    prime that slipped through is caught rather than silently wrong.
    """
    d = arr.dim
    primes = list(primes)
    if len(primes) < d + 1:
        raise ValueError("need at least dim+1 = %d primes, got %d"
                         % (d + 1, len(primes)))
    if len(set(primes)) != len(primes):
        raise BadPrime("primes must be distinct")
    bad = bad_primes(arr)
    for q in primes:
        if not _is_prime(q):
            raise BadPrime("%d is not prime" % q)
        if q in bad:
            raise BadPrime("%d divides a critical minor gcd" % q)
    counts = [(q, complement_count(arr, q)) for q in primes]
    coeffs = lagrange_interpolate(counts[:d + 1])
    if any(c.denominator != 1 for c in coeffs):
        raise InconsistentCounts("interpolant has non-integer coefficients")
    poly = IntPolynomial([int(c) for c in coeffs])
    for q, cnt in counts[d + 1:]:
        if poly(q) != cnt:
            raise InconsistentCounts(
                "count at q=%d is %d, interpolant predicts %d"
                % (q, cnt, poly(q)))
    return poly
