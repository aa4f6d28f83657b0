"""Permutation-group actions on arrangements and Table 1 auditing.

The group is a product of symmetric groups, one per Weyl block; sigma sends
the ambient coordinate kappa_{b,i} to kappa_{b,sigma(i)} and the induced map
on the essential coordinates (index-0 coordinate of each block eliminated)
is applied to covectors.
"""

import itertools
from dataclasses import dataclass
from math import factorial

from .errors import LayoutMismatch, NonIntegral, NotStable
from .exactlin import normalize_covector
from .lattice import Arrangement
from .freeness import exponents_from_poincare


class BlockPermutation:
    """One permutation per block; perms[b][i] is the image of position i."""

    __slots__ = ("blocks", "perms")

    def __init__(self, blocks, perms):
        self.blocks = tuple(int(b) for b in blocks)
        self.perms = tuple(tuple(p) for p in perms)
        if len(self.blocks) != len(self.perms):
            raise LayoutMismatch("need one permutation per block")
        for m, p in zip(self.blocks, self.perms):
            if sorted(p) != list(range(m)):
                raise LayoutMismatch("bad permutation %r for block size %d"
                                     % (list(p), m))

    @classmethod
    def identity(cls, blocks):
        return cls(blocks, [tuple(range(m)) for m in blocks])

    def compose(self, other):
        """self after other: (self*other)(i) = self(other(i))."""
        if self.blocks != other.blocks:
            raise LayoutMismatch("block layouts differ")
        return BlockPermutation(
            self.blocks,
            [tuple(p[q[i]] for i in range(m))
             for m, p, q in zip(self.blocks, self.perms, other.perms)])

    def apply_covector(self, cov):
        """Pull a covector on the essential coordinates through the action.

        Per block: lift to ambient coefficients (0, c_1, ..., c_{m-1}),
        move the coefficient at position i to position sigma(i), then
        eliminate the block's index-0 coordinate again.
        """
        out = []
        pos = 0
        for m, p in zip(self.blocks, self.perms):
            seg = cov[pos:pos + m - 1]
            pos += m - 1
            amb = (0,) + tuple(seg)
            moved = [0] * m
            for i in range(m):
                moved[p[i]] = amb[i]
            out.extend(moved[i] - moved[0] for i in range(1, m))
        if pos != len(cov):
            raise LayoutMismatch("covector length %d does not fit blocks %r"
                                 % (len(cov), list(self.blocks)))
        return normalize_covector(out)

    def __eq__(self, other):
        return (isinstance(other, BlockPermutation)
                and self.blocks == other.blocks
                and self.perms == other.perms)

    def __hash__(self):
        return hash((self.blocks, self.perms))

    def __repr__(self):
        return "BlockPermutation(%r, %r)" % (list(self.blocks),
                                             [list(p) for p in self.perms])


def _check_layout(arr, blocks):
    blocks = tuple(int(b) for b in blocks)
    dim = sum(m - 1 for m in blocks)
    if dim != arr.dim:
        raise LayoutMismatch(
            "blocks %r give essential dimension %d, arrangement has %d"
            % (list(blocks), dim, arr.dim))
    return blocks


def block_generators(blocks):
    """Adjacent transpositions of each block: generators of the group."""
    gens = []
    for b, m in enumerate(blocks):
        for i in range(m - 1):
            perms = [tuple(range(mm)) for mm in blocks]
            p = list(range(m))
            p[i], p[i + 1] = p[i + 1], p[i]
            perms[b] = tuple(p)
            gens.append(BlockPermutation(blocks, perms))
    return gens


def act(perm, arr):
    """The image arrangement: every covector pulled through the action."""
    _check_layout(arr, perm.blocks)
    covs = [perm.apply_covector(c) for c in arr.hyperplanes]
    return Arrangement(arr.dim, covs, label=arr.label, tags=arr.tags,
                       weyl=arr.weyl)


@dataclass(frozen=True)
class StabilityResult:
    stable: bool
    witness_generator: object = None  # violating generator, when unstable
    witness_covector: object = None  # a covector mapped outside the set

    def __bool__(self):
        return self.stable


def is_stable(arr, spec):
    """Set-wise invariance under each adjacent-transposition generator."""
    blocks = _check_layout(arr, spec)
    cov_set = set(arr.hyperplanes)
    for g in block_generators(blocks):
        for c in arr.hyperplanes:
            img = g.apply_covector(c)
            if img not in cov_set:
                return StabilityResult(False, g, c)
    return StabilityResult(True)


def hyperplane_orbits(arr, spec):
    """Orbit partition of hyperplane indices under the generated group."""
    blocks = _check_layout(arr, spec)
    st = is_stable(arr, blocks)
    if not st.stable:
        raise NotStable("arrangement is not stable under %r (generator %r "
                        "moves %r outside the set)"
                        % (list(blocks), st.witness_generator,
                           st.witness_covector))
    gens = block_generators(blocks)
    index_of = {c: i for i, c in enumerate(arr.hyperplanes)}
    unassigned = set(range(len(arr.hyperplanes)))
    orbits = []
    while unassigned:
        seed = min(unassigned)
        orbit = {seed}
        frontier = [seed]
        while frontier:
            new = []
            for i in frontier:
                for g in gens:
                    j = index_of[g.apply_covector(arr.hyperplanes[i])]
                    if j not in orbit:
                        orbit.add(j)
                        new.append(j)
            frontier = new
        orbits.append(tuple(sorted(orbit)))
        unassigned -= orbit
    orbits.sort()
    return tuple(orbits)


def contains_subarrangement(arr, sub):
    """True iff every covector of sub occurs in arr (same coordinates)."""
    if arr.dim != sub.dim:
        raise LayoutMismatch("ambient dimensions differ: %d vs %d"
                             % (arr.dim, sub.dim))
    return set(sub.hyperplanes) <= set(arr.hyperplanes)


def group_order(spec):
    out = 1
    for m in spec:
        out *= factorial(m)
    return out


def terminalization_count(p, spec):
    """E = p(1) / |W|; NonIntegral flags inconsistent (polynomial, group)."""
    total = p(1)
    order = group_order(spec)
    if total % order:
        raise NonIntegral("dim H = %d is not divisible by |W| = %d"
                          % (total, order))
    return total // order


def audit_table1(rows=None):
    """Consistency checks on the reference table; reports, never repairs.

    Per row: (i) deg(pi) equals the essential dimension of the Weyl layout;
    (ii) pi(1)/|W| is an integer equal to the printed E; (iii) for rows
    printed free with rank 2, the exponents exist.  Returns a list of dicts.
    """
    if rows is None:
        from .generators import table1_rows
        rows = table1_rows()
    reports = []
    for row in rows:
        p = row.poincare
        expected_dim = sum(m - 1 for m in row.weyl)
        check_degree = (p.degree == expected_dim)
        total = p(1)
        order = row.weyl_order
        if total % order:
            computed_e = None
            check_e = False
        else:
            computed_e = total // order
            check_e = (computed_e == row.e_count)
        check_exponents = None
        if row.free_flag and p.degree == 2:
            check_exponents = exponents_from_poincare(p).factors_integrally
        reports.append({
            "group": row.group,
            "check_degree": check_degree,
            "check_e": check_e,
            "computed_e": computed_e,
            "printed_e": row.e_count,
            "check_exponents": check_exponents,
            "pass": check_degree and check_e
                    and check_exponents is not False,
        })
    return reports
