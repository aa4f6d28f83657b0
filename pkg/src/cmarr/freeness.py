"""Freeness diagnostics via the addition-deletion recursion.

The verdict lattice is {InductivelyFree, NotFree, Unknown}: sound but
incomplete.  NotFree certificates come from a Poincare polynomial that does
not factor into integral linear factors, either for the arrangement itself
or for one of its localizations; InductivelyFree certificates are removal
chains for the addition-deletion triple.
"""

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Optional

from .errors import FlatNotInLattice, IndexOutOfRange, MalformedPolynomial
from .exactlin import common_kernel, restrict_covectors_to
from .intpoly import IntPolynomial
from .lattice import (Arrangement, build_lattice, essentialize,
                      poincare_polynomial)

DEFAULT_BUDGET = 10 ** 6


@dataclass(frozen=True)
class ExponentReport:
    factors_integrally: bool
    exponents: tuple = ()
    residual: Optional[IntPolynomial] = None


def exponents_from_poincare(p):
    """Factor p into (1 + b t) pieces with nonnegative integer b.

    Greedy root-stripping: the admissible b are divisors of the current
    leading coefficient with p(-1/b) = 0; since the roots of a full
    factorization are determined, stripping any valid b at a time finds the
    factorization whenever one exists.  On failure the unfactorable residual
    is reported.
    """
    if not p.coeffs or p.coeffs[0] != 1:
        raise MalformedPolynomial("constant term must be 1, got %r"
                                  % (p.coeffs[:1] or 0,))
    exps = []
    current = list(p.coeffs)
    while len(current) > 1:
        lead = abs(current[-1])
        b_found = None
        for b in sorted(_divisors(lead)):
            if _eval_at(current, Fraction(-1, b)) == 0:
                b_found = b
                break
        if b_found is None:
            return ExponentReport(False, tuple(sorted(exps)),
                                  IntPolynomial(current))
        current = _divide_linear(current, b_found)
        exps.append(b_found)
    if current != [1]:
        return ExponentReport(False, tuple(sorted(exps)),
                              IntPolynomial(current))
    return ExponentReport(True, tuple(sorted(exps)))


def _divisors(x):
    out = set()
    d = 1
    while d * d <= x:
        if x % d == 0:
            out.add(d)
            out.add(x // d)
        d += 1
    return out


def _eval_at(coeffs, x):
    acc = Fraction(0)
    for c in reversed(coeffs):
        acc = acc * x + c
    return acc


def _divide_linear(coeffs, b):
    """Exact quotient of the polynomial by (1 + b t); assumes divisibility."""
    # coeffs[k+1] = q[k+1] + b*q[k], solved from the top down
    q = [0] * (len(coeffs) - 1)
    q[-1] = coeffs[-1] // b
    for k in range(len(q) - 2, -1, -1):
        q[k] = (coeffs[k + 1] - q[k + 1]) // b
    assert q[0] == 1
    return q


def deletion(arr, h):
    """The arrangement with hyperplane h removed; same ambient dimension."""
    if not 0 <= h < len(arr.hyperplanes):
        raise IndexOutOfRange("hyperplane index %d out of range" % h)
    covs = [c for i, c in enumerate(arr.hyperplanes) if i != h]
    tags = None
    if arr.tags is not None:
        tags = [t for i, t in enumerate(arr.tags) if i != h]
    return Arrangement(arr.dim, covs, label=arr.label, tags=tags,
                       weyl=arr.weyl)


def restriction(arr, h):
    """The arrangement {H ∩ K : K != H} inside hyperplane h (dim - 1)."""
    if not 0 <= h < len(arr.hyperplanes):
        raise IndexOutOfRange("hyperplane index %d out of range" % h)
    sub = common_kernel([arr.hyperplanes[h]], dim=arr.dim)
    others = [c for i, c in enumerate(arr.hyperplanes) if i != h]
    covs = restrict_covectors_to(sub, others)
    return Arrangement(sub.dim, covs)


def localization(arr, flat):
    """Sub-arrangement of exactly the hyperplanes containing the flat."""
    for i in flat.hyperplanes:
        if not 0 <= i < len(arr.hyperplanes):
            raise FlatNotInLattice("hyperplane index %d out of range" % i)
        cov = arr.hyperplanes[i]
        for row in flat.subspace.basis:
            if sum(Fraction(c) * x for c, x in zip(cov, row)) != 0:
                raise FlatNotInLattice(
                    "hyperplane %d does not contain the flat" % i)
    # a genuine flat of this arrangement lists *every* hyperplane that
    # contains it, so an unlisted hyperplane vanishing on the subspace
    # means the flat belongs to some other arrangement's lattice
    for i, cov in enumerate(arr.hyperplanes):
        if i in flat.hyperplanes:
            continue
        if all(sum(Fraction(c) * x for c, x in zip(cov, row)) == 0
               for row in flat.subspace.basis):
            raise FlatNotInLattice(
                "hyperplane %d contains the flat but is not listed" % i)
    covs = [arr.hyperplanes[i] for i in sorted(flat.hyperplanes)]
    return Arrangement(arr.dim, covs)


@dataclass
class FreenessVerdict:
    status: str  # "InductivelyFree" | "NotFree" | "Unknown"
    exponents: tuple = ()
    witness: object = None
    nodes_used: int = 0

    def to_dict(self):
        return {"status": self.status,
                "exponents": list(self.exponents),
                "witness": self.witness,
                "nodes_used": self.nodes_used}


class _Budget:
    __slots__ = ("remaining", "used")

    def __init__(self, limit):
        self.remaining = limit
        self.used = 0

    def spend(self):
        if self.remaining <= 0:
            return False
        self.remaining -= 1
        self.used += 1
        return True


def inductive_freeness(arr, budget=DEFAULT_BUDGET):
    """Decide inductive freeness by the addition-deletion recursion.

    The triple (A, A' = deletion, A'' = restriction) certifies A when both
    A' and A'' are inductively free and exp(A'') is a sub-multiset of
    exp(A'); then exp(A) = exp(A'') + {|A| - |A''|}.  Exponent multisets
    include a 0 for each dimension the sub-arrangement fails to be
    essential.  Candidate hyperplanes are filtered through the exponents of
    the Poincare factorization (|A| - |A''| must itself be an exponent) and
    tried with the largest restriction first.
    """
    if budget <= 0:
        raise ValueError("budget must be positive")
    memo = {}
    bud = _Budget(budget)
    ess = essentialize(arr)
    verdict = _inductive(ess, memo, bud)
    verdict.nodes_used = bud.used
    return verdict


def _exponents_padded(arr, memo, bud, known_p=None):
    """Verdict for a possibly non-essential arrangement, exponents padded
    with a 0 per missing rank so multisets compare in a fixed dimension."""
    ess = essentialize(arr)
    v = _inductive(ess, memo, bud, known_p)
    if v.status != "InductivelyFree":
        return v, None
    padded = tuple(sorted(v.exponents + (0,) * (arr.dim - arr.rank)))
    return v, padded


def _inductive(arr, memo, bud, known_p=None):
    key = arr.canonical_key()
    if key in memo:
        return memo[key]
    if not bud.spend():
        return FreenessVerdict("Unknown", witness={"reason": "budget"})
    n = len(arr.hyperplanes)
    if n == 0:
        v = FreenessVerdict("InductivelyFree", ())
        memo[key] = v
        return v
    if arr.rank <= 2:
        # every central rank <= 2 arrangement peels one line at a time
        exps = (1,) if n == 1 else (1, n - 1)
        v = FreenessVerdict("InductivelyFree", exps,
                            witness={"reason": "rank<=2"})
        memo[key] = v
        return v
    # The recursion hands each child its Poincare polynomial through the
    # deletion-restriction identity p(A) = p(A') + t p(A''), so only the
    # root and the (lower-dimensional) restrictions ever build a lattice.
    p = known_p if known_p is not None \
        else poincare_polynomial(build_lattice(arr))
    rep = exponents_from_poincare(p)
    if not rep.factors_integrally:
        v = FreenessVerdict("NotFree",
                            witness={"reason": "poincare_residual",
                                     "poincare": list(p.coeffs),
                                     "residual": list(rep.residual.coeffs)})
        memo[key] = v
        return v
    target_exps = rep.exponents
    # candidate removals: |A| - |A''| must be one of the exponents
    candidates = []
    for h in range(n):
        rst = restriction(arr, h)
        b = n - len(rst)
        if b in target_exps:
            candidates.append((len(rst), h, rst))
    candidates.sort(key=lambda t: (-t[0], t[1]))
    budget_hit = False
    for _, h, rst in candidates:
        p_rst = poincare_polynomial(build_lattice(essentialize(rst)))
        v2, exp2 = _exponents_padded(rst, memo, bud, known_p=p_rst)
        if v2.status == "Unknown":
            budget_hit = True
            continue
        if exp2 is None:
            continue
        dele = deletion(arr, h)
        p_del = p - p_rst.shift(1)
        v1, exp1 = _exponents_padded(dele, memo, bud, known_p=p_del)
        if v1.status == "Unknown":
            budget_hit = True
            continue
        if exp1 is None:
            continue
        if not _submultiset(exp2, exp1):
            continue
        exps = tuple(sorted(exp2 + (n - len(rst.hyperplanes),)))
        step = {"removed": list(arr.hyperplanes[h]),
                "deletion_exponents": list(exp1),
                "restriction_exponents": list(exp2),
                "exponents": list(exps)}
        chain = [step]
        if isinstance(v1.witness, dict) and "chain" in v1.witness:
            chain += v1.witness["chain"]
        v = FreenessVerdict("InductivelyFree", exps, witness={"chain": chain})
        assert sorted(exps) == sorted(target_exps), \
            "chain exponents disagree with Poincare factorization"
        memo[key] = v
        return v
    # the search failed: look for a cheap non-freeness certificate among
    # proper localizations of rank >= 3 before giving up
    nf = _localization_residual(arr, build_lattice(arr))
    if nf is not None:
        memo[key] = nf
        return nf
    reason = "budget" if budget_hit else "no_chain"
    v = FreenessVerdict("Unknown", witness={"reason": reason})
    if not budget_hit:
        memo[key] = v
    return v


def _localization_residual(arr, lat):
    n = len(arr.hyperplanes)
    for f in lat.flats:
        if f.rank < 3 or len(f.hyperplanes) == n:
            continue
        loc = essentialize(localization(arr, f))
        p = poincare_polynomial(build_lattice(loc))
        rep = exponents_from_poincare(p)
        if not rep.factors_integrally:
            return FreenessVerdict(
                "NotFree",
                witness={"reason": "nonfree_localization",
                         "flat_hyperplanes": sorted(f.hyperplanes),
                         "poincare": list(p.coeffs),
                         "residual": list(rep.residual.coeffs)})
    return None


def _submultiset(a, b):
    items = list(b)
    for x in a:
        if x in items:
            items.remove(x)
        else:
            return False
    return True


def nonfree_by_localization(arr, budget_per_flat=10 ** 4):
    """Scan flats by increasing rank for a localization certified NotFree.

    Returns a NotFree FreenessVerdict naming the first such flat, or None
    (no certificate).  Rank <= 2 localizations are skipped: they are always
    free.
    """
    lat = build_lattice(arr)
    flats = sorted(lat.flats, key=lambda f: (f.rank,
                                             tuple(sorted(f.hyperplanes))))
    for f in flats:
        if f.rank < 3:
            continue
        loc = essentialize(localization(arr, f))
        v = inductive_freeness(loc, budget=budget_per_flat)
        if v.status == "NotFree":
            return FreenessVerdict(
                "NotFree",
                witness={"reason": "nonfree_localization",
                         "flat_hyperplanes": sorted(f.hyperplanes),
                         "inner": v.witness})
    return None
