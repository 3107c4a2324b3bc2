"""Gelfand-Tsetlin branching for o(2n) and sp(2n) plus the bounded sp case.

Admissible tuples are weakly decreasing half-integer vectors (doubled-int
storage, tag "o" or "sp"):

    o:  lam_1 >= ... >= lam_{n-1} >= |lam_n|, all entries in one parity class;
    sp: integers with lam_1 >= ... >= lam_n >= 0.

One-step restriction lam > mu is decided by the existence of the
interleaving tuple nu from the GT rule; eliminating nu coordinatewise
leaves independent interval conditions, which is what branch_step
enumerates.  The bounded infinite-dimensional sp modules branch through
the o rule after the shift by (1, ..., 1); a second, directly transcribed
interleaving criterion is kept as an independent cross-check.
"""

from functools import lru_cache
from itertools import product

from .errors import (
    NotAdmissible,
    NotBounded,
    NotDominant,
    WidthPrecondition,
)


def is_admissible(c2, tag) -> bool:
    c2 = tuple(c2)
    if tag not in ("o", "sp"):
        raise NotAdmissible(f"unknown algebra tag {tag!r}")
    if not c2:
        return True
    if tag == "sp":
        if any(v % 2 for v in c2) or c2[-1] < 0:
            return False
        return all(c2[i] >= c2[i + 1] for i in range(len(c2) - 1))
    if len({v % 2 for v in c2}) > 1:
        return False
    if len(c2) == 1:
        return True
    head = all(c2[i] >= c2[i + 1] for i in range(len(c2) - 2))
    return head and c2[-2] >= abs(c2[-1])


def _require_admissible(c2, tag):
    if not is_admissible(c2, tag):
        raise NotAdmissible(f"{c2} is not an admissible {tag} tuple (doubled)")


def _range2(lo, hi, parity):
    """Doubled values of the given parity in [lo, hi]."""
    start = lo if lo % 2 == parity % 2 else lo + 1
    return range(start, hi + 1, 2)


def _branch_bounds(lam, tag, i, prev):
    """Bounds for mu[i] (0-based) given mu[i-1] = prev; eliminating nu from
    the GT chains leaves mu_k <= lam_k, mu_k >= lam_{k+2} (with |lam_n| when
    that index is the last entry), and for the last slot |mu| <= lam_{n-1}."""
    n = len(lam)
    if i < n - 2:
        hi = lam[i] if prev is None else min(lam[i], prev)
        lo = abs(lam[i + 2]) if i + 2 == n - 1 else lam[i + 2]
        return lo, hi, False
    cap = lam[n - 2] if prev is None else min(lam[n - 2], prev)
    if tag == "sp":
        return 0, cap, False
    return -cap, cap, True


def branch_step(c2, tag) -> frozenset:
    """All mu of width n-1 with lam > mu under the GT rule."""
    lam = tuple(c2)
    _require_admissible(lam, tag)
    n = len(lam)
    if n == 0:
        raise NotAdmissible("cannot branch the empty tuple")
    if n == 1:
        return frozenset({()})
    parity = lam[0] % 2
    out = set()

    def fill(prefix):
        i = len(prefix)
        if i == n - 1:
            out.add(tuple(prefix))
            return
        prev = prefix[-1] if prefix else None
        lo, hi, _ = _branch_bounds(lam, tag, i, prev)
        for v in _range2(lo, hi, parity):
            fill(prefix + [v])

    fill([])
    return frozenset(out)


def one_step(c2_big, c2_small, tag) -> bool:
    """Membership test lam > mu without enumerating the branch set."""
    lam, mu = tuple(c2_big), tuple(c2_small)
    n = len(lam)
    if len(mu) != n - 1 or n < 1:
        return False
    if not is_admissible(mu, tag) or not is_admissible(lam, tag):
        return False
    if mu and lam[0] % 2 != mu[0] % 2:
        return False
    prev = None
    for i, v in enumerate(mu):
        lo, hi, _ = _branch_bounds(lam, tag, i, prev)
        if not lo <= v <= hi:
            return False
        prev = v
    return True


@lru_cache(maxsize=None)
def _branch_cached(c2, tag):
    return branch_step(c2, tag)


def restricts_to(c2_big, c2_small, tag) -> bool:
    """Chain search lam = lam^0 > lam^1 > ... > mu over decreasing widths."""
    big, small = tuple(c2_big), tuple(c2_small)
    _require_admissible(big, tag)
    _require_admissible(small, tag)
    if len(big) < len(small):
        raise WidthPrecondition("first tuple must be at least as wide")
    frontier = {big}
    width = len(big)
    while width > len(small):
        frontier = {mu for lam in frontier for mu in _branch_cached(lam, tag)}
        width -= 1
        if not frontier:
            return False
    return small in frontier


def coordinatewise_criterion(c2_small, c2_big, tag) -> bool:
    """mu_k >= lam_k for k < #lam and mu_{#lam} >= |lam_{#lam}|.

    Valid once #mu >= 2 #lam; equals restricts_to(mu, lam) there.  Tuples
    in different parity classes never restrict to one another, so the
    criterion is false for them.
    """
    lam, mu = tuple(c2_small), tuple(c2_big)
    _require_admissible(lam, tag)
    _require_admissible(mu, tag)
    if len(mu) < 2 * len(lam):
        raise WidthPrecondition("criterion requires #mu >= 2 #lam")
    if lam and mu and lam[0] % 2 != mu[0] % 2:
        return False
    if not lam:
        return True
    k = len(lam)
    return all(mu[i] >= lam[i] for i in range(k - 1)) and mu[k - 1] >= abs(lam[k - 1])


def _mirror_representative(c2, tag):
    """The nonnegative-last representative of an o tuple's mirror orbit.

    The GT order only sees |lam_n| on both sides of a restriction, so the
    replacement operators act on representatives; acting on a negative
    last entry directly breaks their monotonicity against wider partners.
    """
    lam = tuple(c2)
    if tag == "o" and lam and lam[-1] < 0:
        return lam[:-1] + (-lam[-1],)
    return lam


def insert_right(c2, k, tag):
    """R(lam, k): replace the rightmost feasible entry by k."""
    _require_admissible(tuple(c2), tag)
    lam = _mirror_representative(c2, tag)
    if not lam:
        return lam
    k2 = k
    if lam[0] % 2 != k2 % 2:
        return lam
    if k2 < abs(lam[-1]):
        return lam
    n = len(lam)
    for j in range(n, 0, -1):
        if k2 < lam[j - 1]:
            continue
        if j > 1 and lam[j - 2] < k2:
            continue
        cand = lam[:j - 1] + (k2,) + lam[j:]
        if is_admissible(cand, tag):
            return cand
    return lam


def insert_left(c2, k, tag):
    """L(lam, k): replace the rightmost slot whose entry dominates k."""
    _require_admissible(tuple(c2), tag)
    lam = _mirror_representative(c2, tag)
    if not lam:
        return lam
    k2 = k
    if lam[0] % 2 != k2 % 2:
        return lam
    if len(lam) == 1:
        return (k2,) if 0 <= k2 <= lam[0] else lam
    if k2 > lam[0]:
        return lam
    n = len(lam)
    for j in range(n, 0, -1):
        if lam[j - 1] < k2:
            continue
        if j == n and tag == "o" and k2 < 0:
            continue
        cand = lam[:j - 1] + (k2,) + lam[j:]
        if is_admissible(cand, tag):
            return cand
    return lam


def is_bounded_hw_sp(c2) -> bool:
    """Highest weight of a bounded infinite-dimensional simple sp(2n)-module.

    Nonnegative integer gaps, half-integral last entry, and (for n >= 2)
    lam_{n-1} + lam_n >= -2.  The zero-gap case must be admitted: the
    Shale-Weil weights (-1/2, ..., -1/2) and (-1/2, ..., -3/2) are the
    basic bounded examples.
    """
    lam = tuple(c2)
    if not lam:
        return False
    if any((lam[i] - lam[i + 1]) % 2 or lam[i] < lam[i + 1] for i in range(len(lam) - 1)):
        return False
    if lam[-1] % 2 == 0:
        return False
    if len(lam) >= 2 and lam[-2] + lam[-1] < -4:
        return False
    return True


def is_finite_dimensional_sp(c2) -> bool:
    """Dominant integral test for sp(2n)."""
    lam = tuple(c2)
    return is_admissible(lam, "sp")


def bounded_branch_sp(c2) -> frozenset:
    """Simple sp(2n-2)-constituents of a bounded L(lam), via the o shift.

    Branch lam + (1,...,1) through the o rule and shift back; this is the
    branching correspondence between bounded sp modules and half-integral
    finite-dimensional o modules.
    """
    lam = tuple(c2)
    if not is_bounded_hw_sp(lam):
        raise NotBounded(f"{lam} fails the bounded highest-weight test (doubled)")
    shifted = tuple(v + 2 for v in lam)
    return frozenset(tuple(v - 2 for v in mu) for mu in branch_step(shifted, "o"))


def bounded_branch_sp_direct(c2) -> frozenset:
    """Same set by the half-integral interleaving criterion, transcribed.

    Independent of branch_step: candidate mu are enumerated from a crude
    box and each pair (lam, mu) is tested by the interval conditions of
    the doubled chains

        lam'_1 >= nu_1 >= lam'_2 >= ... >= lam'_{n-1} >= nu_{n-1}
                >= |lam'_n| >= nu_n >= 1/2,
        nu_1 >= mu'_1 >= nu_2 >= ... >= nu_{n-1} >= |mu'_{n-1}| >= nu_n,

    with lam' = lam + 1 and mu' = mu + 1.
    """
    lam = tuple(c2)
    if not is_bounded_hw_sp(lam):
        raise NotBounded(f"{lam} fails the bounded highest-weight test (doubled)")
    n = len(lam)
    lp = tuple(v + 2 for v in lam)
    if n == 1:
        return frozenset({()})

    def pair_ok(mp):
        # nu_i for i <= n-2: [max(lam'_{i+1}, mu'_i), min(lam'_i, mu'_{i-1})]
        for i in range(1, n - 1):
            lo = max(lp[i], mp[i - 1])
            hi = min(lp[i - 1], mp[i - 2] if i >= 2 else lp[0])
            if lo > hi:
                return False
        # nu_{n-1}: [max(|lam'_n|, |mu'_{n-1}|), min(lam'_{n-1}, mu'_{n-2})]
        lo = max(abs(lp[n - 1]), abs(mp[n - 2]))
        hi = min(lp[n - 2], mp[n - 3] if n >= 3 else lp[0])
        if lo > hi:
            return False
        # nu_n: [1/2, min(|lam'_n|, |mu'_{n-1}|)]
        if min(abs(lp[n - 1]), abs(mp[n - 2])) < 1:
            return False
        return True

    ranges = []
    for i in range(n - 2):
        lo = lp[i + 2] if i + 2 <= n - 2 else -abs(lp[n - 1]) - 2
        ranges.append(list(_range2(min(lo, lp[i]), lp[i], 1)))
    cap = lp[n - 2]
    ranges.append(list(_range2(-cap, cap, 1)))
    out = set()
    for mp in product(*ranges):
        if any(mp[i] < mp[i + 1] for i in range(n - 3)):
            continue
        if pair_ok(mp):
            mu = tuple(v - 2 for v in mp)
            out.add(mu)
    return frozenset(out)


def fundamental_coefficients(c2):
    """Coefficients v_i of lam = sum v_i w_i for dominant integral sp."""
    lam = tuple(c2)
    if not is_admissible(lam, "sp"):
        raise NotDominant(f"{lam} is not dominant integral for sp (doubled)")
    n = len(lam)
    v = [(lam[i] - lam[i + 1]) // 2 for i in range(n - 1)]
    v.append(lam[n - 1] // 2)
    return v


def tensor_T_set(c2, j) -> frozenset:
    """Shifts kappa = lam - sum d_i e_i entering the Shale-Weil tensor rule.

    d_i are nonnegative integers with even total, d_i <= v_i for i < n and
    0 <= d_n + [j = 1] <= 2 v_n + 1.
    """
    if j not in (0, 1):
        raise NotDominant("j must be 0 or 1")
    lam = tuple(c2)
    v = fundamental_coefficients(lam)
    n = len(lam)
    ranges = [range(0, vi + 1) for vi in v[:-1]]
    d_n_max = 2 * v[-1] + 1 - (1 if j == 1 else 0)
    ranges.append(range(0, d_n_max + 1))
    out = set()
    for d in product(*ranges):
        if sum(d) % 2 == 0:
            out.add(tuple(lam[i] - 2 * d[i] for i in range(n)))
    return frozenset(out)


def sw_weight(n, j):
    """Highest weight of SW+ (j = 0) or SW- (j = 1), doubled."""
    if j == 0:
        return tuple([-1] * n)
    return tuple([-1] * (n - 1) + [-3])


def tensor_decompose_sw(c2, j) -> frozenset:
    """Constituents of L(nu_j) (x) L(lam): {nu_j + kappa, kappa in T^j}."""
    lam = tuple(c2)
    shifts = tensor_T_set(lam, j)
    nu = sw_weight(len(lam), j)
    return frozenset(tuple(nu[i] + kappa[i] for i in range(len(lam))) for kappa in shifts)
