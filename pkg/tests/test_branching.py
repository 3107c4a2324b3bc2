import random
from itertools import product

import pytest

from pideals.branching import (
    bounded_branch_sp,
    bounded_branch_sp_direct,
    branch_step,
    coordinatewise_criterion,
    insert_left,
    insert_right,
    is_admissible,
    is_bounded_hw_sp,
    is_finite_dimensional_sp,
    one_step,
    restricts_to,
    sw_weight,
    tensor_T_set,
    tensor_decompose_sw,
)
from pideals.errors import NotAdmissible, NotBounded, WidthPrecondition

# tuples are doubled throughout: (2, 0) is the weight (1, 0)


def admissible_tuples(width, max_entry, tag):
    """All admissible doubled tuples of the width with |entries| <= max_entry."""
    out = []
    vals2 = range(-2 * max_entry, 2 * max_entry + 1)
    for parity in ((0,) if tag == "sp" else (0, 1)):
        for tup in product(*[range(-2 * max_entry + parity, 2 * max_entry + 1, 2)
                             for _ in range(width)]):
            if is_admissible(tup, tag):
                out.append(tup)
    return sorted(set(out))


def test_is_admissible_examples():
    assert is_admissible((4, 2, -2), "o")
    assert not is_admissible((4, 2, -2), "sp")
    assert is_admissible((), "o") and is_admissible((), "sp")


def test_branch_step_examples():
    assert branch_step((2, 0), "sp") == {(0,), (2,)}
    assert branch_step((2, 0), "o") == {(-2,), (0,), (2,)}


def test_branch_step_always_contains_truncation():
    rng = random.Random(17)
    for tag in ("o", "sp"):
        for lam in rng.sample(admissible_tuples(3, 3, tag), k=min(30, len(admissible_tuples(3, 3, tag)))):
            assert lam[:-1] in branch_step(lam, tag)


def test_branch_step_requires_admissible():
    with pytest.raises(NotAdmissible):
        branch_step((0, 2), "sp")


def test_restricts_to_examples():
    assert restricts_to((2, 0), (2, 0), "sp")      # empty chain
    assert restricts_to((2, 0), (2,), "sp")
    assert not restricts_to((2, 0, 0, 0), (4,), "sp")


def test_coordinatewise_criterion_examples():
    assert coordinatewise_criterion((2,), (2, 0), "sp")
    assert coordinatewise_criterion((4, 2), (6, 4, 4, 2), "sp")
    assert restricts_to((6, 4, 4, 2), (4, 2), "sp")
    assert not coordinatewise_criterion((4,), (2, 2), "sp")
    with pytest.raises(WidthPrecondition):
        coordinatewise_criterion((2, 0), (2, 0, 0), "sp")


@pytest.mark.parametrize("tag", ["sp", "o"])
def test_criterion_matches_chain_search_small_grid(tag):
    # entries <= 2 here; the full entries <= 4 sweep runs in acceptance
    for k in (1, 2):
        smalls = admissible_tuples(k, 2, tag)
        bigs = admissible_tuples(2 * k, 2, tag)
        for lam in smalls:
            for mu in bigs:
                assert coordinatewise_criterion(lam, mu, tag) == \
                    restricts_to(mu, lam, tag), (lam, mu, tag)


def test_one_step_membership_agrees_with_enumeration():
    rng = random.Random(23)
    for tag in ("o", "sp"):
        for lam in rng.sample(admissible_tuples(3, 2, tag), k=min(20, len(admissible_tuples(3, 2, tag)))):
            stepped = branch_step(lam, tag)
            for mu in admissible_tuples(2, 2, tag):
                assert one_step(lam, mu, tag) == (mu in stepped)


def test_insert_right_examples():
    assert insert_right((6, 2), 4, "sp") == (6, 4)      # R((3,1), 2) = (3,2)
    assert insert_left((6, 2), 4, "sp") == (4, 2)       # L((3,1), 2) = (2,1)
    assert insert_right((6, 2), 0, "sp") == (6, 2)      # k = |lam_n| - 1: identity


def test_insert_out_of_range_and_parity():
    assert insert_left((6, 2), 8, "sp") == (6, 2)       # k > lam_1
    assert insert_left((6, 2), -4, "sp") == (6, 2)      # no admissible slot
    assert insert_right((6, 2), 3, "sp") == (6, 2)      # parity mismatch
    # o tuples are handled through their mirror representative
    assert insert_left((5, -3), 1, "o") == (5, 1)
    assert insert_left((5, 1), -3, "o") == (5, 1)


def _one_step_pairs(width, max_entry, tag):
    for mu in admissible_tuples(width, max_entry, tag):
        for lam in branch_step(mu, tag):
            yield mu, lam


@pytest.mark.parametrize("tag", ["sp", "o"])
def test_r_and_l_monotone_small_grid(tag):
    # widths <= 2, entries <= 2, k in [-1, 3]; acceptance runs the full grid
    for width in (2,):
        for mu, lam in _one_step_pairs(width, 2, tag):
            for k2 in range(-2, 7):
                r_mu, r_lam = insert_right(mu, k2, tag), insert_right(lam, k2, tag)
                assert one_step(r_mu, r_lam, tag), ("R", mu, lam, k2)
                l_mu, l_lam = insert_left(mu, k2, tag), insert_left(lam, k2, tag)
                assert one_step(l_mu, l_lam, tag), ("L", mu, lam, k2)


def _at(tup, idx):  # 1-based with +-infinity sentinels
    if idx <= 0:
        return 10 ** 9
    if idx > len(tup):
        return -10 ** 9
    return tup[idx - 1]


def mixed_guard_holds(mu, lam, k2, tag):
    """(**) or (***) at the maximal i with lam_i >= k >= lam_{i+1}.

    i + 1 is the slot R picks, and the guard reads the mirror
    representatives, matching the insertion operators."""
    from pideals.branching import _mirror_representative

    mu = _mirror_representative(mu, tag)
    lam = _mirror_representative(lam, tag)
    for i in range(len(lam), -1, -1):
        if not _at(lam, i) >= k2 >= _at(lam, i + 1):
            continue
        if _at(mu, i + 1) >= k2 > _at(mu, i + 2):
            return True
        if _at(mu, i + 2) >= k2 >= _at(mu, i + 3):
            return True
        return False
    return False


@pytest.mark.parametrize("tag", ["sp", "o"])
def test_mixed_l_r_monotone_under_guard_small_grid(tag):
    for mu, lam in _one_step_pairs(2, 2, tag):
        for k2 in range(-2, 7):
            if (mu[0] - k2) % 2 != 0:
                continue
            if mixed_guard_holds(mu, lam, k2, tag):
                assert one_step(insert_left(mu, k2, tag),
                                insert_right(lam, k2, tag), tag), (mu, lam, k2)


def test_o_branch_sets_are_mirror_symmetric():
    rng = random.Random(31)
    for lam in rng.sample(admissible_tuples(3, 3, "o"), k=25):
        mirrored = lam[:-1] + (-lam[-1],)
        flipped = {mu[:-1] + (-mu[-1],) for mu in branch_step(lam, "o")}
        assert branch_step(mirrored, "o") == flipped == branch_step(lam, "o")


def test_sp_rule_is_the_restriction_of_the_o_rule():
    rng = random.Random(37)
    for lam in rng.sample(admissible_tuples(3, 3, "sp"), k=min(25, len(admissible_tuples(3, 3, 'sp')))):
        o_side = {mu for mu in branch_step(lam, "o") if is_admissible(mu, "sp")}
        assert branch_step(lam, "sp") == o_side


def test_bounded_predicate_examples():
    assert is_bounded_hw_sp((-1, -1))        # SW+
    assert is_bounded_hw_sp((-1, -3))        # SW-
    assert not is_bounded_hw_sp((0, 0))      # integral: clause (2) fails
    assert is_finite_dimensional_sp((0, 0))
    assert not is_bounded_hw_sp((-1, -5))    # lam_{n-1} + lam_n < -2


def test_bounded_branch_of_sw_plus_sp4():
    assert bounded_branch_sp((-1, -1)) == {(-1,), (-3,)}


def test_bounded_branch_requires_bounded():
    with pytest.raises(NotBounded):
        bounded_branch_sp((0, 0))


def random_bounded(rng, n, max_gap=4):
    last = rng.choice([-5, -3, -1, 1, 3, 5])
    lam = [last]
    for _ in range(n - 1):
        lam.append(lam[-1] + 2 * rng.randint(0, max_gap))
    lam = tuple(reversed(lam))
    return lam if is_bounded_hw_sp(lam) else None


def test_bounded_branch_routes_agree_on_random_weights():
    rng = random.Random(41)
    found = 0
    while found < 50:
        lam = random_bounded(rng, rng.choice([2, 3, 4]))
        if lam is None:
            continue
        assert bounded_branch_sp(lam) == bounded_branch_sp_direct(lam), lam
        found += 1


def test_bounded_branch_outputs_are_bounded():
    rng = random.Random(43)
    found = 0
    while found < 25:
        lam = random_bounded(rng, rng.choice([2, 3]))
        if lam is None:
            continue
        for mu in bounded_branch_sp(lam):
            assert is_bounded_hw_sp(mu) or is_finite_dimensional_sp(mu), (lam, mu)
        found += 1


def test_tensor_t_set_examples():
    assert tensor_T_set((0,), 0) == {(0,)}
    # sp(4), lam = w_1 = (1, 0): v = (1, 0); d_1 <= 1, d_2 <= 1, sum even
    got = tensor_T_set((2, 0), 0)
    assert got == {(2, 0), (0, -2)}


def test_tensor_decompose_examples():
    out = tensor_decompose_sw((0,), 0)
    assert sw_weight(1, 0) in out
    assert len(out) == len(tensor_T_set((0,), 0))


def test_tensor_constituents_are_bounded_or_finite_dimensional():
    for n in (2, 3):
        for v in product(range(3), repeat=n):
            lam = []
            acc = 0
            for vi in reversed(v):
                acc += vi
                lam.append(acc)
            lam = tuple(2 * x for x in reversed(lam))
            # rebuild: lam_i = sum_{j >= i} v_j
            for j in (0, 1):
                outs = tensor_decompose_sw(lam, j)
                assert len(outs) == len(tensor_T_set(lam, j))
                for out in outs:
                    assert is_bounded_hw_sp(out) or is_finite_dimensional_sp(out), (lam, j, out)


def _brute_branch(lam, tag):
    """Literal GT rule: enumerate the interleaver nu, then mu under it."""
    n = len(lam)
    parity = lam[0] % 2

    def rng(lo, hi):
        start = lo if lo % 2 == parity else lo + 1
        return range(start, hi + 1, 2)

    out = set()
    if tag == "sp":
        nu_ranges = [rng(lam[i + 1] if i + 1 < n else 0, lam[i]) for i in range(n)]
        for nu in product(*nu_ranges):
            if nu[-1] < 0:
                continue
            for mu in product(*[rng(nu[i + 1], nu[i]) for i in range(n - 1)]):
                if is_admissible(mu, tag):
                    out.add(mu)
    else:
        nu_ranges = [rng(abs(lam[i + 1]) if i + 1 == n - 1 else lam[i + 1], lam[i])
                     for i in range(n - 1)]
        for nu in product(*nu_ranges):
            heads = [rng(nu[i + 1], nu[i]) for i in range(n - 2)]
            last = rng(-nu[n - 2], nu[n - 2])
            for mu in product(*(heads + [last])):
                if is_admissible(mu, tag):
                    out.add(mu)
    return frozenset(out)


def test_branch_step_matches_literal_nu_enumeration():
    # the analytic interval elimination inside branch_step against the
    # rule transcribed verbatim with its interleaver
    rng = random.Random(61)
    for tag in ("sp", "o"):
        for _ in range(40):
            n = rng.choice([2, 3])
            parity = 0 if tag == "sp" else rng.choice([0, 1])
            lam = sorted([rng.randrange(parity, 9, 2) for _ in range(n)], reverse=True)
            if tag == "o" and rng.random() < 0.5:
                lam[-1] = -lam[-1]
            lam = tuple(lam)
            if not is_admissible(lam, tag):
                continue
            assert branch_step(lam, tag) == _brute_branch(lam, tag), (tag, lam)
