import random

import pytest

from pideals import weyl
from pideals.errors import InvariantViolation
from pideals.symbols import (
    Symbol,
    is_permutation_of,
    is_special,
    normalize_symbol,
    nu_partition,
    symbol_of_factored,
    symbol_of_w,
    trivial_symbol,
)
from pideals.tableaux import p_of_w
from pideals.weyl import integral_class_decomposition


def test_normalize_already_canonical():
    s = Symbol("C", 2, (0, 2), (1,))
    assert normalize_symbol(s) == s


def test_normalize_strips_shift_pairs():
    padded = Symbol("C", 1, (0, 2), (0,))   # shift image of ((1), ())
    assert normalize_symbol(padded) == Symbol("C", 1, (1,), ())


def test_normalize_d_sorts_rows():
    s = Symbol("D", 4, (1, 2), (0, 3))
    out = normalize_symbol(s)
    assert (out.top, out.bottom) == ((0, 3), (1, 2))


def test_symbol_sum_invariant_enforced():
    with pytest.raises(InvariantViolation):
        Symbol("C", 5, (0, 2), (1,))
    with pytest.raises(InvariantViolation):
        Symbol("D", 9, (1, 2), (0, 3))


def test_is_special_examples():
    assert is_special(Symbol("C", 1, (1,), ()))          # m = 0, vacuous
    assert is_special(Symbol("C", 2, (0, 2), (1,)))      # 0 <= 1 <= 2
    assert not is_special(Symbol("C", 6, (0, 3), (4,)))  # 4 > 3


def test_nu_partition_examples():
    assert nu_partition(Symbol("C", 1, (1,), ())).rows == (2,)
    padded = Symbol("C", 1, (0, 2), (0,))
    assert nu_partition(padded) == nu_partition(Symbol("C", 1, (1,), ()))


def test_nu_partition_sums_to_2n_on_random_symbols():
    rng = random.Random(13)
    produced = 0
    while produced < 100:
        m = rng.randint(0, 3)
        top = sorted(rng.sample(range(0, 9), m + 1))
        bottom = sorted(rng.sample(range(0, 9), m))
        n = sum(top) + sum(bottom) - m * m
        if n < 1:
            continue
        s = Symbol("C", n, tuple(top), tuple(bottom))
        assert nu_partition(s).size == 2 * n
        produced += 1


def test_symbol_of_w_identity_c1():
    s = symbol_of_w(weyl.identity("C", 1))
    assert (s.top, s.bottom) == ((0, 1), (1,))
    assert nu_partition(s).rows == (1, 1)


def test_symbol_of_w_longest_c1():
    w0 = weyl.make_signed_perm([1, -1], "C")
    s = symbol_of_w(w0)
    assert (s.top, s.bottom) == ((1,), ())


@pytest.mark.parametrize("gtype,n", [("C", 2), ("C", 3), ("D", 2), ("D", 3)])
def test_nu_of_symbol_round_trips_to_shape(gtype, n):
    for w in weyl.all_elements(gtype, n):
        s = symbol_of_w(w)
        assert nu_partition(s).rows == p_of_w(w).rows


def test_symbol_of_factored_single_integral_class():
    lam = ["1", "0"]
    decomp = integral_class_decomposition(lam, "C")
    w = weyl.make_signed_perm([2, 1, -1, -2], "C")
    first, second = symbol_of_factored(w, decomp)
    assert first == symbol_of_w(w)
    assert second == trivial_symbol("D")


def test_symbol_of_factored_single_half_integral_class():
    lam = ["1/2", "1/2"]
    decomp = integral_class_decomposition(lam, "C")
    w = weyl.make_signed_perm([2, 1, -1, -2], "D")  # even sign changes
    w = weyl.SignedPermutation(w.images, "C")
    first, second = symbol_of_factored(w, decomp)
    assert first == trivial_symbol("C")
    assert second.type_tag == "D"


def test_symbol_of_factored_mixed_identity():
    lam = ["1", "1/2"]
    decomp = integral_class_decomposition(lam, "C")
    w = weyl.identity("C", 2)
    first, second = symbol_of_factored(w, decomp)
    assert nu_partition(first).rows == (1, 1)
    assert nu_partition(second).rows == (1, 1)


@pytest.mark.parametrize("gtype,n", [("C", 2), ("D", 2), ("C", 3), ("D", 3)])
def test_every_symbol_has_a_special_permutation_realized_in_the_group(gtype, n):
    # Some w' in the group carries a special symbol whose entries form the
    # same multiset as Lambda(w).  (The shape of w' differs whenever
    # Lambda(w) itself is not special, since the symbol is determined by
    # the shape.)
    realized = [symbol_of_w(w) for w in weyl.all_elements(gtype, n)]
    for s in realized:
        assert any(is_special(t) and is_permutation_of(s, t) for t in realized), s


def test_nu_invariant_under_repeated_shift_padding():
    rng = random.Random(3)
    for w in rng.sample(weyl.all_elements("C", 3), 10):
        s = symbol_of_w(w)
        padded = s
        for _ in range(rng.randint(1, 3)):
            padded = Symbol(padded.type_tag, padded.n,
                            (0,) + tuple(v + 1 for v in padded.top),
                            (0,) + tuple(v + 1 for v in padded.bottom))
        assert nu_partition(padded) == nu_partition(s)
        assert normalize_symbol(padded) == normalize_symbol(s)
