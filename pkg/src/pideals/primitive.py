"""Classification layer: V(x, y, Z) weights, central characters, ideal
separation at finite rank, tableau equivalence and tau-moves, the window
extraction, and the dimension/degree formulas.

Separation is certificate-based: two triples are reported unequal only
when a level set within the tested (n, B) grid distinguishes them, and
"indistinguishable up to (n, B)" otherwise; equality is never claimed
outright.
"""

from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations_with_replacement

from .branching import is_admissible, is_bounded_hw_sp
from .cls import Triple, level_set, nf_from_triple
from .errors import (
    DomainError,
    GroupMismatch,
    IndexOutOfRange,
    NoQualifyingInterval,
    NotBounded,
    NotDivisible,
    NotDominant,
    RankTooSmall,
    WindowNotRegular,
)
from .tableaux import rs_insert_sequence, rs_of_permutation
from .weyl import SignedPermutation, Weight, integral_class_decomposition, restrict_to_class


def highest_weight_V(t: Triple, n: int, tag: str) -> Weight:
    """Highest weight of V(x, y, Z)(2n); {y} denotes the fractional part.

    o:  (n + {y}) on the first x slots, Z_i + y on the next s, then y;
    sp: (n - {y}) on the first x slots, then Z_i + y - 2{y}, then y - 2{y}.
    """
    s = len(t.z)
    if n < t.x + s:
        raise RankTooSmall(f"need n >= x + rows(Z) = {t.x + s}")
    frac2 = t.y2 % 2
    out = []
    for i in range(1, n + 1):
        if i <= t.x:
            out.append(2 * n + frac2 if tag == "o" else 2 * n - frac2)
        elif i <= t.x + s:
            row2 = 2 * t.z[i - t.x - 1]
            out.append(row2 + t.y2 if tag == "o" else row2 + t.y2 - 2 * frac2)
        else:
            out.append(t.y2 if tag == "o" else t.y2 - 2 * frac2)
    return Weight(n, tuple(out))


def central_character(c2, n: int | None = None) -> tuple[Fraction, ...]:
    """Casimir values g_1..g_n of the weight lam (doubled coordinates):

        g_s = (-1)^s sum_{i_1 >= ... >= i_s}
                prod_j ((lam_{i_j} + n - i_j + 1)^2 - (i_j - j + 1)^2),

    evaluated exactly in quarter-integer arithmetic.  Running the index
    multisets decreasingly makes each g_s a factorial-type symmetric
    polynomial in the squares (lam_i + n - i + 1)^2; the increasing order
    with the same inner constant is not symmetric and would break the
    invariance of central characters along dot orbits.
    """
    lam = tuple(c2)
    if n is None:
        n = len(lam)
    if n != len(lam):
        raise DomainError("rank must match the weight width")
    shifted = [Fraction(lam[i - 1], 2) + (n - i + 1) for i in range(1, n + 1)]
    values = []
    for s in range(1, n + 1):
        total = Fraction(0)
        for idx in combinations_with_replacement(range(1, n + 1), s):
            prod = Fraction(1)
            for j, i in enumerate(reversed(idx), start=1):
                prod *= shifted[i - 1] ** 2 - (i - j + 1) ** 2
            total += prod
        values.append(total if s % 2 == 0 else -total)
    return tuple(values)


def ideals_equal_at_level(t1: Triple, t2: Triple, n: int, bound: int, tag: str = "sp") -> bool:
    """Whether the two level sets coincide at level n within the bound."""
    if n < 1:
        raise RankTooSmall("level must be at least 1")
    s1 = level_set(nf_from_triple(t1, tag), n, bound)
    s2 = level_set(nf_from_triple(t2, tag), n, bound)
    return s1 == s2


def separate_triples(t1: Triple, t2: Triple, n_max: int, bound: int, tag: str = "sp"):
    """Search for a separating certificate; None means indistinguishable.

    A certificate names a level and a weight lying in exactly one of the
    two level sets; its existence proves the ideals differ, while absence
    within the grid proves nothing.
    """
    for n in range(1, n_max + 1):
        s1 = level_set(nf_from_triple(t1, tag), n, bound)
        s2 = level_set(nf_from_triple(t2, tag), n, bound)
        if s1 != s2:
            diff = sorted(s1 - s2) or sorted(s2 - s1)
            side = 1 if s1 - s2 else 2
            return {"n": n, "weight": diff[0], "only_in": side}
    return None


def weyl_equiv(w1: SignedPermutation, w2: SignedPermutation) -> bool:
    """Tableau criterion at integral regular parameters: Y(w1) = Y(w2)."""
    if w1.group_type != w2.group_type:
        raise GroupMismatch("elements belong to different groups")
    if w1.n != w2.n:
        raise GroupMismatch("elements have different ranks")
    return rs_of_permutation(w1)[0] == rs_of_permutation(w2)[0]


def weyl_equiv_factored(coords, w1: SignedPermutation, w2: SignedPermutation) -> bool:
    """Per-factor tableau equality for w in W_lambda, any integral classes."""
    if w1.group_type != w2.group_type or w1.n != w2.n:
        raise GroupMismatch("elements belong to different groups")
    decomp = integral_class_decomposition(coords, w1.group_type)
    for cl in decomp.classes:
        ftype = cl.factor_type if cl.factor_type in ("C", "D") else "C"
        u1 = restrict_to_class(w1, cl, ftype)
        u2 = restrict_to_class(w2, cl, ftype)
        if rs_of_permutation(u1)[0] != rs_of_permutation(u2)[0]:
            return False
    return True


def tau_move_conditions(w: SignedPermutation, i: int) -> tuple[int, ...]:
    """Which of the eight wall-crossing inequalities hold on v = w^{-1}.

    i is the printed negative index: the move is by the simple reflection
    in e_{-i} - e_{-i+1}.  Conditions 1-4 are Knuth moves on the word of
    w^{-1} (they preserve the insertion tableau of w^{-1} exactly); 5-8
    cross the sign wall and can change the insertion tableau while
    preserving the annihilator.
    """
    n = w.n
    if not -n + 1 <= i <= -1:
        raise IndexOutOfRange(f"i must lie in [{-n + 1}, -1]")
    v = w.inverse()
    hit = []
    if -n < i < -1:
        if v(i - 1) > v(i + 1) > v(i) > 0:
            hit.append(1)
        if v(i) > v(i + 1) > v(i - 1) > 0:
            hit.append(2)
        if v(i) > 0 and v(i - 1) < 0 and v(i - 1) > v(i + 1):
            hit.append(5)
        if v(i) < 0 and v(i - 1) > 0 and v(i + 1) > v(i):
            hit.append(6)
    if -n + 1 < i < 0:
        if v(i - 1) > v(i - 2) > v(i) > 0:
            hit.append(3)
        if v(i) > v(i - 2) > v(i - 1) > 0:
            hit.append(4)
    if -n + 1 < i < -1:
        if v(i) > 0 and v(i - 1) < 0 and v(i - 2) > v(i):
            hit.append(7)
        if v(i) < 0 and v(i - 1) > 0 and v(i - 2) > v(i - 1):
            hit.append(8)
    return tuple(sorted(hit))


def tau_move_applies(w: SignedPermutation, i: int) -> bool:
    """Disjunction of the eight displayed inequalities."""
    return bool(tau_move_conditions(w, i))


def tau_reflection(group_type: str, n: int, i: int) -> SignedPermutation:
    """The simple reflection s_{-i,-i+1} paired with the tau index i."""
    k = -i
    if not 1 <= k <= n - 1:
        raise IndexOutOfRange(f"i must lie in [{-n + 1}, -1]")
    img = list(range(1, n + 1))
    img[k - 1], img[k] = img[k], img[k - 1]
    return SignedPermutation(tuple(img), group_type)


@dataclass(frozen=True)
class WindowResult:
    k: int                      # erased prefix length
    window: tuple[int, ...]     # strictly decreasing positive entries
    r: int                      # rank parameter used
    f: int                      # window length floor((n - 3r/2)/(r+1)) - r/2


def extract_dominant_window(h, r: int) -> WindowResult:
    """Locate the leftmost long positive interval, straighten it by RS,
    and cut the dominant regular window.

    The sequence h has n - r/2 entries; qualifying intervals need at
    least ceil((n - 3r/2)/(r+1)) positive entries.  The interval is
    replaced by the rows of its insertion tableau read bottom-up in
    increasing length order, the first r/2 entries are dropped, and the
    first f(2n) = floor((n - 3r/2)/(r+1)) - r/2 survivors must be
    strictly decreasing and positive.
    """
    h = [int(x) for x in h]
    if r < 0 or r % 2:
        raise DomainError("r must be even and nonnegative")
    n = len(h) + r // 2
    num = 2 * n - 3 * r
    den = 2 * (r + 1)
    threshold = -((-num) // den)     # ceil
    f = num // den - r // 2          # floor, then the r/2 drop
    if f <= 0:
        raise NoQualifyingInterval("window length would be empty")

    intervals = []
    start = None
    for idx, val in enumerate(h + [0]):
        if val > 0 and start is None:
            start = idx
        elif val <= 0 and start is not None:
            intervals.append((start, idx))
            start = None
    chosen = next(((a, b) for a, b in intervals if b - a >= threshold), None)
    if chosen is None:
        raise NoQualifyingInterval(
            f"no positive interval of length >= {threshold}")
    a, b = chosen
    insertion, _ = rs_insert_sequence(h[a:b])
    straightened = [x for row in reversed(insertion.rows) for x in row]
    trimmed = straightened[r // 2:]
    window = tuple(trimmed[:f])
    if any(window[j] <= window[j + 1] for j in range(len(window) - 1)) or \
            any(x <= 0 for x in window):
        raise WindowNotRegular(
            "straightened interval is not strictly decreasing; the input "
            "does not satisfy the rank-r hypotheses")
    return WindowResult(k=a, window=window, r=r, f=f)


def weyl_dimension(c2, tag: str, n: int | None = None) -> int:
    """Weyl dimension formula over the fixed positive systems.

    o(2n): roots e_i +- e_j (i < j); sp(2n): the same plus 2 e_i.
    """
    lam = tuple(c2)
    if n is None:
        n = len(lam)
    if n != len(lam):
        raise DomainError("rank must match the weight width")
    if not is_admissible(lam, tag):
        raise NotDominant(f"{lam} is not dominant for {tag} (doubled)")
    if tag == "sp":
        rho2 = [2 * (n - i) for i in range(n)]
    else:
        rho2 = [2 * (n - 1 - i) for i in range(n)]
    l2 = [lam[i] + rho2[i] for i in range(n)]
    dim = Fraction(1)
    for i in range(n):
        for j in range(i + 1, n):
            dim *= Fraction(l2[i] - l2[j], rho2[i] - rho2[j])
            dim *= Fraction(l2[i] + l2[j], rho2[i] + rho2[j])
        if tag == "sp":
            dim *= Fraction(l2[i], rho2[i])
    if dim.denominator != 1 or dim <= 0:
        raise NotDominant(f"degenerate dominant weight {lam}")
    return int(dim)


def degree_of_bounded(c2, n: int | None = None) -> int:
    """deg L(lam) = dim L(lam + (1,...,1)) / 2^{n-1} for bounded sp weights."""
    lam = tuple(c2)
    if n is None:
        n = len(lam)
    if not is_bounded_hw_sp(lam):
        raise NotBounded(f"{lam} is not a bounded sp highest weight (doubled)")
    shifted = tuple(v + 2 for v in lam)
    dim = weyl_dimension(shifted, "o", n)
    q, rem = divmod(dim, 2 ** (n - 1))
    if rem:
        raise NotDivisible("degree formula produced a non-integer; this is a bug")
    return q
