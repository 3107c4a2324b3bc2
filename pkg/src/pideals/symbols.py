"""Two-row symbols of types C_n and D_n and their partition maps.

A C_n symbol has rows alpha (m+1 entries) and beta (m entries), strictly
increasing nonnegative, with sum n + m^2; a D_n symbol has two rows of m
entries summing to n + m(m-1).  nu_C merges {2a_i} with {2b_j + 1}, nu_D
merges {2a_i + 1} with {2b_i}, and subtracting j - 1 from the j-th merged
entry yields a partition of 2n.
"""

from dataclasses import dataclass

from .errors import DomainError, InvariantViolation, NotAPartition
from .tableaux import Partition, p_of_w
from .weyl import SignedPermutation


@dataclass(frozen=True)
class Symbol:
    type_tag: str  # "C" or "D"
    n: int
    top: tuple[int, ...]
    bottom: tuple[int, ...]

    def __post_init__(self):
        for row in (self.top, self.bottom):
            if any(v < 0 for v in row):
                raise DomainError("symbol entries must be nonnegative")
            if any(row[i] >= row[i + 1] for i in range(len(row) - 1)):
                raise DomainError("symbol rows must strictly increase")
        m = len(self.bottom)
        if self.type_tag == "C":
            if len(self.top) != m + 1:
                raise DomainError("C symbol needs top row one longer than bottom")
            if sum(self.top) + sum(self.bottom) != self.n + m * m:
                raise InvariantViolation("C symbol sum must be n + m^2")
        elif self.type_tag == "D":
            if len(self.top) != m:
                raise DomainError("D symbol needs equal-length rows")
            if sum(self.top) + sum(self.bottom) != self.n + m * (m - 1):
                raise InvariantViolation("D symbol sum must be n + m(m-1)")
        else:
            raise DomainError(f"unknown symbol type {self.type_tag!r}")

    @property
    def m(self) -> int:
        return len(self.bottom)

    def entries(self):
        """Merged entry multiset, used for the 'permutation of' relation."""
        return sorted(self.top + self.bottom)


def normalize_symbol(s: Symbol) -> Symbol:
    """Strip leading (0,0) pairs; for type D also sort the rows."""
    top, bottom = list(s.top), list(s.bottom)
    while top and bottom and top[0] == 0 and bottom[0] == 0:
        top = [v - 1 for v in top[1:]]
        bottom = [v - 1 for v in bottom[1:]]
    if s.type_tag == "D" and tuple(bottom) < tuple(top):
        top, bottom = bottom, top
    return Symbol(s.type_tag, s.n, tuple(top), tuple(bottom))


def is_special(s: Symbol) -> bool:
    """Interleaving test: a <= b <= a' chains (either order for type D)."""
    a, b, m = s.top, s.bottom, s.m
    if s.type_tag == "C":
        return all(a[i] <= b[i] <= a[i + 1] for i in range(m))
    asc_ba = all(b[i] <= a[i] for i in range(m)) and \
        all(a[i] <= b[i + 1] for i in range(m - 1))
    asc_ab = all(a[i] <= b[i] for i in range(m)) and \
        all(b[i] <= a[i + 1] for i in range(m - 1))
    return asc_ba or asc_ab


def nu_partition(s: Symbol) -> Partition:
    """The partition of 2n attached to a symbol.

    Parts are presented weakly decreasing with zero parts dropped, though
    the merge itself runs in increasing order.
    """
    if s.type_tag == "C":
        merged = sorted([2 * v for v in s.top] + [2 * v + 1 for v in s.bottom])
    else:
        merged = sorted([2 * v + 1 for v in s.top] + [2 * v for v in s.bottom])
    parts = [v - j for j, v in enumerate(merged)]
    if any(p < 0 for p in parts) or any(parts[i] > parts[i + 1] for i in range(len(parts) - 1)):
        raise NotAPartition("merged entries do not yield a partition")
    parts = tuple(p for p in reversed(parts) if p > 0)
    return Partition(parts)


def symbol_of_partition(p: Partition, group_type: str, n: int) -> Symbol:
    """Unique symbol whose nu-partition equals p (BV construction).

    Sorts the parts increasingly, pads with a zero to fix the count parity
    (odd for C, even for D), forms mu_i = q_i + i - 1, and splits by
    parity of mu: for C, alpha = even mu / 2 and beta = (odd mu - 1)/2;
    for D, alpha = (odd mu - 1)/2 and beta = even mu / 2.
    """
    q = sorted(p.rows)
    want_odd = group_type == "C"
    if len(q) % 2 != (1 if want_odd else 0):
        q = [0] + q
    mu = [qi + i for i, qi in enumerate(q)]
    evens = [v // 2 for v in mu if v % 2 == 0]
    odds = [(v - 1) // 2 for v in mu if v % 2 == 1]
    if group_type == "C":
        top, bottom = evens, odds
    else:
        top, bottom = odds, evens
    try:
        return Symbol(group_type, n, tuple(top), tuple(bottom))
    except DomainError as exc:
        raise NotAPartition(f"partition {p.rows} carries no {group_type} symbol") from exc


def symbol_of_w(w: SignedPermutation) -> Symbol:
    p = p_of_w(w)
    return symbol_of_partition(p, w.group_type, w.n)


def trivial_symbol(group_type: str) -> Symbol:
    """Symbol of the empty partition: ((0),()) for C, ((),()) for D."""
    if group_type == "C":
        return Symbol("C", 0, (0,), ())
    return Symbol("D", 0, (), ())


def symbol_of_factored(w: SignedPermutation, decomp):
    """Pair of symbols of the E_1 (C or D) and E_2 (D) factors of w.

    Type A factors carry no symbol and are skipped; an absent class
    contributes the trivial symbol of its factor type.
    """
    from .weyl import restrict_to_class

    first = None
    second = None
    for cl in decomp.classes:
        if cl.label == 1:
            first = (cl, cl.factor_type)
        elif cl.label == 2:
            second = (cl, "D")

    def factor_symbol(entry, default_type):
        if entry is None:
            return trivial_symbol(default_type)
        cl, ftype = entry
        u = restrict_to_class(w, cl, ftype)
        return symbol_of_w(u)

    first_type = "C" if decomp.group_type == "C" else "D"
    return (factor_symbol(first, first_type), factor_symbol(second, "D"))


def is_permutation_of(s1: Symbol, s2: Symbol) -> bool:
    """Multiset equality of the merged entry lists."""
    return s1.entries() == s2.entries()
