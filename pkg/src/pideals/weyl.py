"""Signed-permutation Weyl groups of types C_n and D_n.

Elements are bijections w of {-n..-1, 1..n} with w(-i) = -w(i), stored by
the image tuple (w(1), ..., w(n)).  Type D additionally requires an even
number of sign changes among w(1..n).  Simple reflections follow the fixed
simple-root lists: for C_n the transpositions e_i - e_{i+1} plus the sign
change 2e_n; for D_n the transpositions plus the reflection in
e_{n-1} + e_n.

Weights are coordinate vectors in (1/2)Z^n kept as doubled integers, and
w acts by (w.lam)_i = lam_{w^{-1}(i)} with lam_{-j} = -lam_j.

All values are immutable and every operation is pure; the group and
Bruhat memo tables are append-only caches, safe for read-mostly sharing.
"""

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

from .errors import (
    AntisymmetryViolated,
    DecompositionUnavailable,
    DomainError,
    GroupMismatch,
    NotABijection,
    OddSignChanges,
    RankMismatch,
)
from .halfint import fmt_half


@dataclass(frozen=True)
class Weight:
    """Vector of half-integers, stored doubled; implicit lam_{-i} = -lam_i."""

    n: int
    coords2: tuple[int, ...]

    def __post_init__(self):
        if len(self.coords2) != self.n:
            raise RankMismatch(f"expected {self.n} coordinates, got {len(self.coords2)}")

    @classmethod
    def of(cls, coords2) -> "Weight":
        coords2 = tuple(coords2)
        return cls(len(coords2), coords2)

    def is_homogeneous(self) -> bool:
        """All coordinates integral, or all strictly half-integral."""
        return len({c % 2 for c in self.coords2}) <= 1

    def display(self) -> list[str]:
        return [fmt_half(c) for c in self.coords2]

    def __add__(self, other: "Weight") -> "Weight":
        if self.n != other.n:
            raise RankMismatch("rank mismatch in weight addition")
        return Weight(self.n, tuple(a + b for a, b in zip(self.coords2, other.coords2)))

    def __sub__(self, other: "Weight") -> "Weight":
        if self.n != other.n:
            raise RankMismatch("rank mismatch in weight subtraction")
        return Weight(self.n, tuple(a - b for a, b in zip(self.coords2, other.coords2)))

    def __neg__(self) -> "Weight":
        return Weight(self.n, tuple(-a for a in self.coords2))


@dataclass(frozen=True)
class SignedPermutation:
    """Element of W(C_n) or W(D_n) stored by the images of 1..n."""

    images: tuple[int, ...]
    group_type: str  # "C" or "D"

    @property
    def n(self) -> int:
        return len(self.images)

    def __call__(self, i: int) -> int:
        if i > 0:
            return self.images[i - 1]
        return -self.images[-i - 1]

    def sign_changes(self) -> int:
        return sum(1 for v in self.images if v < 0)

    def one_line(self) -> list[int]:
        """(w(-n), ..., w(-1), w(1), ..., w(n))."""
        return [-v for v in reversed(self.images)] + list(self.images)

    def inverse(self) -> "SignedPermutation":
        inv = [0] * self.n
        for i, v in enumerate(self.images, start=1):
            if v > 0:
                inv[v - 1] = i
            else:
                inv[-v - 1] = -i
        return SignedPermutation(tuple(inv), self.group_type)

    def __mul__(self, other: "SignedPermutation") -> "SignedPermutation":
        """Composition (self*other)(i) = self(other(i))."""
        if self.n != other.n:
            raise RankMismatch("rank mismatch in product")
        return SignedPermutation(
            tuple(self(other(i)) for i in range(1, self.n + 1)), self.group_type)

    def act(self, lam: Weight) -> Weight:
        """Natural action: (w.lam)_i = lam_{w^{-1}(i)}."""
        if lam.n != self.n:
            raise RankMismatch("weight rank does not match group rank")
        inv = self.inverse()
        out = []
        for i in range(1, self.n + 1):
            j = inv(i)
            out.append(lam.coords2[j - 1] if j > 0 else -lam.coords2[-j - 1])
        return Weight(self.n, tuple(out))


def identity(group_type: str, n: int) -> SignedPermutation:
    return SignedPermutation(tuple(range(1, n + 1)), group_type)


def make_signed_perm(one_line, group_type: str) -> SignedPermutation:
    """Validate a full one-line list (w(-n)..w(-1), w(1)..w(n))."""
    if group_type not in ("C", "D"):
        raise DomainError(f"unknown group type {group_type!r}")
    one_line = [int(v) for v in one_line]
    if len(one_line) % 2 != 0 or not one_line:
        raise NotABijection("one-line form must list 2n nonzero values")
    n = len(one_line) // 2
    if 0 in one_line or sorted(abs(v) for v in one_line) != sorted(list(range(1, n + 1)) * 2):
        raise NotABijection(f"values must be a signed arrangement of 1..{n}")
    neg, pos = one_line[:n], one_line[n:]
    if len({abs(v) for v in pos}) != n:
        raise NotABijection("positive half must hit each letter once")
    for k in range(n):
        if neg[n - 1 - k] != -pos[k]:
            raise AntisymmetryViolated(f"w(-{k + 1}) != -w({k + 1})")
    w = SignedPermutation(tuple(pos), group_type)
    if group_type == "D" and w.sign_changes() % 2 != 0:
        raise OddSignChanges("type D requires an even number of sign changes")
    return w


def simple_reflections(group_type: str, n: int) -> list[SignedPermutation]:
    gens = []
    for i in range(1, n):
        img = list(range(1, n + 1))
        img[i - 1], img[i] = img[i], img[i - 1]
        gens.append(SignedPermutation(tuple(img), group_type))
    img = list(range(1, n + 1))
    if group_type == "C":
        img[n - 1] = -n
    else:
        if n < 2:
            raise DomainError("type D needs rank >= 2")
        img[n - 2], img[n - 1] = -n, -(n - 1)
    gens.append(SignedPermutation(tuple(img), group_type))
    return gens


def rho(group_type: str, n: int) -> Weight:
    """Half sum of positive roots: (n, ..., 1) for C_n; (n-1, ..., 0) for D_n."""
    if group_type == "C":
        return Weight(n, tuple(2 * (n - i) for i in range(n)))
    return Weight(n, tuple(2 * (n - 1 - i) for i in range(n)))


@lru_cache(maxsize=None)
def enumerate_group(group_type: str, n: int):
    """BFS over the group; returns {w: (length, canonical reduced word)}.

    The canonical word is the lexicographically least reduced word, found
    by expanding generators in index order level by level; BFS depth is
    the Coxeter length in the declared generators.
    """
    gens = simple_reflections(group_type, n)
    e = identity(group_type, n)
    table = {e: (0, ())}
    level = [(e, ())]
    while level:
        nxt = []
        for w, word in sorted(level, key=lambda p: p[1]):
            for gi, s in enumerate(gens):
                ws = w * s
                if ws not in table:
                    table[ws] = (table[w][0] + 1, word + (gi,))
                    nxt.append((ws, word + (gi,)))
        level = nxt
    return table


def all_elements(group_type: str, n: int) -> list[SignedPermutation]:
    table = enumerate_group(group_type, n)
    return sorted(table, key=lambda w: (table[w][0], table[w][1]))


def bruhat_length(w: SignedPermutation) -> int:
    table = enumerate_group(w.group_type, w.n)
    if w not in table:
        raise DomainError("element does not belong to its declared group")
    return table[w][0]


def reduced_word(w: SignedPermutation) -> tuple[int, ...]:
    return enumerate_group(w.group_type, w.n)[w][1]


@lru_cache(maxsize=None)
def _down_set(w: SignedPermutation) -> frozenset:
    """All products of subwords of the stored reduced word of w."""
    gens = simple_reflections(w.group_type, w.n)
    reach = {identity(w.group_type, w.n)}
    for gi in reduced_word(w):
        reach |= {u * gens[gi] for u in reach}
    return frozenset(reach)


def bruhat_leq(x: SignedPermutation, y: SignedPermutation) -> bool:
    if x.group_type != y.group_type:
        raise GroupMismatch("cannot compare across group types")
    if x.n != y.n:
        raise RankMismatch("rank mismatch in Bruhat comparison")
    return x in _down_set(y)


def dot_action(w: SignedPermutation, lam: Weight, rho_g: Weight) -> Weight:
    """w . lam = w(lam + rho) - rho."""
    if lam.n != w.n or rho_g.n != w.n:
        raise RankMismatch("weight rank does not match group rank")
    return w.act(lam + rho_g) - rho_g


@dataclass(frozen=True)
class ClassFactor:
    label: int                # 1 = integral, 2 = half-integral, 3.. = the rest
    indices: tuple[int, ...]  # positive indices; membership of -i is implied
    factor_type: str          # "C", "D" or "A"


@dataclass(frozen=True)
class IntegralClassDecomposition:
    n: int
    group_type: str
    classes: tuple[ClassFactor, ...]

    def class_of(self, i: int) -> ClassFactor | None:
        for cl in self.classes:
            if abs(i) in cl.indices:
                return cl
        return None


def integral_class_decomposition(coords, group_type: str) -> IntegralClassDecomposition:
    """Split indices by lam_i - lam_j in Z, identifying i with -i.

    E_1 holds integral coordinates and E_2 half-integral ones; every other
    class pairs a residue c mod 1 with -c (so that -i always accompanies
    i).  Factor types: for sp (a type C group) E_1 is a C factor and E_2 a
    D factor; for o both are D factors; all remaining classes are type A.

    Accepts a Weight or any sequence parseable as rationals, since classes
    beyond E_1/E_2 live outside the half-integer lattice.
    """
    if isinstance(coords, Weight):
        values = [Fraction(c, 2) for c in coords.coords2]
    else:
        values = [Fraction(str(c)) for c in coords]
    n = len(values)
    buckets: dict[object, list[int]] = {}
    for i, v in enumerate(values, start=1):
        r = v % 1
        key = min(r, (1 - r) % 1)
        buckets.setdefault(key, []).append(i)
    classes = []
    if Fraction(0) in buckets:
        classes.append(ClassFactor(1, tuple(buckets.pop(Fraction(0))),
                                   "C" if group_type == "C" else "D"))
    if Fraction(1, 2) in buckets:
        classes.append(ClassFactor(2, tuple(buckets.pop(Fraction(1, 2))), "D"))
    label = 3
    for key in sorted(buckets, key=lambda k: min(buckets[k])):
        classes.append(ClassFactor(label, tuple(buckets[key]), "A"))
        label += 1
    return IntegralClassDecomposition(n, group_type, tuple(classes))


def split_by_classes(w: SignedPermutation, decomp: IntegralClassDecomposition):
    """Factor w = w_1 w_2 ... with w_k supported on class E_k.

    Raises DecompositionUnavailable when w does not preserve the classes.
    """
    if w.n != decomp.n:
        raise RankMismatch("rank mismatch in class split")
    factors = []
    covered = set()
    for cl in decomp.classes:
        covered |= set(cl.indices)
        img = list(range(1, w.n + 1))
        for i in cl.indices:
            v = w(i)
            if abs(v) not in cl.indices:
                raise DecompositionUnavailable(f"w moves index {i} out of its class")
            img[i - 1] = v
        factors.append(SignedPermutation(tuple(img), w.group_type))
    for i in range(1, w.n + 1):
        if i not in covered and w(i) != i:
            raise DecompositionUnavailable(f"w moves unclassified index {i}")
    return factors


def restrict_to_class(w: SignedPermutation, cl: ClassFactor, factor_type: str) -> SignedPermutation:
    """Relabel the action of w on a class onto ranks 1..k, keeping signs."""
    order = {i: a + 1 for a, i in enumerate(sorted(cl.indices))}
    img = []
    for i in sorted(cl.indices):
        v = w(i)
        if abs(v) not in order:
            raise DecompositionUnavailable(f"w moves index {i} out of class E_{cl.label}")
        img.append(order[abs(v)] if v > 0 else -order[abs(v)])
    u = SignedPermutation(tuple(img), factor_type)
    if factor_type == "D" and u.sign_changes() % 2 != 0:
        raise DecompositionUnavailable(
            f"restriction to E_{cl.label} has odd sign changes; not in the D factor")
    return u
