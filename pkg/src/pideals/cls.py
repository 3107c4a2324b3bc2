"""Coherent local systems in Zhilinskii normal form and their level sets.

A normal form encodes (L^inf_v L_{v+1}^{x_{v+1}} ... ) E^m [R]; a triple
(x, y, Z) maps onto it with v = x, the L exponent at v+i equal to the
i-th row of Z, m = floor(y) and the spinor factor marking half-integral
y.  The level-n weight set is the box

    lam_j <= B            for j <= v (free coordinates, caller bound),
    lam_{v+i} <= y + Z_i  otherwise  (y = m, or m + 1/2 with the spinor),

intersected with the dominant weights of the right parity:

    o          : lam_1 >= ... >= lam_{n-1} >= |lam_n|, |lam_n| <= bound_n;
    sp integral: lam_1 >= ... >= lam_n >= 0;
    sp spinor  : the o box of the same data shifted down by (1, ..., 1),
                 which lands exactly on the bounded highest weights.

The sp spinor case rides the o enumeration because the c.l.s.b. of
sp(infinity) correspond to c.l.s. of o(infinity) by adding (1, ..., 1)
at every level; keeping one code path makes that correspondence exact
by construction.
"""

from dataclasses import dataclass

from .branching import (
    bounded_branch_sp,
    branch_step,
    is_admissible,
)
from .errors import (
    BoundRequired,
    DomainError,
    NotAPartition,
    SpinorSquare,
)
from .halfint import fmt_half


@dataclass(frozen=True)
class Triple:
    """Parameter (x, y, Z): x >= 0, y a nonnegative half-integer (doubled),
    Z a partition given by its row lengths."""

    x: int
    y2: int
    z: tuple[int, ...] = ()

    def __post_init__(self):
        if self.x < 0 or self.y2 < 0:
            raise DomainError("x and y must be nonnegative")
        if any(r <= 0 for r in self.z):
            raise NotAPartition("Z rows must be positive")
        if any(self.z[i] < self.z[i + 1] for i in range(len(self.z) - 1)):
            raise NotAPartition("Z rows must be weakly decreasing")

    def display(self) -> dict:
        return {"x": self.x, "y": fmt_half(self.y2), "Z": list(self.z)}


@dataclass(frozen=True)
class ClsNormalForm:
    tag: str                                  # "o" or "sp"
    v: int = 0                                # L^inf subscript
    exponents: tuple[tuple[int, int], ...] = ()   # sorted (p, exp), p > v, exp > 0
    m: int = 0                                # E exponent
    spinor: bool = False                      # R factor
    e_infinity: bool = False                  # distinguished E^inf flag

    def __post_init__(self):
        if self.tag not in ("o", "sp"):
            raise DomainError(f"unknown algebra tag {self.tag!r}")
        if self.v < 0 or self.m < 0:
            raise DomainError("exponents must be nonnegative")
        seen = set()
        for p, e in self.exponents:
            if p <= self.v:
                raise DomainError("L subscripts must exceed v")
            if e <= 0:
                raise DomainError("L exponents must be positive")
            if p in seen:
                raise DomainError("duplicate L subscript")
            seen.add(p)
        if tuple(sorted(self.exponents)) != self.exponents:
            raise DomainError("exponents must be sorted by subscript")

    @classmethod
    def make(cls, tag, v=0, exponents=None, m=0, spinor=False, e_infinity=False):
        pairs = tuple(sorted((int(p), int(e)) for p, e in (exponents or {}).items() if e))
        return cls(tag, v, pairs, m, spinor, e_infinity)

    def exponent_map(self) -> dict[int, int]:
        return dict(self.exponents)

    def z_row(self, i: int) -> int:
        """Row length Z_i reconstructed from the L exponent at v + i."""
        return self.exponent_map().get(self.v + i, 0)

    def max_subscript(self) -> int:
        return max((p for p, _ in self.exponents), default=self.v)

    def y2(self) -> int:
        return 2 * self.m + (1 if self.spinor else 0)

    def as_json(self) -> dict:
        out = {
            "alg": self.tag,
            "v": self.v,
            "L": {str(p): e for p, e in self.exponents},
            "m": self.m,
            "R": self.spinor,
        }
        if self.e_infinity:
            out["Einf"] = True
        return out


def nf_from_triple(t: Triple, tag: str) -> ClsNormalForm:
    """(x, y, Z) -> (L^inf_x L_{x+1}^{Z_1} ...) E^{floor(y)} [R]."""
    spinor = t.y2 % 2 == 1
    m = t.y2 // 2
    exps = {t.x + i + 1: r for i, r in enumerate(t.z)}
    return ClsNormalForm.make(tag, v=t.x, exponents=exps, m=m, spinor=spinor)


def triple_from_nf(nf: ClsNormalForm) -> Triple:
    """Inverse of nf_from_triple; requires consecutive decreasing exponents."""
    rows = []
    i = 1
    emap = nf.exponent_map()
    while nf.v + i in emap:
        rows.append(emap[nf.v + i])
        i += 1
    if len(rows) != len(emap):
        raise NotAPartition("L subscripts are not consecutive above v")
    if any(rows[i] < rows[i + 1] for i in range(len(rows) - 1)):
        raise NotAPartition("L exponents do not form a partition")
    return Triple(nf.v, nf.y2(), tuple(rows))


def nf_product(a: ClsNormalForm, b: ClsNormalForm) -> ClsNormalForm:
    """Exponentwise product: v and m add, Z rows add positionally.

    The positional addition matches the triple picture (row lengths of
    the Z diagrams add); a pair of spinor factors has no product here.
    """
    if a.tag != b.tag:
        raise DomainError("cannot multiply systems over different algebras")
    if a.spinor and b.spinor:
        raise SpinorSquare("the square of the spinor factor is out of scope")
    if a.e_infinity or b.e_infinity:
        return ClsNormalForm.make(a.tag, e_infinity=True,
                                  spinor=a.spinor or b.spinor)
    rows_a = [a.z_row(i + 1) for i in range(max(0, a.max_subscript() - a.v))]
    rows_b = [b.z_row(i + 1) for i in range(max(0, b.max_subscript() - b.v))]
    depth = max(len(rows_a), len(rows_b))
    rows = [(rows_a[i] if i < len(rows_a) else 0) + (rows_b[i] if i < len(rows_b) else 0)
            for i in range(depth)]
    v = a.v + b.v
    exps = {v + i + 1: r for i, r in enumerate(rows) if r}
    return ClsNormalForm.make(a.tag, v=v, exponents=exps, m=a.m + b.m,
                              spinor=a.spinor or b.spinor)


def _upper_bounds2(nf: ClsNormalForm, n: int, bound) -> list[int]:
    """Doubled upper bounds u_1..u_n; free coordinates need the caller bound."""
    needs_bound = nf.e_infinity or nf.v > 0
    if needs_bound and bound is None:
        raise BoundRequired("free coordinates present; supply a bound")
    cap = None if bound is None else 2 * bound
    y2 = nf.y2()
    out = []
    for j in range(1, n + 1):
        if nf.e_infinity or j <= nf.v:
            u = cap
        else:
            u = y2 + 2 * nf.z_row(j - nf.v)
            if cap is not None:
                u = min(u, cap)
        out.append(u)
    return out


def _enumerate_o_box(u2: list[int], parity: int) -> frozenset:
    """o-dominant weights of the given parity inside the bound vector."""
    n = len(u2)
    out = set()
    if n == 0:
        return frozenset({()})

    def values_desc(lo, hi):
        if hi is None:
            raise BoundRequired("unbounded coordinate")
        start = hi if hi % 2 == parity else hi - 1
        return range(start, lo - 1, -2)

    def fill(prefix):
        j = len(prefix)
        if j == n - 1:
            cap = u2[n - 1] if not prefix else min(u2[n - 1], prefix[-1])
            if cap is None:
                raise BoundRequired("unbounded coordinate")
            for v in values_desc(-cap, cap):
                out.add(tuple(prefix) + (v,))
            return
        hi = u2[j] if not prefix else min(u2[j], prefix[-1])
        for v in values_desc(parity, hi):
            fill(prefix + [v])

    fill([])
    return frozenset(out)


def _enumerate_sp_box(u2: list[int]) -> frozenset:
    n = len(u2)
    out = set()
    if n == 0:
        return frozenset({()})

    def fill(prefix):
        j = len(prefix)
        if j == n:
            out.add(tuple(prefix))
            return
        hi = u2[j] if not prefix else min(u2[j], prefix[-1])
        if hi is None:
            raise BoundRequired("unbounded coordinate")
        for v in range(hi - hi % 2, -1, -2):
            fill(prefix + [v])

    fill([])
    return frozenset(out)


def level_set(nf: ClsNormalForm, n: int, bound=None) -> frozenset:
    """All highest weights (doubled tuples) at level n inside the bound.

    The bound caps the weights of the requested algebra; for the spinor
    side of sp this means the internal o enumeration runs at bound + 1,
    since those weights sit one unit higher before the shift.
    """
    if n < 1:
        raise DomainError("level must be at least 1")
    if nf.tag == "o":
        return _enumerate_o_box(_upper_bounds2(nf, n, bound), 1 if nf.spinor else 0)
    if not nf.spinor:
        return _enumerate_sp_box(_upper_bounds2(nf, n, bound))
    u2 = _upper_bounds2(nf, n, None if bound is None else bound + 1)
    shifted = _enumerate_o_box(u2, 1)
    return frozenset(tuple(v - 2 for v in lam) for lam in shifted)


def level_contains(nf: ClsNormalForm, c2) -> bool:
    """Membership predicate for a level set, usable without any bound.

    This is the primary representation of the (generally infinite) level
    sets; the enumerator is the bounded secondary view.
    """
    lam = tuple(c2)
    n = len(lam)
    if n < 1:
        raise DomainError("weights need at least one coordinate")
    if nf.tag == "sp" and nf.spinor:
        return level_contains(clsb_shift(nf), tuple(v + 2 for v in lam))
    parity = 1 if nf.spinor else 0
    if any(v % 2 != parity for v in lam):
        return False
    if nf.tag == "o":
        if any(lam[i] < lam[i + 1] for i in range(n - 2)):
            return False
        if n >= 2 and lam[n - 2] < abs(lam[n - 1]):
            return False
    else:
        if any(lam[i] < lam[i + 1] for i in range(n - 1)) or lam[-1] < 0:
            return False
    y2 = nf.y2()
    for j in range(1, n + 1):
        if nf.e_infinity or j <= nf.v:
            continue
        cap = y2 + 2 * nf.z_row(j - nf.v)
        value = abs(lam[j - 1]) if (nf.tag == "o" and j == n) else lam[j - 1]
        if value > cap:
            return False
    return True


def restrict_level(nf: ClsNormalForm, weights) -> frozenset:
    """One-step branch of a level set, dispatched by parity and tag."""
    out = set()
    for lam in weights:
        if nf.tag == "sp" and nf.spinor:
            out |= bounded_branch_sp(lam)
        else:
            out |= branch_step(lam, nf.tag)
    return frozenset(out)


def clsb_shift(nf: ClsNormalForm) -> ClsNormalForm:
    """Tag swap o <-> sp; weight level sets relate by adding (1, ..., 1)."""
    return ClsNormalForm(
        "o" if nf.tag == "sp" else "sp",
        nf.v, nf.exponents, nf.m, nf.spinor, nf.e_infinity)


@dataclass(frozen=True)
class PlsComplement:
    """The coherent system equivalent to the largest p.l.s. avoiding lam.

    Membership: mu belongs at its width iff mu_k < lam_k for some
    k <= min(#lam, #mu).  For widths below #lam the missing coordinates
    impose nothing, matching the union of the Q(k, lam_k).
    """

    lam: tuple[int, ...]
    tag: str

    def contains(self, mu) -> bool:
        mu = tuple(mu)
        if not is_admissible(mu, self.tag):
            raise DomainError(f"{mu} is not admissible for {self.tag}")
        k = min(len(self.lam), len(mu))
        if len(mu) < len(self.lam):
            return True
        return any(mu[i] < self.lam[i] for i in range(k))

    def enumerate(self, width: int, bound: int) -> frozenset:
        """Members of the level at the given width inside lam_1 <= bound."""
        u2 = [2 * bound] * width
        if self.tag == "sp":
            box = _enumerate_sp_box(u2)
        else:
            box = _enumerate_o_box(u2, self.lam[0] % 2 if self.lam else 0)
        return frozenset(mu for mu in box if self.contains(mu))


def pls_to_cls(lam, tag) -> PlsComplement:
    lam = tuple(lam)
    if not is_admissible(lam, tag):
        raise DomainError(f"{lam} is not admissible for {tag}")
    return PlsComplement(lam, tag)
