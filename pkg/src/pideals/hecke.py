"""Hecke algebras over Z[q^{1/2}, q^{-1/2}] and Kazhdan-Lusztig tables.

A CoxeterSystem interns the elements of a finite Coxeter group given by
its generators (signed permutations, plain permutations, or integer
reflection matrices built from a Coxeter matrix) and precomputes lengths,
canonical reduced words, generator multiplication tables and Bruhat
down-sets.

The canonical basis element attached to y is

    C_y = q^{-l(y)/2} * sum_{x <= y} P_{x,y}(q) T_x,

the unique bar-invariant element with P_{y,y} = 1, P in Z[q], and
deg P_{x,y} <= (l(y) - l(x) - 1)/2 for x < y.  The table is built by the
usual induction C_y = C_s C_{sy} - sum mu(z, sy) C_z over z < sy with
sz < z.  Tests pin the defining conditions rather than the construction.
"""

from functools import lru_cache

from .errors import DomainError, SystemMismatch, SystemTooLarge
from . import weyl as _weyl

MAX_GROUP_ORDER = 2048


class LaurentHalf:
    """Laurent polynomial in q^{1/2}; keys are exponents in half units."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs=None):
        self.coeffs = {e: c for e, c in (coeffs or {}).items() if c != 0}

    @classmethod
    def zero(cls):
        return cls()

    @classmethod
    def one(cls):
        return cls({0: 1})

    @classmethod
    def q_half(cls, half_exponent: int, coeff: int = 1):
        return cls({half_exponent: coeff})

    def __bool__(self):
        return bool(self.coeffs)

    def __eq__(self, other):
        return isinstance(other, LaurentHalf) and self.coeffs == other.coeffs

    def __hash__(self):
        return hash(frozenset(self.coeffs.items()))

    def __add__(self, other):
        out = dict(self.coeffs)
        for e, c in other.coeffs.items():
            out[e] = out.get(e, 0) + c
        return LaurentHalf(out)

    def __sub__(self, other):
        out = dict(self.coeffs)
        for e, c in other.coeffs.items():
            out[e] = out.get(e, 0) - c
        return LaurentHalf(out)

    def __neg__(self):
        return LaurentHalf({e: -c for e, c in self.coeffs.items()})

    def __mul__(self, other):
        if isinstance(other, int):
            return LaurentHalf({e: c * other for e, c in self.coeffs.items()})
        out = {}
        for e1, c1 in self.coeffs.items():
            for e2, c2 in other.coeffs.items():
                out[e1 + e2] = out.get(e1 + e2, 0) + c1 * c2
        return LaurentHalf(out)

    __rmul__ = __mul__

    def bar(self):
        """q^{1/2} -> q^{-1/2}."""
        return LaurentHalf({-e: c for e, c in self.coeffs.items()})

    def shift(self, half_exponent: int):
        return LaurentHalf({e + half_exponent: c for e, c in self.coeffs.items()})

    def is_q_polynomial(self) -> bool:
        return all(e >= 0 and e % 2 == 0 for e in self.coeffs)

    def q_poly(self) -> dict[int, int]:
        """As a polynomial in q; raises if not one."""
        if not self.is_q_polynomial():
            raise DomainError(f"not a polynomial in q: {self.coeffs}")
        return {e // 2: c for e, c in self.coeffs.items()}

    def q_degree(self):
        """Degree in q (may be half-integral, returned in half units)."""
        if not self.coeffs:
            return None
        return max(self.coeffs)

    def coefficient(self, half_exponent: int) -> int:
        return self.coeffs.get(half_exponent, 0)

    def pairs(self):
        return sorted(self.coeffs.items())

    def __repr__(self):
        return f"LaurentHalf({self.coeffs!r})"


def _tuple_matmul(a, b):
    k = len(a)
    return tuple(tuple(sum(a[i][t] * b[t][j] for t in range(k)) for j in range(k))
                 for i in range(k))


_CARTAN_OFFDIAG = {2: (0, 0), 3: (-1, -1), 4: (-1, -2), 6: (-1, -3)}


class CoxeterSystem:
    """Finite Coxeter group with interned elements and Hecke precomputations."""

    def __init__(self, generators, mul, identity_element, element_repr=None, name=""):
        self.mul = mul
        self.name = name
        self._repr = element_repr or (lambda x: x)
        table = {identity_element: (0, ())}
        level = [(identity_element, ())]
        while level:
            nxt = []
            for w, word in sorted(level, key=lambda p: p[1]):
                for gi, s in enumerate(generators):
                    ws = mul(w, s)
                    if ws not in table:
                        if len(table) >= MAX_GROUP_ORDER:
                            raise SystemTooLarge(
                                f"group exceeds desk scale ({MAX_GROUP_ORDER})")
                        table[ws] = (table[w][0] + 1, word + (gi,))
                        nxt.append((ws, word + (gi,)))
            level = nxt
        order = sorted(table, key=lambda w: table[w])
        self.elements = order
        self.index = {w: i for i, w in enumerate(order)}
        self.length = [table[w][0] for w in order]
        self.word = [table[w][1] for w in order]
        self.rank = len(generators)
        self.generators = [self.index[g] for g in generators]
        n = len(order)
        self.rmul = [[self.index[mul(order[i], generators[g])] for g in range(self.rank)]
                     for i in range(n)]
        self.lmul = [[self.index[mul(generators[g], order[i])] for g in range(self.rank)]
                     for i in range(n)]
        self._down = [None] * n
        self._bar_t = [None] * n
        self._cprime = None

    # -- constructors ---------------------------------------------------

    @classmethod
    def from_weyl(cls, group_type: str, n: int) -> "CoxeterSystem":
        gens = _weyl.simple_reflections(group_type, n)
        return cls(gens, lambda a, b: a * b, _weyl.identity(group_type, n),
                   element_repr=lambda w: w.one_line(),
                   name=f"{group_type}{n}")

    @classmethod
    def type_a(cls, rank: int) -> "CoxeterSystem":
        """Symmetric group S_{rank+1} with adjacent transpositions."""
        k = rank + 1
        ident = tuple(range(1, k + 1))
        gens = []
        for i in range(k - 1):
            img = list(ident)
            img[i], img[i + 1] = img[i + 1], img[i]
            gens.append(tuple(img))

        def mul(a, b):
            return tuple(a[b[i] - 1] for i in range(k))

        return cls(gens, mul, ident, element_repr=list, name=f"A{rank}")

    @classmethod
    def from_matrix(cls, matrix) -> "CoxeterSystem":
        """Integer reflection representation of a crystallographic matrix.

        Entries must lie in {1, 2, 3, 4, 6}; generator s sends the basis
        vector e_t to e_t - A[s][t] e_s for a compatible Cartan-like A.
        """
        k = len(matrix)
        for i in range(k):
            if matrix[i][i] != 1:
                raise DomainError("Coxeter matrix needs 1 on the diagonal")
            for j in range(k):
                if matrix[i][j] != matrix[j][i]:
                    raise DomainError("Coxeter matrix must be symmetric")
                if i != j and matrix[i][j] not in _CARTAN_OFFDIAG:
                    raise DomainError(
                        f"unsupported bond m={matrix[i][j]} (crystallographic only)")
        cartan = [[2 if i == j else 0 for j in range(k)] for i in range(k)]
        for i in range(k):
            for j in range(i + 1, k):
                a, b = _CARTAN_OFFDIAG[matrix[i][j]]
                cartan[i][j], cartan[j][i] = a, b
        gens = []
        for s in range(k):
            m = [[(1 if r == t else 0) - (cartan[s][t] if r == s else 0)
                  for t in range(k)] for r in range(k)]
            gens.append(tuple(tuple(row) for row in m))
        ident = tuple(tuple(1 if r == t else 0 for t in range(k)) for r in range(k))
        return cls(gens, _tuple_matmul, ident,
                   element_repr=lambda mtx: [list(r) for r in mtx],
                   name=f"matrix{k}")

    @classmethod
    def from_signed_generators(cls, gens, name="") -> "CoxeterSystem":
        """Reflection subgroup of a signed-permutation group."""
        if not gens:
            raise DomainError("need at least one generator")
        n = gens[0].n
        ident = _weyl.identity(gens[0].group_type, n)
        return cls(list(gens), lambda a, b: a * b, ident,
                   element_repr=lambda w: w.one_line(), name=name)

    # -- structure ------------------------------------------------------

    def __len__(self):
        return len(self.elements)

    def element_repr(self, i: int):
        return self._repr(self.elements[i])

    def generator_order(self, s: int, t: int) -> int:
        """Order of g_s g_t, i.e. the Coxeter matrix entry m_{s,t}."""
        if s == t:
            return 1
        cur, order = 0, 0
        while True:
            cur = self.rmul[self.rmul[cur][s]][t]
            order += 1
            if cur == 0:
                return order
            if order > 64:
                raise DomainError("generator product order exceeds bound")

    def down_set(self, i: int) -> frozenset:
        """Bruhat interval [e, y] via subwords of the canonical word of y."""
        if self._down[i] is None:
            reach = {0}
            for g in self.word[i]:
                reach |= {self.rmul[u][g] for u in reach}
            self._down[i] = frozenset(reach)
        return self._down[i]

    def bruhat_leq(self, i: int, j: int) -> bool:
        return i in self.down_set(j)

    # -- Hecke algebra ---------------------------------------------------

    def t_basis(self, i: int) -> dict:
        return {i: LaurentHalf.one()}

    def _check(self, elt: dict):
        for i in elt:
            if not 0 <= i < len(self.elements):
                raise SystemMismatch("element index outside this system")

    def lmul_gen(self, g: int, elt: dict) -> dict:
        """T_{s_g} * elt."""
        out: dict = {}
        q = LaurentHalf.q_half(2)
        qm1 = LaurentHalf({2: 1, 0: -1})
        for i, c in elt.items():
            j = self.lmul[i][g]
            if self.length[j] > self.length[i]:
                out[j] = out.get(j, LaurentHalf.zero()) + c
            else:
                out[i] = out.get(i, LaurentHalf.zero()) + qm1 * c
                out[j] = out.get(j, LaurentHalf.zero()) + q * c
        return {i: c for i, c in out.items() if c}

    def rmul_gen(self, elt: dict, g: int) -> dict:
        """elt * T_{s_g}."""
        out: dict = {}
        q = LaurentHalf.q_half(2)
        qm1 = LaurentHalf({2: 1, 0: -1})
        for i, c in elt.items():
            j = self.rmul[i][g]
            if self.length[j] > self.length[i]:
                out[j] = out.get(j, LaurentHalf.zero()) + c
            else:
                out[i] = out.get(i, LaurentHalf.zero()) + qm1 * c
                out[j] = out.get(j, LaurentHalf.zero()) + q * c
        return {i: c for i, c in out.items() if c}

    def rmul_gen_inverse(self, elt: dict, g: int) -> dict:
        """elt * T_{s_g}^{-1}, with T_s^{-1} = q^{-1} T_s + (q^{-1} - 1) T_e."""
        out: dict = {}
        qinv = LaurentHalf.q_half(-2)
        qinv_m1 = LaurentHalf({-2: 1, 0: -1})
        for i, c in elt.items():
            j = self.rmul[i][g]
            if self.length[j] < self.length[i]:
                out[j] = out.get(j, LaurentHalf.zero()) + c
            else:
                out[j] = out.get(j, LaurentHalf.zero()) + qinv * c
                out[i] = out.get(i, LaurentHalf.zero()) + qinv_m1 * c
        return {i: c for i, c in out.items() if c}

    def hecke_mul(self, a: dict, b: dict) -> dict:
        """Product in the T basis."""
        self._check(a)
        self._check(b)
        out: dict = {}
        for i, c in a.items():
            part = {j: c * cb for j, cb in b.items()}
            for g in reversed(self.word[i]):
                part = self.lmul_gen(g, part)
            for j, cj in part.items():
                out[j] = out.get(j, LaurentHalf.zero()) + cj
        return {i: c for i, c in out.items() if c}

    def bar_t(self, i: int) -> dict:
        """bar(T_w) = (T_{w^{-1}})^{-1}."""
        if self._bar_t[i] is None:
            x = {0: LaurentHalf.one()}
            for g in self.word[i]:
                x = self.rmul_gen_inverse(x, g)
            self._bar_t[i] = x
        return self._bar_t[i]

    def bar_involution(self, elt: dict) -> dict:
        self._check(elt)
        out: dict = {}
        for i, c in elt.items():
            cb = c.bar()
            for j, t in self.bar_t(i).items():
                out[j] = out.get(j, LaurentHalf.zero()) + cb * t
        return {i: c for i, c in out.items() if c}

    # -- Kazhdan-Lusztig --------------------------------------------------

    def cprime_basis(self):
        """Coefficient dicts of C_y in the T basis, for every y."""
        if self._cprime is not None:
            return self._cprime
        n = len(self.elements)
        cp: list[dict] = [None] * n
        cp[0] = {0: LaurentHalf.one()}
        for y in range(1, n):
            g = self.word[y][0]
            sy = self.lmul[y][g]
            base = cp[sy]
            d = self.lmul_gen(g, base)
            for j, c in base.items():
                d[j] = d.get(j, LaurentHalf.zero()) + c
            d = {j: c.shift(-1) for j, c in d.items() if c}
            # subtract mu(z, sy) C_z over z < sy with sz < z
            for z in list(base):
                if z == sy:
                    continue
                if self.length[self.lmul[z][g]] >= self.length[z]:
                    continue
                mu = base[z].coefficient(-self.length[z] - 1)
                if mu == 0:
                    continue
                for j, c in cp[z].items():
                    d[j] = d.get(j, LaurentHalf.zero()) - mu * c
            cp[y] = {j: c for j, c in d.items() if c}
        self._cprime = cp
        return cp

    def kl_polynomial(self, x: int, y: int) -> LaurentHalf:
        """P_{x,y} as a polynomial in q (zero when x is not below y)."""
        cp = self.cprime_basis()
        c = cp[y].get(x)
        if c is None:
            return LaurentHalf.zero()
        return c.shift(self.length[y])

    def kl_table(self) -> dict:
        """{(x, y): P_{x,y}} over all pairs with nonzero polynomial."""
        cp = self.cprime_basis()
        out = {}
        for y in range(len(self.elements)):
            for x, c in cp[y].items():
                out[(x, y)] = c.shift(self.length[y])
        return out


@lru_cache(maxsize=None)
def weyl_system(group_type: str, n: int) -> CoxeterSystem:
    return CoxeterSystem.from_weyl(group_type, n)


@lru_cache(maxsize=None)
def type_a_system(rank: int) -> CoxeterSystem:
    return CoxeterSystem.type_a(rank)


def half_spin_subgroup_system(n: int) -> CoxeterSystem:
    """Index-2 reflection subgroup of W(C_n) fixed by half-integral weights.

    Generators: the short simple reflections e_i - e_{i+1} together with
    the reflection in e_{n-1} + e_n; the subgroup consists of the elements
    with an even number of sign changes and is a Coxeter group of type D_n.
    """
    gens = _weyl.simple_reflections("C", n)[:-1]
    img = list(range(1, n + 1))
    img[n - 2], img[n - 1] = -n, -(n - 1)
    gens.append(_weyl.SignedPermutation(tuple(img), "C"))
    return CoxeterSystem.from_signed_generators(gens, name=f"C{n}-half-spin")


def d3_coxeter_matrix():
    """Abstract type D_3 Coxeter matrix: node 1 bonded to nodes 2 and 3."""
    return ((1, 3, 3), (3, 1, 2), (3, 2, 1))


def match_by_words(src: CoxeterSystem, dst: CoxeterSystem) -> list[int]:
    """Map each src element to dst by evaluating its canonical word."""
    if src.rank != dst.rank or len(src) != len(dst):
        raise SystemMismatch("systems are not identified generator-wise")
    out = []
    for i in range(len(src)):
        j = 0
        for g in src.word[i]:
            j = dst.rmul[j][g]
        out.append(j)
    return out
