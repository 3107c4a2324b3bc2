"""Partitions and the row-decreasing Robinson-Schensted insertion.

The tableau convention here has entries strictly decreasing along each
row and weakly decreasing down each column; entries may repeat across the
tableau.  Insertion of e into a row replaces the leftmost entry l <= e
(ties displace, never append) and bumps l into the next row; if no such
entry exists, e is appended and the recording tableau gains the label
n - s + 1 at step s.
"""

from dataclasses import dataclass

from .errors import DomainError, EmptyInput, NotAPartition
from .weyl import SignedPermutation


@dataclass(frozen=True)
class Partition:
    rows: tuple[int, ...]

    def __post_init__(self):
        if any(r <= 0 for r in self.rows):
            raise NotAPartition("parts must be positive")
        if any(self.rows[i] < self.rows[i + 1] for i in range(len(self.rows) - 1)):
            raise NotAPartition("parts must be weakly decreasing")

    @property
    def size(self) -> int:
        return sum(self.rows)

    def __len__(self) -> int:
        return len(self.rows)


@dataclass(frozen=True)
class Tableau:
    rows: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        shape(self)  # row lengths must form a partition
        for row in self.rows:
            if any(row[i] <= row[i + 1] for i in range(len(row) - 1)):
                raise DomainError("row entries must strictly decrease")
        for r in range(len(self.rows) - 1):
            upper, lower = self.rows[r], self.rows[r + 1]
            if any(lower[c] > upper[c] for c in range(len(lower))):
                raise DomainError("column entries must weakly decrease")

    def as_lists(self) -> list[list[int]]:
        return [list(r) for r in self.rows]


def shape(t: Tableau) -> Partition:
    lengths = tuple(len(r) for r in t.rows)
    return Partition(lengths)


def _insert_once(rows: list[list[int]], e: int):
    """One full bump cascade; returns (row, col) of the new box."""
    r = 0
    while True:
        if r == len(rows):
            rows.append([e])
            return r, 0
        row = rows[r]
        pos = next((c for c, l in enumerate(row) if l <= e), None)
        if pos is None:
            row.append(e)
            return r, len(row) - 1
        row[pos], e = e, row[pos]
        r += 1


def rs_insert_steps(seq):
    """All intermediate pairs (Y_s, Y'_s) for s = 1..n."""
    seq = list(seq)
    if not seq:
        raise EmptyInput("cannot insert an empty sequence")
    n = len(seq)
    rows: list[list[int]] = []
    rec: list[list[int]] = []
    steps = []
    for s, e in enumerate(seq, start=1):
        r, c = _insert_once(rows, e)
        if r == len(rec):
            rec.append([])
        rec[r].append(n - s + 1)
        assert len(rec[r]) - 1 == c
        steps.append((Tableau(tuple(tuple(x) for x in rows)),
                      Tableau(tuple(tuple(x) for x in rec))))
    return steps


def rs_insert_sequence(seq):
    """Insertion and recording tableaux of a sequence."""
    return rs_insert_steps(seq)[-1]


def _relabel_positive(values):
    """Order-preserving relabeling of distinct values onto 1..len."""
    order = {v: k + 1 for k, v in enumerate(sorted(set(values)))}
    if len(order) != len(values):
        raise DomainError("one-line sequence must have distinct values")
    return [order[v] for v in values]


def rs_of_permutation(w):
    """RS tableaux of the one-line word of a (signed) permutation.

    Signed permutations contribute the length-2n word
    (w(-n), ..., w(-1), w(1), ..., w(n)); negative values are relabeled
    monotonically onto 1..2n before insertion, which leaves the tableaux
    comparisons and shapes unchanged.
    """
    if isinstance(w, SignedPermutation):
        word = w.one_line()
    else:
        word = list(w)
    return rs_insert_sequence(_relabel_positive(word))


def p_of_w(w: SignedPermutation) -> Partition:
    """Row lengths of the insertion tableau, a partition of 2n."""
    insertion, _ = rs_of_permutation(w)
    return shape(insertion)


def longest_strictly_decreasing(seq) -> int:
    """Brute-force longest strictly decreasing subsequence (oracle)."""
    best = 0
    n = len(seq)
    stack = [(i, 1) for i in range(n)]
    # depth-first over subsequence extensions
    ext = [[j for j in range(i + 1, n) if seq[j] < seq[i]] for i in range(n)]
    while stack:
        i, length = stack.pop()
        best = max(best, length)
        for j in ext[i]:
            stack.append((j, length + 1))
    return best
