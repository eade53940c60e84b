"""Left ideals of a group algebra as linear codes: generator matrices in
reduced row echelon form, exact minimum weight and weight distribution by
exhaustive message enumeration, and the subgroup-pair construction with its
predicted basis.
"""

from __future__ import annotations

from math import comb

import numpy as np

from . import modmat
from ._kernels import weight_histogram
from .algebra import AlgebraElem, hat, left_translate
from .ff import PrimeField
from .groups import GroupElem

DEFAULT_BUDGET = 1 << 24


class BudgetExceededError(RuntimeError):
    """An exact enumeration would exceed the message budget."""

    def __init__(self, size: int, budget: int):
        super().__init__(
            f"enumeration too large: q^k = {size} exceeds budget {budget}"
        )
        self.size = size
        self.budget = budget


class LinearCode:
    """[n, k] linear code over F_q.

    The generator matrix is stored in reduced row echelon form with the
    leftmost-pivot convention, so equal codes have identical matrices.
    Minimum weight and weight distribution are computed lazily, exactly, and
    only within the enumeration budget.
    """

    def __init__(self, rows, q: int, group=None, field: PrimeField | None = None):
        R, pivots = modmat.rref(rows, q)
        R = np.ascontiguousarray(R)
        R.setflags(write=False)
        self.q = q
        self.generator_matrix = R
        self.pivots = tuple(pivots)
        self.n = R.shape[1]
        self.k = R.shape[0]
        self.group = group
        if group is not None and group.order != self.n:
            raise ValueError("group order does not match code length")
        self.field = field if field is not None else PrimeField(q)
        self._distribution: np.ndarray | None = None

    def __repr__(self):
        return f"LinearCode(n={self.n}, k={self.k}, q={self.q})"

    def size(self) -> int:
        return self.q ** self.k

    # -- enumeration -------------------------------------------------------
    def weight_distribution(
        self,
        budget: int = DEFAULT_BUDGET,
        backend: str | None = None,
        ranges: int = 1,
    ) -> np.ndarray:
        """Exact counts A_0..A_n over all q^k codewords.

        The budget only decides whether the scan runs; it never changes a
        computed value.  A full-space code needs no scan.
        """
        if self._distribution is not None:
            return self._distribution
        if self.k == self.n:
            # the whole space: A_w = C(n, w) (q-1)^w, no enumeration needed
            # (object dtype: the counts overflow int64 already for n = 50)
            hist = np.array(
                [comb(self.n, w) * (self.q - 1) ** w for w in range(self.n + 1)],
                dtype=object,
            )
        else:
            if self.size() > budget:
                raise BudgetExceededError(self.size(), budget)
            hist = weight_histogram(
                self.generator_matrix, self.q, ranges=ranges, backend=backend
            )
        if hist[0] != 1 or int(hist.sum()) != self.size():
            raise RuntimeError("weight distribution failed internal sanity check")
        hist.setflags(write=False)
        self._distribution = hist
        return hist

    def min_weight(
        self,
        budget: int = DEFAULT_BUDGET,
        backend: str | None = None,
        ranges: int = 1,
    ) -> int:
        """Smallest weight of a nonzero codeword, by exhaustive enumeration."""
        if self.k == 0:
            raise ValueError("empty code has no minimum weight")
        dist = self.weight_distribution(budget=budget, backend=backend, ranges=ranges)
        for w in range(1, self.n + 1):
            if dist[w]:
                return w
        raise RuntimeError("no nonzero codeword found in a k > 0 code")

    def codeword_iter(self, start: int = 0, stop: int | None = None):
        """Deterministic codeword stream in lexicographic message order.

        Disjoint [start, stop) ranges partition the message space, so scans
        may be distributed and merged without changing the result.
        """
        if stop is None:
            stop = self.size()
        if not 0 <= start <= stop <= self.size():
            raise ValueError("bad enumeration range")
        G = self.generator_matrix
        for r in range(start, stop):
            digits = np.zeros(self.k, dtype=np.int64)
            v = r
            for i in range(self.k - 1, -1, -1):
                digits[i] = v % self.q
                v //= self.q
            word = digits @ G % self.q if self.k else np.zeros(self.n, dtype=np.int64)
            if self.group is not None:
                yield AlgebraElem(self.group, self.field, word)
            else:
                yield word

    # -- membership and comparison -----------------------------------------
    def contains(self, x) -> bool:
        v = x.coeffs if isinstance(x, AlgebraElem) else np.asarray(x)
        return modmat.in_row_space(self.generator_matrix, list(self.pivots), v, self.q)

    def same_code(self, other: "LinearCode") -> bool:
        """Row-space equality via mutual rank checks."""
        if self.q != other.q or self.n != other.n:
            return False
        return modmat.same_row_space(self.generator_matrix, other.generator_matrix, self.q)

    def is_left_ideal(self) -> bool:
        """Closure of the row space under the left action of the group."""
        if self.group is None:
            raise ValueError("code carries no group")
        for g in self.group.generators():
            for row in self.generator_matrix:
                x = AlgebraElem(self.group, self.field, row)
                if not self.contains(left_translate(g, x)):
                    return False
        return True

    # -- serialization -------------------------------------------------------
    def to_text(self) -> str:
        """Bit-exact format: 'n k q' then k rows of residues."""
        lines = [f"{self.n} {self.k} {self.q}"]
        for row in self.generator_matrix:
            lines.append(" ".join(str(int(v)) for v in row))
        return "\n".join(lines) + "\n"

    def write(self, path) -> None:
        with open(path, "w", encoding="ascii", newline="\n") as fh:
            fh.write(self.to_text())

    @classmethod
    def from_text(cls, text: str, group=None) -> "LinearCode":
        lines = [ln for ln in text.split("\n") if ln.strip()]
        if not lines:
            raise ValueError("empty generator-matrix text")
        try:
            n, k, q = (int(t) for t in lines[0].split())
        except ValueError as exc:
            raise ValueError("bad generator-matrix header") from exc
        if len(lines) != 1 + k:
            raise ValueError(f"expected {k} matrix rows, found {len(lines) - 1}")
        rows = np.zeros((k, n), dtype=np.int64)
        for i, ln in enumerate(lines[1:]):
            vals = [int(t) for t in ln.split()]
            if len(vals) != n:
                raise ValueError(f"row {i} has {len(vals)} entries, expected {n}")
            rows[i] = vals
        return cls(rows, q, group=group)

    @classmethod
    def read(cls, path, group=None) -> "LinearCode":
        with open(path, "r", encoding="ascii") as fh:
            return cls.from_text(fh.read(), group=group)


def left_ideal_code(x: AlgebraElem) -> LinearCode:
    """The code spanned by all left translates {g x : g in G}."""
    if x.is_zero():
        raise ValueError("zero generator")
    n = x.group.order
    table = x.group.mult_table
    rows = np.zeros((n, n), dtype=np.int64)
    rows[np.arange(n)[:, None], table] = x.coeffs[None, :]
    return LinearCode(rows, x.field.q, group=x.group, field=x.field)


def _transversal(group, sub_indices: frozenset, pool) -> list[int]:
    """Coset representatives of a subgroup, greedy in canonical order."""
    table = group.mult_table
    reps: list[int] = []
    covered: set[int] = set()
    members = sorted(sub_indices)
    for g in pool:
        if g in covered:
            continue
        reps.append(g)
        covered.update(int(t) for t in table[g, members])
    return reps


def subgroup_pair_code(
    field: PrimeField, H: list[GroupElem], K: list[GroupElem]
) -> tuple[LinearCode, list[AlgebraElem]]:
    """Code of (F_q G)(H^ - K^) for nested subgroups H <= K, together with
    the predicted basis {r (1 - t) H^} over coset representatives r of K in
    G and t != 1 of H in K.  The basis is verified to span the code."""
    if not H or not K:
        raise ValueError("empty subgroup")
    group = H[0].group
    if any(g.group != group for g in H + K):
        raise ValueError("subgroups must live in one group")
    h_idx = frozenset(g.index for g in H)
    k_idx = frozenset(g.index for g in K)
    if not h_idx <= k_idx:
        raise ValueError("H is not contained in K")

    hat_H = hat(field, H)
    if h_idx == k_idx:
        code = LinearCode(
            np.zeros((1, group.order), dtype=np.int64),
            field.q,
            group=group,
            field=field,
        )
        return code, []
    hat_K = hat(field, K)
    code = left_ideal_code(hat_H - hat_K)

    reps = _transversal(group, k_idx, range(group.order))
    tau = _transversal(group, h_idx, sorted(k_idx))
    if tau[0] != 0:
        raise RuntimeError("transversal of H in K does not start at 1")
    basis = []
    for r in reps:
        r_elem = group.from_index(r)
        r_hat = left_translate(r_elem, hat_H)
        for t in tau[1:]:
            rt_elem = group.from_index(int(group.mult_table[r, t]))
            basis.append(r_hat - left_translate(rt_elem, hat_H))

    stacked = np.array([x.coeffs for x in basis], dtype=np.int64)
    if modmat.rank(stacked, field.q) != len(basis):
        raise RuntimeError("predicted basis is not linearly independent")
    if len(basis) != code.k or not modmat.same_row_space(
        stacked, code.generator_matrix, field.q
    ):
        raise RuntimeError("predicted basis does not span the code")
    return code, basis
