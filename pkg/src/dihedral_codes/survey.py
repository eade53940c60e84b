"""Survey of all abelian codes of F_q[C_{p^m} x C_2].

Under the admissibility hypothesis the abelian algebra is semisimple with
2(m+1) primitive idempotents, so every ideal is the span of a subset of
them; enumerating subsets enumerates all abelian codes.  This is what makes
the non-equivalence screening exhaustive without any bijection search.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations

import numpy as np

from .algebra import AlgebraElem, hat, is_idempotent, left_translate
from .codes import DEFAULT_BUDGET, BudgetExceededError, LinearCode, left_ideal_code
from .ff import InadmissibleParameters, PrimeField, check_admissible
from .groups import AbelianGroup, DihedralGroup


@dataclass(frozen=True)
class AbelianCatalog:
    """Primitive idempotents ((1 +/- t)/2) etil_j, j = 0..m, in bit order
    (plus_0, minus_0, plus_1, minus_1, ...)."""

    group: AbelianGroup
    field: PrimeField
    members: tuple[AlgebraElem, ...]
    dims: tuple[int, ...]

    def __len__(self):
        return len(self.members)


@dataclass(frozen=True)
class SurveyRow:
    """One ideal: bitmask over the catalog, dimension, exact minimum weight
    (None when the enumeration exceeded the budget)."""

    mask: int
    dim: int
    min_weight: int | None


def abelian_catalog(field: PrimeField, p: int, m: int) -> AbelianCatalog:
    """The 2(m+1) primitive idempotents of F_q[C_{p^m} x C_2], verified
    idempotent, pairwise orthogonal, and summing to 1."""
    if not check_admissible(field.q, p, m):
        raise InadmissibleParameters(f"(q, p, m) = ({field.q}, {p}, {m}) is not admissible")
    group = AbelianGroup(p, m)
    khats = [hat(field, group.subgroup_K(j)) for j in range(m + 1)]
    etil = [khats[0]] + [khats[j] - khats[j - 1] for j in range(1, m + 1)]
    one = AlgebraElem.one(group, field)
    t = AlgebraElem.from_group_elem(group.t, field)
    half = field.inv(2)
    tplus, tminus = (one + t) * half, (one - t) * half

    members = []
    for j in range(m + 1):
        members.append(tplus * etil[j])
        members.append(tminus * etil[j])

    total = AlgebraElem.zero(group, field)
    for x in members:
        if not is_idempotent(x):
            raise RuntimeError("abelian catalog member is not idempotent")
        total = total + x
    if total != one:
        raise RuntimeError("abelian catalog does not sum to 1")
    for x, y in combinations(members, 2):
        if not (x * y).is_zero():
            raise RuntimeError("abelian catalog members are not orthogonal")

    dims = tuple(left_ideal_code(x).k for x in members)
    return AbelianCatalog(group, field, tuple(members), dims)


def enumerate_abelian_codes(
    catalog: AbelianCatalog,
    dim_filter: int | None = None,
    budget: int = DEFAULT_BUDGET,
    backend: str | None = None,
) -> list[SurveyRow]:
    """One row per nonempty subset of primitive idempotents, in bitmask
    order.  Rows whose enumeration exceeds the budget get min_weight None
    rather than being skipped."""
    rows = []
    count = len(catalog.members)
    for mask in range(1, 1 << count):
        bits = [b for b in range(count) if mask >> b & 1]
        dim = sum(catalog.dims[b] for b in bits)
        if dim_filter is not None and dim != dim_filter:
            continue
        gen = catalog.members[bits[0]]
        for b in bits[1:]:
            gen = gen + catalog.members[b]
        code = left_ideal_code(gen)
        if code.k != dim:
            raise RuntimeError(
                f"survey row {mask}: rank {code.k} != sum of component dims {dim}"
            )
        try:
            weight = code.min_weight(budget=budget, backend=backend)
        except BudgetExceededError:
            weight = None
        rows.append(SurveyRow(mask, dim, weight))
    return rows


def format_survey_table(rows: list[SurveyRow], q: int, p: int, m: int) -> str:
    """Bit-exact export: header 'q p m', then 'bitmask dim weight' per row,
    bitmask ascending, '?' for unknown weights."""
    lines = [f"{q} {p} {m}"]
    for row in sorted(rows, key=lambda r: r.mask):
        w = "?" if row.min_weight is None else str(row.min_weight)
        lines.append(f"{row.mask} {row.dim} {w}")
    return "\n".join(lines) + "\n"


def write_survey_table(rows, q, p, m, path) -> None:
    with open(path, "w", encoding="ascii", newline="\n") as fh:
        fh.write(format_survey_table(rows, q, p, m))


def gamma_image_code(code: LinearCode, target: AbelianGroup | None = None) -> LinearCode:
    """Image of a dihedral-group code under the coordinate bijection.

    The bijection preserves the canonical index, so the matrix is reused
    verbatim; only the group the coordinates refer to changes."""
    if not isinstance(code.group, DihedralGroup):
        raise ValueError("gamma_image_code needs a code over a dihedral group")
    if target is None:
        target = AbelianGroup(code.group.p, code.group.m)
    if (target.p, target.m) != (code.group.p, code.group.m):
        raise ValueError("parameter mismatch between code group and target group")
    return LinearCode(code.generator_matrix, code.q, group=target, field=code.field)


def is_abelian_ideal(code: LinearCode) -> bool:
    """Closure of an abelian-group code under multiplication by a and t."""
    if not isinstance(code.group, AbelianGroup):
        raise ValueError("expected a code over the abelian group")
    for g in (code.group.a, code.group.t):
        for row in code.generator_matrix:
            x = AlgebraElem(code.group, code.field, row)
            if not code.contains(left_translate(g, x)):
                return False
    return True


def equivalence_necessary_check(
    code_a: LinearCode,
    code_b: LinearCode,
    budget: int = DEFAULT_BUDGET,
    backend: str | None = None,
) -> str:
    """'impossible' when length, dimension, or weight distribution rule out
    a combinatorial equivalence; 'possible' otherwise.  Never a proof of
    equivalence, only of its absence."""
    if code_a.n != code_b.n or code_a.k != code_b.k or code_a.q != code_b.q:
        return "impossible"
    da = code_a.weight_distribution(budget=budget, backend=backend)
    db = code_b.weight_distribution(budget=budget, backend=backend)
    return "possible" if np.array_equal(da, db) else "impossible"
