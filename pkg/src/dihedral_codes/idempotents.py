"""The idempotent catalog of F_q D for admissible (q, p, m).

Central primitive idempotents come from the subgroup chain of the rotation
subgroup; each nontrivial component carries a set of 2x2 matrix units, and
conjugating e11 by alpha = e11 + e12 + e22 produces the non-central
idempotent f = e11 - e12 whose left ideal is the interesting code.

All identities are re-verified exactly at construction time and failures
raise, so a wrong formula cannot propagate silently.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass

from .algebra import (
    AlgebraElem,
    hat,
    invert_in_component,
    is_central,
    is_idempotent,
)
from .ff import InadmissibleParameters, PrimeField, check_admissible
from .groups import DihedralGroup


@dataclass(frozen=True)
class CentralCatalog:
    """The complete set of primitive central idempotents of F_q D."""

    group: DihedralGroup
    field: PrimeField
    e0: AlgebraElem
    e11_0: AlgebraElem
    e22_0: AlgebraElem
    components: tuple[AlgebraElem, ...]  # components[j-1] is e_j

    def members(self) -> tuple[AlgebraElem, ...]:
        return (self.e11_0, self.e22_0) + self.components

    def component(self, j: int) -> AlgebraElem:
        if not 1 <= j <= len(self.components):
            raise ValueError(f"component index {j} out of range 1..{len(self.components)}")
        return self.components[j - 1]


@dataclass(frozen=True)
class MatrixUnits:
    """e11, e12, e21, e22 exhibiting one central component as 2x2 matrices."""

    j: int
    component: AlgebraElem
    e11: AlgebraElem
    e12: AlgebraElem
    e21: AlgebraElem
    e22: AlgebraElem

    def as_dict(self) -> dict[tuple[int, int], AlgebraElem]:
        return {(1, 1): self.e11, (1, 2): self.e12, (2, 1): self.e21, (2, 2): self.e22}


@dataclass(frozen=True)
class NonCentralGenerators:
    """f = e11 - e12 together with the conjugator alpha that produces it."""

    units: MatrixUnits
    f: AlgebraElem
    alpha: AlgebraElem
    alpha_inv: AlgebraElem


def _halves(group, field):
    one = AlgebraElem.one(group, field)
    b = AlgebraElem.from_group_elem(group.b, field)
    half = field.inv(2)
    return (one + b) * half, (one - b) * half


def central_idempotents(field: PrimeField, group: DihedralGroup) -> CentralCatalog:
    """Build and verify the catalog {e11_0, e22_0, e_1, ..., e_m}."""
    if not isinstance(group, DihedralGroup):
        raise TypeError("central_idempotents needs a dihedral group")
    if not check_admissible(field.q, group.p, group.m):
        raise InadmissibleParameters(
            f"(q, p, m) = ({field.q}, {group.p}, {group.m}) is not admissible"
        )
    hats = [hat(field, group.subgroup_H(j)) for j in range(group.m + 1)]
    e0 = hats[0]
    components = tuple(hats[j] - hats[j - 1] for j in range(1, group.m + 1))
    pplus, pminus = _halves(group, field)
    e11_0 = pplus * e0
    e22_0 = pminus * e0

    catalog = CentralCatalog(group, field, e0, e11_0, e22_0, components)
    members = catalog.members()
    total = AlgebraElem.zero(group, field)
    for x in members:
        if not is_idempotent(x):
            raise RuntimeError("central catalog member is not idempotent")
        if not is_central(x):
            raise RuntimeError("central catalog member is not central")
        total = total + x
    if total != AlgebraElem.one(group, field):
        raise RuntimeError("central catalog does not sum to 1")
    for x, y in itertools.combinations(members, 2):
        if not (x * y).is_zero():
            raise RuntimeError("central catalog members are not orthogonal")
    return catalog


def matrix_units(catalog: CentralCatalog, j: int) -> MatrixUnits:
    """The four matrix units of the component e_j, 1 <= j <= m."""
    e = catalog.component(j)
    group, field = catalog.group, catalog.field
    a = AlgebraElem.from_group_elem(group.a, field)
    a_inv = AlgebraElem.from_group_elem(group.a.inverse(), field)
    pplus, pminus = _halves(group, field)

    e11 = pplus * e
    e22 = pminus * e
    e12 = pplus * a * pminus * e
    u = (a - a_inv) * e
    u_inv = invert_in_component(u, e)  # cannot fail under admissibility
    e21 = 4 * (u_inv * u_inv) * pminus * a * pplus * e

    units = MatrixUnits(j, e, e11, e12, e21, e22)
    table = units.as_dict()
    zero = AlgebraElem.zero(group, field)
    for (i1, j1), (h1, k1) in itertools.product(table, repeat=2):
        expected = table[(i1, k1)] if j1 == h1 else zero
        if table[(i1, j1)] * table[(h1, k1)] != expected:
            raise RuntimeError(
                f"matrix-unit identity e{i1}{j1} e{h1}{k1} failed in component {j}"
            )
    if e11 + e22 != e:
        raise RuntimeError(f"e11 + e22 != e in component {j}")
    return units


def noncentral_generator(units: MatrixUnits) -> NonCentralGenerators:
    """f = e11 - e12 via conjugation by alpha, with all identities verified."""
    e11, e12, e22 = units.e11, units.e12, units.e22
    e = units.component
    group, field = e.group, e.field

    f = e11 - e12
    alpha = e11 + e12 + e22
    alpha_inv = e11 - e12 + e22

    if alpha * alpha_inv != e or alpha_inv * alpha != e:
        raise RuntimeError("alpha * alpha_inv != e")
    if alpha * e11 * alpha_inv != f:
        raise RuntimeError("conjugation of e11 by alpha does not give f")
    if not is_idempotent(f):
        raise RuntimeError("f is not idempotent")
    if is_central(f):
        raise RuntimeError("f is unexpectedly central")

    # closed form (1/4)[(2 - a + a^-1) + (2 + a - a^-1) b] e
    one = AlgebraElem.one(group, field)
    a = AlgebraElem.from_group_elem(group.a, field)
    a_inv = AlgebraElem.from_group_elem(group.a.inverse(), field)
    b = AlgebraElem.from_group_elem(group.b, field)
    quarter = field.inv(4)
    closed = quarter * ((2 * one - a + a_inv) + (2 * one + a - a_inv) * b) * e
    if closed != f:
        raise RuntimeError("closed form of f does not match e11 - e12")

    return NonCentralGenerators(units, f, alpha, alpha_inv)
