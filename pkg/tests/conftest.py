import pytest

from dihedral_codes import (
    DihedralGroup,
    PrimeField,
    central_idempotents,
    matrix_units,
    noncentral_generator,
)


@pytest.fixture(scope="session")
def field11():
    return PrimeField(11)


@pytest.fixture(scope="session")
def d9():
    return DihedralGroup(3, 2)


@pytest.fixture(scope="session")
def catalog(field11, d9):
    return central_idempotents(field11, d9)


@pytest.fixture(scope="session")
def units1(catalog):
    return matrix_units(catalog, 1)


@pytest.fixture(scope="session")
def units2(catalog):
    return matrix_units(catalog, 2)


@pytest.fixture(scope="session")
def gens1(units1):
    return noncentral_generator(units1)
