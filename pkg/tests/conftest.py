"""Shared fixtures: the three 96-word pairs are expensive enough to build
and canonicalize that the whole suite shares one copy."""

import pytest

from hampack import constructions


@pytest.fixture(scope="session")
def pair_linear():
    return constructions.packing96_linear()


@pytest.fixture(scope="session")
def pair_z2z4():
    return constructions.packing96_z2z4()


@pytest.fixture(scope="session")
def pair_propelinear():
    return constructions.packing96_propelinear()


@pytest.fixture(scope="session")
def all_pairs(pair_linear, pair_z2z4, pair_propelinear):
    return {"linear": pair_linear, "z2z4": pair_z2z4, "propelinear": pair_propelinear}
