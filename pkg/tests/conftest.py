from __future__ import annotations

import pytest

from finquot.groups import cyclic_group, diagonal_group, sanov_group
from finquot.profiler import ReductionBudget, reduction_scanner


@pytest.fixture(scope="session")
def sanov():
    return sanov_group(0)


@pytest.fixture(scope="session")
def sanov3():
    return sanov_group(3)


@pytest.fixture(scope="session")
def cyclic():
    return cyclic_group()


@pytest.fixture(scope="session")
def diagonal():
    return diagonal_group()


@pytest.fixture(scope="session")
def sanov_scanner(sanov):
    return reduction_scanner(sanov, ReductionBudget())


@pytest.fixture(scope="session")
def sanov3_scanner(sanov3):
    return reduction_scanner(sanov3, ReductionBudget())


@pytest.fixture(scope="session")
def cyclic_scanner(cyclic):
    return reduction_scanner(cyclic, ReductionBudget())
