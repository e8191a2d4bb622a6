import copy
import json

import pytest

from barlowlat.fixtures import load_fixtures, shipped_fixture_text


@pytest.fixture(scope="session")
def fix():
    return load_fixtures()


@pytest.fixture(scope="session")
def lat(fix):
    return fix.lattice


@pytest.fixture(scope="session")
def raw_fixture():
    return json.loads(shipped_fixture_text())


@pytest.fixture
def raw_copy(raw_fixture):
    return copy.deepcopy(raw_fixture)
