import pytest

from snarklab.constructions import petersen


@pytest.fixture(scope="session")
def pet():
    return petersen()


@pytest.fixture(scope="session")
def small_fixture():
    from snarklab.verify import load_fixture

    return load_fixture("cubic_bridgeless_le12.g6")


@pytest.fixture(scope="session")
def named_fixture():
    from snarklab.verify import load_fixture

    return load_fixture("named_le16.g6")
