import pytest

from atomspec.rings import mat, product, tri2, zmod

ZMOD_ORDERS = (4, 6, 8, 12, 30, 36, 60)


def make_zoo():
    return (
        [zmod(n) for n in ZMOD_ORDERS]
        + [tri2(2), tri2(3), mat(2, 2)]
        + [product(zmod(4), zmod(3)), product(zmod(2), zmod(2))]
    )


@pytest.fixture(scope="session")
def zoo():
    return make_zoo()


@pytest.fixture(scope="session")
def tri2_2():
    return tri2(2)


@pytest.fixture(scope="session")
def zmod12():
    return zmod(12)
