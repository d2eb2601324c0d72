import pytest

from quandlekit.catalog import load_bundled_catalog


@pytest.fixture(scope="session")
def prim_catalog():
    records = load_bundled_catalog("primitive_desk.cat")
    for rec in records:
        rec.build_group()
    return records


@pytest.fixture(scope="session")
def qp_catalog():
    records = load_bundled_catalog("quasiprimitive_desk.cat")
    for rec in records:
        rec.build_group()
    return records
