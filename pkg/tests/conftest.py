import pytest

import pdpair.intmatrix as intmatrix


@pytest.fixture(autouse=True, scope="session")
def _verify_snf_postconditions():
    """Re-verify U*A*V = D on every transform-tracking SNF call in tests."""
    intmatrix.VERIFY = True
    yield
    intmatrix.VERIFY = False
