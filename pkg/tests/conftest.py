import pytest

from delpezzo import census


@pytest.fixture(scope="session")
def iib_run():
    """The full degree-2 type-IIb census, shared by the acceptance tests.

    test_mode cross-checks every fast anti-class effectiveness verdict
    against the general decider.
    """
    return census.run_type_iib_census(test_mode=True)
