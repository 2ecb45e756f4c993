"""pytest bridge: the ``results`` fixture turns recorded failures into test failures."""

import pytest

from harness import TestResults


class _PytestResults(TestResults):
    __test__ = False

    def add_fail(self, test_name, reason, notes=""):
        super().add_fail(test_name, reason, notes)
        pytest.fail(f"{test_name}: {reason} {notes}".strip(), pytrace=False)

    def add_skip(self, test_name, reason):
        super().add_skip(test_name, reason)
        pytest.skip(reason)


@pytest.fixture
def results() -> TestResults:
    return _PytestResults()
