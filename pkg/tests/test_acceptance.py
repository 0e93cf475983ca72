"""The release gate: every headline criterion must pass exactly."""

import pytest

from curveloops.acceptance import CRITERIA


@pytest.mark.parametrize("name,criterion", CRITERIA, ids=[n for n, _ in CRITERIA])
def test_criterion(name, criterion):
    criterion()
