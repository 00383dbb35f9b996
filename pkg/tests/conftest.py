import os

import pytest
from hypothesis import settings

from borelseg.enumeration import borel_generator
from borelseg.polynomials import parse_polynomial

settings.register_profile("default", deadline=None, max_examples=60)
settings.load_profile(os.environ.get("HYPOTHESIS_PROFILE", "default"))

# (n, polynomial) instances whose complete ideal lists serve as fixtures
FIXTURE_CASES = (
    [(2, str(d)) for d in range(1, 9)]
    + [(3, str(d)) for d in range(1, 6)]
    + [(2, "z+1"), (2, "z+2"), (2, "2z+1"), (2, "2z+3"), (3, "3z+1"), (3, "3z"), (3, "2z+2"), (3, "4z-1")]
)


@pytest.fixture(scope="session")
def enumerated():
    """{(n, text): EnumerationResult} for the fixture cases."""
    return {(n, s): borel_generator(n, parse_polynomial(s)) for n, s in FIXTURE_CASES}


@pytest.fixture(scope="session")
def all_fixture_ideals(enumerated):
    out = []
    for (n, s), res in enumerated.items():
        for J in res.ideals:
            out.append((J, res.polynomial))
    return out


ACCEPTANCE_LINES = []


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.write_sep("=", "acceptance criteria")
        for line in sorted(ACCEPTANCE_LINES):
            terminalreporter.write_line(line)
