import random

import pytest

from muclass import QQ, ParamTriple, PrimeField, parse_poly

QUINTIC_A = "(t-1)^2"
QUINTIC_B = "t^5 - t^4 - t^2"
QUINTIC_C = "-t^5 + t^4 + t"


def quintic_triple(ctx=QQ):
    return ParamTriple(*(parse_poly(s, ctx) for s in (QUINTIC_A, QUINTIC_B, QUINTIC_C)))


def P(text, ctx=QQ):
    return parse_poly(text, ctx)


@pytest.fixture
def quintic():
    return quintic_triple()


@pytest.fixture
def F101():
    return PrimeField(101)


@pytest.fixture
def rng():
    return random.Random(20240601)


def pytest_terminal_summary(terminalreporter):
    module = __import__("sys").modules.get("test_acceptance")
    if module and module.RESULTS:
        terminalreporter.section("acceptance criteria")
        for line in module.RESULTS:
            terminalreporter.write_line(line)
