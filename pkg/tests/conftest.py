from __future__ import annotations

from contextlib import contextmanager
from importlib import resources

import pytest

from sympow import Ideal, parse_session

# (number, label, passed) rows filled in by test_acceptance.py
ACCEPTANCE: list = []


def pytest_addoption(parser):
    parser.addoption(
        "--expensive",
        action="store_true",
        default=False,
        help="also run the long certification items",
    )


def pytest_collection_modifyitems(config, items):
    if config.getoption("--expensive"):
        return
    skip = pytest.mark.skip(reason="needs --expensive")
    for item in items:
        if "expensive" in item.keywords:
            item.add_marker(skip)


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE:
        return
    terminalreporter.section("acceptance criteria")
    for num, label, ok in sorted(ACCEPTANCE):
        status = "PASS" if ok else "FAIL"
        terminalreporter.write_line(f"criterion {num} {status} - {label}")


@contextmanager
def criterion(num: int, label: str):
    """Record one acceptance criterion as a pass/fail summary line."""
    try:
        yield
    except BaseException:
        ACCEPTANCE.append((num, label, False))
        print(f"criterion {num} FAIL - {label}")
        raise
    ACCEPTANCE.append((num, label, True))
    print(f"criterion {num} PASS - {label}")


def load_session(name: str):
    text = (
        resources.files("sympow")
        .joinpath("sessions", f"{name}.sess")
        .read_text(encoding="utf-8")
    )
    return parse_session(text)


def session_ideal(name: str, which=None) -> Ideal:
    sess = load_session(name)
    key = which if which is not None else next(iter(sess.ideals))
    return Ideal(sess.ring, sess.ideals[key])


@pytest.fixture(scope="session")
def cycle5() -> Ideal:
    return session_ideal("cycle5")


@pytest.fixture(scope="session")
def star3() -> Ideal:
    return session_ideal("star3")


@pytest.fixture(scope="session")
def fermat3() -> Ideal:
    return session_ideal("fermat3")


@pytest.fixture(scope="session")
def minors2x3() -> Ideal:
    return session_ideal("minors2x3")


@pytest.fixture(scope="session")
def hankel5() -> Ideal:
    return session_ideal("hankel5")


@pytest.fixture(scope="session")
def mixed_heights() -> Ideal:
    return session_ideal("mixed-heights")


@pytest.fixture(scope="session")
def unmixed_not_gci() -> Ideal:
    return session_ideal("unmixed-not-gci")


@pytest.fixture(scope="session")
def minors3x4() -> Ideal:
    return session_ideal("minors3x4", "I")


@pytest.fixture(scope="session")
def defect1() -> Ideal:
    return session_ideal("defect1")
