import pytest

from gwci import fixture, make_frame


@pytest.fixture(scope="session")
def massey():
    return fixture("powers235_massey")


@pytest.fixture(scope="session")
def twisted():
    return fixture("twisted235")


@pytest.fixture(scope="session")
def small():
    return fixture("powers235_small")


@pytest.fixture(scope="session")
def plane():
    return fixture("gmonomial_plane")


@pytest.fixture(scope="session")
def herzog():
    return fixture("variables_xy")


@pytest.fixture(scope="session")
def frames():
    return {
        "powers": make_frame(["x", "y", "z"], "lex", ["x^2", "y^3", "z^5"]),
        "twisted": make_frame(["x", "y", "z"], "lex", ["x^2+y*z", "y^3", "z^5"]),
        "plane": make_frame(["x", "y"], "lex", ["x^2+y^2", "y^3"]),
        "vars": make_frame(["x", "y"], "lex", ["x", "y"]),
    }


ACCEPTANCE = {}


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE:
        return
    terminalreporter.section("acceptance criteria")
    for n in sorted(ACCEPTANCE):
        ok, detail = ACCEPTANCE[n]
        terminalreporter.write_line(f"criterion {n}: {'PASS' if ok else 'FAIL'}  {detail}")
