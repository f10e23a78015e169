import json
from pathlib import Path

import pytest
from hypothesis import settings

settings.register_profile("default", deadline=None, max_examples=60, derandomize=True)
settings.load_profile("default")

CATALOG = Path(__file__).resolve().parents[1] / "src" / "ml2" / "catalog"


def load_catalog(name):
    return json.loads((CATALOG / name).read_text())


@pytest.fixture
def allones_params():
    return dict(load_catalog("d1_allones.json")["params"])


@pytest.fixture
def sample_params():
    return dict(load_catalog("sample.json")["params"])


@pytest.fixture
def int_params():
    return dict(load_catalog("d1_int.json")["params"])


def pytest_terminal_summary(terminalreporter):
    import sys

    mod = sys.modules.get("tests.test_acceptance")
    results = getattr(mod, "RESULTS", None)
    if not results:
        return
    terminalreporter.section("acceptance criteria")
    for n in sorted(results):
        terminalreporter.write_line(results[n])
