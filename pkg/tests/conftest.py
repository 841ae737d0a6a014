from pathlib import Path

import pytest
from hypothesis import settings

from goldie.pipeline import load_instance

settings.register_profile("default", max_examples=60, deadline=None)
settings.load_profile("default")

ROOT = Path(__file__).resolve().parent.parent
FIXTURES = ROOT / "fixtures"

# fixtures on which the polytope model applies
GOOD = ["instA", "instB", "instC", "instD", "inst-line", "inst-line-open", "inst-r0", "inst-half", "inst-full3", "inst-degenerate", "inst-noaxis"]


def fixture_path(name: str) -> Path:
    return FIXTURES / f"{name}.json"


@pytest.fixture(params=GOOD)
def good_instance(request):
    spec, alpha = load_instance(fixture_path(request.param))
    return request.param, spec, alpha
