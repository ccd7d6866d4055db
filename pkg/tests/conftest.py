from pathlib import Path

import pytest
from hypothesis import settings

settings.register_profile("suite", deadline=None, max_examples=80)
settings.load_profile("suite")

FIXTURES = Path(__file__).resolve().parent.parent / "fixtures"
GOLDEN = Path(__file__).resolve().parent / "golden"


@pytest.fixture(scope="session")
def equal_h_paths():
    return {p.stem: p for p in sorted((FIXTURES / "equal_h_cohort").glob("*.json"))}


@pytest.fixture(scope="session")
def classified_paths():
    return {p.stem: p for p in sorted((FIXTURES / "classified_authors").glob("*.json"))}


@pytest.fixture(scope="session")
def equal_h_records(equal_h_paths):
    from citemetrics import parse_record
    return {name: parse_record(path) for name, path in equal_h_paths.items()}


@pytest.fixture(scope="session")
def classified_records(classified_paths):
    from citemetrics import parse_record
    return {name: parse_record(path) for name, path in classified_paths.items()}
