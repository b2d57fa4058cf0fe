import sys
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent))

from bitextkit.langid import train  # noqa: E402
from synth import seed_lines  # noqa: E402

DATA_DIR = Path(__file__).parent / "data"


@pytest.fixture(scope="session")
def seeds():
    return {lang: seed_lines(lang) for lang in ("es", "ca", "pt", "fr")}


@pytest.fixture(scope="session")
def fixture_model(seeds):
    """The bundled-seed es/ca/pt/fr model used across the suite."""
    return train(seeds)


@pytest.fixture(scope="session")
def heldout_rows():
    rows = []
    for line in (DATA_DIR / "langid_heldout.tsv").read_text(encoding="utf-8").splitlines():
        lang, text = line.split("\t")
        rows.append((lang, text))
    return rows


@pytest.fixture(scope="session")
def data_dir():
    return DATA_DIR
