import json
import tempfile
from pathlib import Path

import pytest

from smellforge.ingest import CorpusConfig, build_project_model

FIXTURES = Path(__file__).parent / "fixtures"


def model_from_sources(files: dict[str, str], project_id: str = "t", role: str = "TRAIN"):
    """Build a resolved model from {relative path: source} pairs."""
    root = Path(tempfile.mkdtemp()) / "src"
    root.mkdir(parents=True)
    for rel, text in files.items():
        p = root / rel
        p.parent.mkdir(parents=True, exist_ok=True)
        p.write_text(text)
    return build_project_model(
        CorpusConfig(root_dirs=[root], project_id=project_id, role=role)
    )


@pytest.fixture(scope="session")
def mini_model():
    config = CorpusConfig(
        root_dirs=[FIXTURES / "mini_corpus"],
        project_id="mini",
        role="TRAIN",
    )
    return build_project_model(config)


@pytest.fixture(scope="session")
def metrics_expected():
    return json.loads((FIXTURES / "metrics_expected.json").read_text())


@pytest.fixture(scope="session")
def patterns_expected():
    data = json.loads((FIXTURES / "patterns_expected.json").read_text())
    data.pop("_comment", None)
    return data


def method_by_key(model, key):
    """Resolve 'owner.name/arity' to (class, method)."""
    owner_and_name, arity = key.rsplit("/", 1)
    owner, name = owner_and_name.rsplit(".", 1)
    cls = model.class_index[owner]
    for m in cls.methods:
        if m.name == name and m.arity == int(arity):
            return cls, m
    raise KeyError(key)
