import json
import os
import pathlib
import shutil

import pytest

ROOT = pathlib.Path(__file__).resolve().parents[2]


@pytest.fixture(scope="session")
def grd_bin():
    path = os.environ.get("GRD_BIN") or shutil.which("grd")
    if not path:
        pytest.skip("grd binary not found; set GRD_BIN")
    return path


@pytest.fixture(scope="session")
def validator():
    jsonschema = pytest.importorskip("jsonschema")
    path = os.environ.get("GRD_SCHEMA", ROOT / "schema" / "report.schema.json")
    schema = json.loads(pathlib.Path(path).read_text())
    cls = jsonschema.validators.validator_for(schema)
    cls.check_schema(schema)
    return cls(schema)
