"""pytest fixtures for qwalk3"""
import io
import json
import logging
import os

import pytest
from traitlets.config.loader import PyFileConfigLoader

from qwalk3.app import main

here = os.path.abspath(os.path.dirname(__file__))

testing_config = os.path.join(here, "testing_config.py")
logger = logging.getLogger(__name__)


@pytest.fixture()
def qwalk3_config():
    """Load the qwalk3 test configuration afresh for every test, so tests may edit it"""
    cfg = PyFileConfigLoader(testing_config).load_config()

    return cfg


@pytest.fixture()
def document(tmp_path):
    """Factory: write a run document to a file and return its path"""

    def _document(doc, name="run.json"):
        path = tmp_path / name
        path.write_text(json.dumps(doc))
        return str(path)

    return _document


@pytest.fixture()
def run_cli(capsys, monkeypatch, qwalk3_config):
    """Factory: run qwalk3 with argv and return (exit status, standard output)"""

    def _run(argv, stdin=None, config=None):
        if stdin is not None:
            monkeypatch.setattr("sys.stdin", io.StringIO(stdin))
        capsys.readouterr()
        status = main(argv, config=config if config is not None else qwalk3_config)
        return status, capsys.readouterr().out

    return _run
