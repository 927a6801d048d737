import io
import json
import logging

import pytest

from qwalk3.config import RunConfig, load_run_config, parse_run_config
from qwalk3.errors import ConfigError
from qwalk3.tests.utils import free_delta_doc, model1_doc

logger = logging.getLogger(__file__)
logger.setLevel(logging.ERROR)


def test_parse_model1_document():
    config = parse_run_config(dict(model1_doc))
    assert config.model == "model1"
    assert config.seed.phi1 == 1
    assert config.seed.phi3 == 1j
    assert (config.range_lo, config.range_hi, config.steps) == (-10, 10, 10)
    assert config.form == "matched"


def test_seq_table_and_constant():
    config = parse_run_config(dict(free_delta_doc))
    seq = config.function_seed()
    assert seq(0) == 1
    assert seq(1) == 0
    constant = parse_run_config({"model": "free", "phi": 0.1, "seq": [0.5, -1]})
    assert constant.function_seed()(17) == 0.5 - 1j


@pytest.mark.parametrize(
    "doc,message",
    [
        ({"model": "model1", "phi": 0.0}, "needs theta, phi1, phi3"),
        ({"model": "gphi"}, "needs phi"),
        ({"model": "free", "phi": 0.0}, "needs seq"),
        ({"model": "grover", "colour": "red"}, "unknown field"),
        ({"phi": 0.3}, "no model"),
        ({"model": "hadamard"}, "model"),
        ({"model": "grover", "range_lo": 4, "range_hi": 2}, "empty"),
        ({"model": "grover", "steps": -1}, "steps"),
        ({"model": "model1", "phi": 0.0, "theta": 0.0, "phi1": [1, 0], "phi3": [0, 0]}, "theta"),
        ({"model": "model1", "phi": 0.0, "theta": 0.5, "phi1": [1, 0, 0], "phi3": [0, 0]}, "phi1"),
        ({"model": "free", "phi": 0.0, "seq": {"zero": [1, 0]}}, "seq"),
    ],
)
def test_bad_documents_are_rejected(doc, message):
    with pytest.raises(ConfigError) as my_failure:
        parse_run_config(doc)
    assert message in str(my_failure.value)


def test_document_must_be_an_object():
    with pytest.raises(ConfigError):
        parse_run_config([1, 2])


def test_load_from_file_and_stdin(tmp_path):
    path = tmp_path / "run.json"
    path.write_text(json.dumps(model1_doc))
    assert load_run_config(str(path)).phi == model1_doc["phi"]
    from_stdin = load_run_config("-", stdin=io.StringIO(json.dumps(model1_doc)))
    assert from_stdin.theta == 0.25


def test_load_errors(tmp_path):
    with pytest.raises(ConfigError):
        load_run_config(str(tmp_path / "missing.json"))
    with pytest.raises(ConfigError) as my_failure:
        load_run_config("-", stdin=io.StringIO("{not json"))
    assert "not valid JSON" in str(my_failure.value)


def test_to_dict_skips_unset_fields():
    config = parse_run_config({"model": "free", "phi": 0.0, "seq": {"2": [1, 0], "-3": [0, 1]}})
    out = config.to_dict()
    assert "theta" not in out
    assert list(out["seq"]) == ["-3", "2"]
    assert out["model"] == "free"


def test_field_names_are_the_run_document_fields():
    assert "seq" in RunConfig.field_names()
    assert "form" in RunConfig.field_names()


def test_prop31_is_the_free_model():
    config = parse_run_config({"model": "prop31", "phi": 0.0, "seq": [1.0, 0.0]})
    assert config.model == "free"
    assert config.function_seed()(5) == 1
    assert config.to_dict()["model"] == "free"


@pytest.mark.parametrize("name", ["phi", "gamma", "theta"])
def test_angles_must_be_finite(name):
    doc = {"model": "gphi", "phi": 0.1, name: float("nan")}
    with pytest.raises(ConfigError) as my_failure:
        parse_run_config(doc)
    assert name in str(my_failure.value)


def test_nan_literal_in_document_is_rejected():
    with pytest.raises(ConfigError) as my_failure:
        load_run_config("-", stdin=io.StringIO('{"model": "gphi", "phi": NaN}'))
    assert "finite" in str(my_failure.value)
