"""Compiler configuration: YAML loading and strict validation."""

import json
from pathlib import Path

import jsonschema
import pytest
import yaml
from pydantic import ValidationError

from stagec.models.config import CompilerConfig
from stagec.util.errors import ConfigLoadError
from stagec.util.io import load_config_yaml

from conftest import FIXTURES

CONFIGS = FIXTURES / "configs"
SCHEMA = Path(__file__).parent.parent / "docs" / "schemas" / "compiler_config.schema.json"


def test_defaults():
    config = CompilerConfig()
    assert config.profile == "full"
    assert config.phase == "src"
    assert config.entry == "main"
    assert config.max_table_inputs == 16
    assert config.color is True


def test_load_circuit_config():
    config = load_config_yaml(CONFIGS / "circuit.yaml")
    assert config.profile == "circuit"
    assert config.max_table_inputs == 8
    assert config.color is False


def test_empty_file_gives_defaults():
    assert load_config_yaml(CONFIGS / "empty.yaml") == CompilerConfig()


@pytest.mark.parametrize("name", ["bad_profile.yaml", "unknown_key.yaml", "not_a_mapping.yaml"])
def test_invalid_configs_are_rejected(name):
    with pytest.raises(ConfigLoadError):
        load_config_yaml(CONFIGS / name)


def test_missing_config_file(tmp_path):
    with pytest.raises(ConfigLoadError, match="Cannot read config"):
        load_config_yaml(tmp_path / "nope.yaml")


def test_table_limit_bounds():
    with pytest.raises(ValidationError):
        CompilerConfig(max_table_inputs=21)
    with pytest.raises(ValidationError):
        CompilerConfig(max_table_inputs=0)
    with pytest.raises(ValidationError):
        CompilerConfig(entry="Main")


def test_config_is_frozen():
    with pytest.raises(ValidationError):
        CompilerConfig().profile = "circuit"


@pytest.mark.parametrize("name", ["circuit.yaml", "small_tables.yaml"])
def test_valid_fixtures_match_json_schema(name):
    schema = json.loads(SCHEMA.read_text(encoding="utf-8"))
    raw = yaml.safe_load((CONFIGS / name).read_text(encoding="utf-8"))
    jsonschema.validate(raw, schema)


@pytest.mark.parametrize("name", ["bad_profile.yaml", "unknown_key.yaml"])
def test_invalid_fixtures_fail_json_schema(name):
    schema = json.loads(SCHEMA.read_text(encoding="utf-8"))
    raw = yaml.safe_load((CONFIGS / name).read_text(encoding="utf-8"))
    with pytest.raises(jsonschema.ValidationError):
        jsonschema.validate(raw, schema)
