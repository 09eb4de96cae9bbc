"""Audit events written by the CLI conform to docs/schemas/stage_event.schema.json."""

from __future__ import annotations

import json
from pathlib import Path

import jsonschema
import pytest
from referencing import Registry, Resource
from referencing.jsonschema import DRAFT202012

from stagec.cli import main
from stagec.engine.audit import read_audit_events

from conftest import PROGRAMS

SCHEMAS_DIR = Path(__file__).parent.parent / "docs" / "schemas"


def _make_registry() -> Registry:
    resources = []
    for schema_file in SCHEMAS_DIR.glob("*.schema.json"):
        schema = json.loads(schema_file.read_text(encoding="utf-8"))
        sid = schema.get("$id", schema_file.name)
        resources.append((sid, Resource.from_contents(schema, default_specification=DRAFT202012)))
    return Registry().with_resources(resources)


def _make_validator(schema_name: str) -> jsonschema.Validator:
    schema = json.loads((SCHEMAS_DIR / schema_name).read_text(encoding="utf-8"))
    return jsonschema.Draft202012Validator(schema, registry=_make_registry())


def _events(tmp_path, capsys):
    log = tmp_path / "audit.jsonl"
    runs = [
        ["check", "add42"],
        ["stage", "fib"],
        ["table", "mux"],
        ["run", "or", "--inputs", "10"],
        ["dot", "not"],
        ["stage", "numerals", "--def", "three"],
    ]
    for command, name, *rest in runs:
        main([command, str(PROGRAMS / f"{name}.2lt"), *rest, "--audit-log", str(log)])
    capsys.readouterr()
    return read_audit_events(log)


def test_events_validate(tmp_path, capsys):
    validator = _make_validator("stage_event.schema.json")
    events = _events(tmp_path, capsys)
    assert len(events) == 6
    for event in events:
        errors = sorted(validator.iter_errors(event), key=lambda e: list(e.path))
        assert errors == [], [e.message for e in errors]
    assert [e["outcome"] for e in events] == ["ok"] * 5 + ["error"]


def test_schema_rejects_unknown_fields(tmp_path, capsys):
    validator = _make_validator("stage_event.schema.json")
    event = dict(_events(tmp_path, capsys)[0], verdict="fine")
    with pytest.raises(jsonschema.ValidationError):
        validator.validate(event)
