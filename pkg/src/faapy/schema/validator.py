"""
Schema validation module for faapy.

Validates run, compare and sweep configuration documents, and run summaries,
against the JSON Schemas bundled with the package.
"""

import json
import logging
from pathlib import Path
from typing import Any, Dict, List

import jsonschema
from referencing import Registry, Resource

from faapy.exceptions import ConfigValidationError

logger = logging.getLogger("faapy.schema.validator")

SCHEMA_VERSION = "1.0"

# Document kinds and their schema files
SCHEMA_FILES = {
    "run": "run.schema.json",
    "compare": "compare.schema.json",
    "sweep": "sweep.schema.json",
    "solver": "solver.schema.json",
    "problem": "problem.schema.json",
    "summary": "summary.schema.json",
}


def _definitions_dir(version: str) -> Path:
    return Path(__file__).parent / "definitions" / version


def load_schemas(version: str = SCHEMA_VERSION) -> Dict[str, Dict[str, Any]]:
    """
    Load every bundled schema of a version, keyed by file name.

    Raises:
        ConfigValidationError: If the version is not bundled.
    """
    directory = _definitions_dir(version)
    if not directory.is_dir():
        raise ConfigValidationError(f"Schema version '{version}' is not supported")
    schemas = {}
    for path in sorted(directory.glob("*.schema.json")):
        with open(path, "r") as f:
            schemas[path.name] = json.load(f)
        logger.debug(f"Loaded schema {path.name} version {version}")
    return schemas


class SchemaValidator:
    """
    Validator for configuration documents.

    All schemas of one version are loaded once into a reference registry so
    that run, compare and sweep documents can share the solver and problem
    definitions.
    """

    def __init__(self, version: str = SCHEMA_VERSION):
        self.version = version
        self.schemas = load_schemas(version)
        self.registry = Registry().with_resources(
            (name, Resource.from_contents(schema)) for name, schema in self.schemas.items()
        )

    def _validator(self, kind: str) -> jsonschema.Draft202012Validator:
        if kind not in SCHEMA_FILES:
            raise ValueError(f"Unknown document kind '{kind}' (expected one of: "
                             f"{', '.join(SCHEMA_FILES)})")
        schema = self.schemas[SCHEMA_FILES[kind]]
        return jsonschema.Draft202012Validator(schema, registry=self.registry)

    def validate(self, data: Dict[str, Any], kind: str) -> List[str]:
        """
        Validate a document.

        Args:
            data: Parsed JSON document.
            kind: One of run, compare, sweep, solver, problem, summary.

        Returns:
            List of validation error messages, empty if the document is valid.
            Each message names the offending key path.
        """
        errors = []
        found = self._validator(kind).iter_errors(data)
        for error in sorted(found, key=lambda e: [str(p) for p in e.absolute_path]):
            path = ".".join(str(p) for p in error.absolute_path) or "root"
            errors.append(f"Validation error at {path}: {error.message}")
        logger.debug(f"Validated {kind} document: {len(errors)} errors")
        return errors

    def assert_valid(self, data: Dict[str, Any], kind: str) -> None:
        """
        Raises:
            ConfigValidationError: If the document fails validation.
        """
        errors = self.validate(data, kind)
        if errors:
            raise ConfigValidationError("\n".join(errors))


def validate_document(data: Dict[str, Any], kind: str) -> None:
    """
    Validate a document against the current schema version.

    Raises:
        ConfigValidationError: If the document fails validation.
    """
    SchemaValidator().assert_valid(data, kind)
