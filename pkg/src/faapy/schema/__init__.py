"""
Schema module for faapy.

Bundled JSON Schemas for configuration files and run summaries.
"""

from faapy.schema.validator import (
    SCHEMA_FILES,
    SCHEMA_VERSION,
    SchemaValidator,
    load_schemas,
    validate_document,
)

__all__ = [
    'SCHEMA_FILES',
    'SCHEMA_VERSION',
    'SchemaValidator',
    'load_schemas',
    'validate_document',
]
