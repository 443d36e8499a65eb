"""
Storage module for faapy.

Artifact directory and format handlers for traces, summaries and indexes.
"""

from faapy.storage.formats import (
    CsvFormatHandler,
    FormatHandler,
    JsonFormatHandler,
    ParquetFormatHandler,
    get_format_handler,
    get_format_handler_for_file,
    get_format_handler_instance,
    register_format,
)
from faapy.storage.local import OUTPUT_DIR_ENV, LocalArtifactStore, default_output_dir
from faapy.storage.tables import CSV_COLUMNS, EXTENDED_COLUMNS, trace_frame

__all__ = [
    'FormatHandler',
    'register_format',
    'get_format_handler',
    'get_format_handler_for_file',
    'get_format_handler_instance',
    'CsvFormatHandler',
    'JsonFormatHandler',
    'ParquetFormatHandler',
    'LocalArtifactStore',
    'OUTPUT_DIR_ENV',
    'default_output_dir',
    'CSV_COLUMNS',
    'EXTENDED_COLUMNS',
    'trace_frame',
]
