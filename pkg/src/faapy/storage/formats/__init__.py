"""
Format handlers for faapy artifacts.

Importing this package registers the csv, json and parquet handlers.
"""

from faapy.storage.formats.base import (
    FormatHandler,
    get_format_handler,
    get_format_handler_for_file,
    get_format_handler_instance,
    register_format,
)
from faapy.storage.formats.csv_format import CsvFormatHandler
from faapy.storage.formats.json_format import JsonFormatHandler
from faapy.storage.formats.parquet import ParquetFormatHandler

__all__ = [
    'FormatHandler',
    'register_format',
    'get_format_handler',
    'get_format_handler_for_file',
    'get_format_handler_instance',
    'CsvFormatHandler',
    'JsonFormatHandler',
    'ParquetFormatHandler',
]
