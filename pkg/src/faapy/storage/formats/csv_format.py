"""
CSV format handler for per-iteration traces.
"""

import io
import logging
from typing import Union

import pandas as pd

from faapy.exceptions import StorageError
from faapy.storage.formats.base import FormatHandler, register_format

logger = logging.getLogger("faapy.storage.formats.csv_format")


@register_format
class CsvFormatHandler(FormatHandler):
    """
    Handler for trace tables in CSV.

    Floats are written with 17 significant digits and "\\n" line endings,
    so identical traces give byte-identical files.
    """

    format_name = "csv"
    file_extension = "csv"
    is_binary = False

    def __init__(self, float_format: str = "%.17g"):
        self.float_format = float_format

    def serialize(self, data: pd.DataFrame, **kwargs) -> str:
        try:
            return data.to_csv(index=False, float_format=self.float_format, lineterminator="\n")
        except Exception as e:
            raise StorageError(f"Failed to serialize table to CSV: {str(e)}")

    def deserialize(self, content: Union[str, bytes], **kwargs) -> pd.DataFrame:
        if isinstance(content, bytes):
            content = content.decode("utf-8")
        try:
            return pd.read_csv(io.StringIO(content), dtype={"kept_mask": str},
                               keep_default_na=False, float_precision="round_trip", **kwargs)
        except Exception as e:
            raise StorageError(f"Failed to parse CSV: {str(e)}")
