"""
Parquet format handler for extended traces.
"""

import io
import logging
from typing import Union

import pandas as pd
import pyarrow as pa
import pyarrow.parquet as pq

from faapy.exceptions import StorageError
from faapy.storage.formats.base import FormatHandler, register_format

logger = logging.getLogger("faapy.storage.formats.parquet")


@register_format
class ParquetFormatHandler(FormatHandler):
    """
    Handler for trace tables in Parquet.
    """

    format_name = "parquet"
    file_extension = "parquet"
    is_binary = True

    def __init__(self, compression: str = "snappy"):
        self.compression = compression

    def serialize(self, data: pd.DataFrame, **kwargs) -> bytes:
        try:
            table = pa.Table.from_pandas(data, preserve_index=False)
            buffer = io.BytesIO()
            pq.write_table(table, buffer, compression=self.compression)
            return buffer.getvalue()
        except Exception as e:
            raise StorageError(f"Failed to serialize table to Parquet: {str(e)}")

    def deserialize(self, content: Union[str, bytes], **kwargs) -> pd.DataFrame:
        if isinstance(content, str):
            raise StorageError("Parquet content must be bytes")
        try:
            return pq.read_table(io.BytesIO(content)).to_pandas()
        except Exception as e:
            raise StorageError(f"Failed to read Parquet: {str(e)}")
