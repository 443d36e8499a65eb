"""
JSON format handler for run summaries and sweep indexes.
"""

import json
import logging
from typing import Any, Dict, Union

from faapy.exceptions import StorageError
from faapy.storage.formats.base import FormatHandler, register_format

logger = logging.getLogger("faapy.storage.formats.json_format")


@register_format
class JsonFormatHandler(FormatHandler):
    """
    Handler for JSON documents. Keys are sorted for reproducible output.
    """

    format_name = "json"
    file_extension = "json"
    is_binary = False

    def __init__(self, indent: int = 2, ensure_ascii: bool = False):
        self.indent = indent
        self.ensure_ascii = ensure_ascii

    def serialize(self, data: Dict[str, Any], **kwargs) -> str:
        try:
            return json.dumps(data, indent=self.indent, ensure_ascii=self.ensure_ascii,
                              sort_keys=True, allow_nan=False) + "\n"
        except (TypeError, ValueError) as e:
            raise StorageError(f"Failed to serialize data to JSON: {str(e)}")

    def deserialize(self, content: Union[str, bytes], **kwargs) -> Dict[str, Any]:
        if isinstance(content, bytes):
            content = content.decode("utf-8")
        try:
            return json.loads(content)
        except json.JSONDecodeError as e:
            raise StorageError(f"Invalid JSON: {str(e)}")
