"""
Base format interface for faapy artifacts.

This module defines the abstract base class for artifact format handlers
and the registry through which handlers are looked up by name or by file
extension.
"""

import abc
import logging
from typing import Any, Dict, Optional, Type, Union

logger = logging.getLogger("faapy.storage.formats.base")


class FormatHandler(abc.ABC):
    """
    Abstract base class for format handlers.
    """

    # Format name (used for registration and lookup)
    format_name: str = None

    # File extension (without the dot)
    file_extension: str = None

    # Whether this format requires binary mode
    is_binary: bool = False

    @classmethod
    def get_file_extension(cls) -> str:
        """
        Get the file extension for this format.

        Returns:
            The file extension (without the dot).
        """
        if cls.file_extension is None:
            raise NotImplementedError(f"File extension not defined for {cls.__name__}")
        return cls.file_extension

    @classmethod
    def matches_extension(cls, filename: str) -> bool:
        """
        Check if a filename matches this format's extension.
        """
        if not filename or not cls.file_extension:
            return False
        return filename.rsplit('.', 1)[-1].lower() == cls.file_extension.lower()

    @abc.abstractmethod
    def serialize(self, data: Any, **kwargs) -> Union[str, bytes]:
        """
        Serialize an artifact.

        Raises:
            StorageError: If the data cannot be serialized.
        """
        pass

    @abc.abstractmethod
    def deserialize(self, content: Union[str, bytes], **kwargs) -> Any:
        """
        Deserialize an artifact.

        Raises:
            StorageError: If the content cannot be deserialized.
        """
        pass


# Registry of format handlers
_format_registry: Dict[str, Type[FormatHandler]] = {}


def register_format(format_class: Type[FormatHandler]) -> Type[FormatHandler]:
    """
    Register a format handler class.

    This can be used as a decorator on format handler classes.

    Raises:
        ValueError: If the format handler has no format_name.
    """
    if not format_class.format_name:
        raise ValueError(f"Format handler {format_class.__name__} must define format_name")

    _format_registry[format_class.format_name] = format_class
    return format_class


def get_format_handler(format_name: str) -> Type[FormatHandler]:
    """
    Get a format handler class by name.

    Raises:
        ValueError: If no handler is registered for the format.
    """
    if format_name not in _format_registry:
        raise ValueError(f"No format handler registered for format '{format_name}'")

    return _format_registry[format_name]


def get_format_handler_for_file(filename: str) -> Optional[Type[FormatHandler]]:
    """
    Get a format handler class based on a filename.

    Returns:
        The format handler class, or None if no handler matches the filename.
    """
    for handler_class in _format_registry.values():
        if handler_class.matches_extension(filename):
            return handler_class
    return None


def get_format_handler_instance(format_name_or_path: str, **options) -> FormatHandler:
    """
    Get a format handler instance by name or file path.

    Raises:
        ValueError: If no handler matches.
    """
    if format_name_or_path in _format_registry:
        return _format_registry[format_name_or_path](**options)

    handler_class = get_format_handler_for_file(format_name_or_path)
    if handler_class is None:
        raise ValueError(f"No format handler found for '{format_name_or_path}'")
    return handler_class(**options)
