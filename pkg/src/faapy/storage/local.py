"""
Local filesystem storage for run artifacts.
"""

import glob
import logging
import os
from typing import Any, List, Optional, Union

from faapy.exceptions import FileReadError, FileWriteError, StorageError
from faapy.storage.formats import get_format_handler_instance

logger = logging.getLogger("faapy.storage.local")

# Default output directory when neither the config nor the command line names one
OUTPUT_DIR_ENV = "FAAPY_OUTPUT_DIR"
DEFAULT_OUTPUT_DIR = "faa-runs"


def default_output_dir() -> str:
    return os.environ.get(OUTPUT_DIR_ENV) or DEFAULT_OUTPUT_DIR


class LocalArtifactStore:
    """
    Artifact directory on the local filesystem.

    Relative paths resolve against base_path. Every run writes into its own
    subdirectory, so concurrent runs never share a file.
    """

    def __init__(self, base_path: Optional[str] = None, create_if_missing: bool = True):
        """
        Args:
            base_path: Root directory; defaults to $FAAPY_OUTPUT_DIR or ./faa-runs.
            create_if_missing: Create the directory when it does not exist.

        Raises:
            StorageError: If the directory is missing or not writable.
        """
        self.base_path = os.path.abspath(os.path.expanduser(base_path or default_output_dir()))

        if create_if_missing and not os.path.exists(self.base_path):
            try:
                os.makedirs(self.base_path, exist_ok=True)
                logger.info(f"Created output directory: {self.base_path}")
            except OSError as e:
                raise StorageError(f"Failed to create output directory {self.base_path}: {e}")

        if not os.path.isdir(self.base_path):
            raise StorageError(f"Output path is not a directory: {self.base_path}")
        if not os.access(self.base_path, os.W_OK):
            raise StorageError(f"Output directory is not writable: {self.base_path}")

        logger.debug(f"Initialized artifact store at {self.base_path}")

    def resolve_path(self, path: str) -> str:
        if os.path.isabs(path):
            return path
        return os.path.join(self.base_path, path)

    def join_path(self, *parts: str) -> str:
        return os.path.join(*parts)

    def create_directory(self, path: str) -> str:
        """
        Create a directory if it doesn't exist.

        Returns:
            The absolute path of the directory.

        Raises:
            StorageError: If the path exists as a file or cannot be created.
        """
        full_path = self.resolve_path(path)
        if os.path.exists(full_path) and not os.path.isdir(full_path):
            raise StorageError(f"Path exists but is not a directory: {full_path}")
        try:
            os.makedirs(full_path, exist_ok=True)
        except OSError as e:
            raise StorageError(f"Failed to create directory {full_path}: {e}")
        return full_path

    def exists(self, path: str) -> bool:
        return os.path.exists(self.resolve_path(path))

    def read_file(self, path: str, binary: bool = False) -> Union[str, bytes]:
        """
        Raises:
            FileReadError: If the file cannot be read.
        """
        full_path = self.resolve_path(path)
        try:
            if binary:
                with open(full_path, mode='rb') as f:
                    return f.read()
            with open(full_path, mode='r', encoding='utf-8', newline='') as f:
                return f.read()
        except OSError as e:
            raise FileReadError(f"Failed to read file {full_path}: {e}")

    def write_file(self, path: str, content: Union[str, bytes]) -> str:
        """
        Write content, creating parent directories as needed.

        Returns:
            The absolute path written.

        Raises:
            FileWriteError: If the file cannot be written.
        """
        full_path = self.resolve_path(path)
        directory = os.path.dirname(full_path)
        try:
            if directory:
                os.makedirs(directory, exist_ok=True)
            if isinstance(content, bytes):
                with open(full_path, mode='wb') as f:
                    f.write(content)
            else:
                with open(full_path, mode='w', encoding='utf-8', newline='') as f:
                    f.write(content)
        except OSError as e:
            raise FileWriteError(f"Failed to write file {full_path}: {e}")
        return full_path

    def list_files(self, path: str, pattern: Optional[str] = None) -> List[str]:
        """Sorted file paths under path (relative to base_path) matching pattern."""
        full_path = self.resolve_path(path)
        matches = glob.glob(os.path.join(full_path, pattern or "*"))
        return sorted(os.path.relpath(m, self.base_path) for m in matches if os.path.isfile(m))

    def write_artifact(self, path: str, data: Any, format_name: Optional[str] = None) -> str:
        """
        Serialize data with the handler for format_name, or for the file extension.

        Returns:
            The absolute path written.
        """
        try:
            handler = get_format_handler_instance(format_name or path)
        except ValueError as e:
            raise StorageError(str(e))
        return self.write_file(path, handler.serialize(data))

    def read_artifact(self, path: str, format_name: Optional[str] = None) -> Any:
        try:
            handler = get_format_handler_instance(format_name or path)
        except ValueError as e:
            raise StorageError(str(e))
        return handler.deserialize(self.read_file(path, binary=handler.is_binary))
