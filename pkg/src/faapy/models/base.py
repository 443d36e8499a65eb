"""
Base model for faapy.

This module provides the base model class that all configuration and
telemetry models in the package inherit from, providing common
serialization and validation helpers.
"""

import copy
import json
import math
from typing import Any, Dict, List

import numpy as np
from pydantic import BaseModel as PydanticBaseModel
from pydantic import ConfigDict
from pydantic import ValidationError as PydanticValidationError

from faapy.exceptions import ConfigValidationError, FileReadError, FileWriteError


def _describe_pydantic_error(error: PydanticValidationError) -> str:
    parts = []
    for item in error.errors():
        location = ".".join(str(p) for p in item.get("loc", ())) or "<root>"
        parts.append(f"{location}: {item.get('msg')}")
    return "; ".join(parts)


class BaseModel(PydanticBaseModel):
    """
    Base model for all faapy models.

    Extends Pydantic's BaseModel: unknown fields are rejected, assignments
    are validated and numpy scalars are accepted where floats are expected.
    """

    model_config = ConfigDict(
        # Unknown keys are configuration errors
        extra='forbid',
        validate_assignment=True,
        populate_by_name=True,
        use_enum_values=False,
    )

    def to_dict(self, exclude_none: bool = True) -> Dict[str, Any]:
        """
        Convert the model to a JSON-compatible dictionary.

        Args:
            exclude_none: Whether to exclude None values from the output.

        Returns:
            A dictionary representation of the model.
        """
        data = self.model_dump(mode="json", exclude_none=exclude_none)

        def process_value(value):
            if isinstance(value, (np.floating, np.integer)):
                return value.item()
            if isinstance(value, float) and not math.isfinite(value):
                return None
            if isinstance(value, dict):
                return {k: process_value(v) for k, v in value.items()}
            if isinstance(value, list):
                return [process_value(item) for item in value]
            return value

        return {key: process_value(value) for key, value in data.items()}

    def to_json(self, exclude_none: bool = True, indent: int = 2) -> str:
        """Convert the model to a JSON string with sorted keys."""
        return json.dumps(self.to_dict(exclude_none=exclude_none), indent=indent, sort_keys=True)

    def validate_model(self) -> List[str]:
        """
        Validate the model against rules spanning several fields.

        Meant to be overridden by subclasses.

        Returns:
            A list of validation error messages, if any.
        """
        return []

    def assert_valid(self) -> None:
        """
        Raises:
            ConfigValidationError: If the model fails validation.
        """
        errors = self.validate_model()
        if errors:
            raise ConfigValidationError("\n".join(errors))

    @classmethod
    def from_dict(cls, data: Dict[str, Any]) -> "BaseModel":
        """
        Create a model instance from a dictionary.

        Raises:
            ConfigValidationError: If the data fails validation; the message
                names the offending key.
        """
        try:
            instance = cls.model_validate(data)
        except PydanticValidationError as e:
            raise ConfigValidationError(
                f"Validation failed for {cls.__name__}: {_describe_pydantic_error(e)}"
            )
        instance.assert_valid()
        return instance

    @classmethod
    def from_json(cls, json_str: str) -> "BaseModel":
        """
        Raises:
            ConfigValidationError: If the string is not valid JSON or fails validation.
        """
        try:
            data = json.loads(json_str)
        except json.JSONDecodeError as e:
            raise ConfigValidationError(f"Invalid JSON: {str(e)}")
        return cls.from_dict(data)

    @classmethod
    def import_from_json(cls, file_path: str) -> "BaseModel":
        """
        Create a model instance from a JSON file.

        Raises:
            FileReadError: If the file cannot be read.
            ConfigValidationError: If the content fails validation.
        """
        try:
            with open(file_path, 'r') as f:
                content = f.read()
        except OSError as e:
            raise FileReadError(f"Failed to read {file_path}: {str(e)}")
        return cls.from_json(content)

    def export_to_json(self, file_path: str, indent: int = 2) -> None:
        """
        Raises:
            FileWriteError: If the file cannot be written.
        """
        try:
            with open(file_path, 'w') as f:
                f.write(self.to_json(indent=indent))
                f.write("\n")
        except OSError as e:
            raise FileWriteError(f"Failed to save to file {file_path}: {str(e)}")

    def deep_copy(self) -> "BaseModel":
        return self.__class__.model_validate(copy.deepcopy(self.model_dump()))
