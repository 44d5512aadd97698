"""
Load and save JSON/YAML fixtures: instances, allocations and bench configs.
"""
import json
import os
from typing import Any, Dict, Union

import yaml

from .allocation import Allocation
from .errors import FixtureParseError, SchemaError
from .instance import Instance
from .protocols.result import ProtocolResult


class FixtureLoader:
    """Read fixture files, reporting parse errors with file:line:column."""

    def __init__(self, indent: int = 2):
        """Initialize fixture loader.

        Args:
            indent: Indentation used when writing JSON
        """
        self.indent = indent

    def load_document(self, file_path: str) -> Any:
        """Load a raw JSON or YAML document.

        Args:
            file_path: Path to a ``.json``, ``.yaml`` or ``.yml`` file

        Returns:
            The parsed document
        """
        if not os.path.exists(file_path):
            raise FileNotFoundError(f"File not found: {file_path}")

        file_ext = os.path.splitext(file_path)[1].lower()

        if file_ext == ".json":
            return self._load_json(file_path)
        elif file_ext in (".yaml", ".yml"):
            return self._load_yaml(file_path)
        else:
            raise ValueError(f"Unsupported file format: {file_ext}")

    def _load_json(self, file_path: str) -> Any:
        with open(file_path, encoding="utf-8") as handle:
            text = handle.read()
        try:
            return json.loads(text)
        except json.JSONDecodeError as exc:
            raise FixtureParseError(file_path, exc.msg, exc.lineno, exc.colno) from exc

    def _load_yaml(self, file_path: str) -> Any:
        with open(file_path, encoding="utf-8") as handle:
            text = handle.read()
        try:
            return yaml.safe_load(text)
        except yaml.MarkedYAMLError as exc:
            mark = exc.problem_mark
            line, column = (mark.line + 1, mark.column + 1) if mark is not None else (None, None)
            raise FixtureParseError(file_path, str(exc.problem), line, column) from exc
        except yaml.YAMLError as exc:
            raise FixtureParseError(file_path, str(exc)) from exc

    def load_instance(self, file_path: str) -> Instance:
        return Instance.from_dict(self.load_document(file_path))

    def load_allocation(self, file_path: str) -> Allocation:
        """Load an allocation, accepting a bare piece list or a protocol result object."""
        raw = self.load_document(file_path)
        if isinstance(raw, dict):
            return ProtocolResult.from_dict(raw).allocation
        if isinstance(raw, list):
            return Allocation.from_list(raw)
        raise SchemaError("allocation", "expected a list of pieces or a protocol result object")

    def load_config(self, file_path: str) -> Dict[str, Any]:
        raw = self.load_document(file_path)
        if not isinstance(raw, dict):
            raise SchemaError("config", "expected a mapping at the top level")
        return raw

    def dumps(self, document: Any) -> str:
        return json.dumps(document, indent=self.indent, ensure_ascii=False) + "\n"

    def save(self, document: Any, file_path: Union[str, None]) -> str:
        """Write a document as JSON, or return the text when ``file_path`` is None or ``-``."""
        text = self.dumps(document)
        if file_path and file_path != "-":
            with open(file_path, "w", encoding="utf-8") as handle:
                handle.write(text)
        return text
