import json
from pathlib import Path
from typing import Any, Dict, Optional, Tuple, Union

from jsonschema import ValidationError, validate

from .errors import ParseError


def validate_against_schema(instance: Union[str, Dict[str, Any]], schema_path: Path) -> Tuple[bool, Optional[str]]:
    if isinstance(instance, str):
        try:
            instance = json.loads(instance)
        except json.JSONDecodeError as e:
            return False, f"Invalid JSON: {e}"

    try:
        schema = json.loads(schema_path.read_text(encoding="utf-8"))
        validate(instance=instance, schema=schema)
        return True, None
    except ValidationError as e:
        location = "/".join(str(p) for p in e.absolute_path)
        return False, f"Schema violation at '{location}': {e.message}"


def require_valid(instance: Dict[str, Any], schema_path: Path) -> None:
    ok, message = validate_against_schema(instance, schema_path)
    if not ok:
        raise ParseError(message or "schema violation", {"schema": schema_path.name})
