import json
import re
from pathlib import Path
from typing import Any, Dict, Optional, Union

from sympy import Rational

from .errors import ParseError
from .models import CORPUS_NAMES, Command, ExponentVector, JobOptions, JobSpec, MultiplicityVector


JsonLike = Union[Dict[str, Any], str, Path]

_RATIONAL = re.compile(r"^\s*([+-]?)(\d+)(?:\s*/\s*(\d+))?\s*$")

_NEEDS_EXPONENTS = {Command.PV, Command.GENERIC_CLOSED_FORM}
_NEEDS_MULTIPLICITIES = {Command.NDPOLE}


def load_json(source: JsonLike) -> Dict[str, Any]:
    """
    Load a JSON object from:
      - dict (pass-through)
      - str (raw json string OR filepath)
      - Path (filepath)
    """
    if isinstance(source, dict):
        return source

    if isinstance(source, str):
        s = source.strip()
        if s.startswith("{") or s.startswith("["):
            text = s
        else:
            source = Path(s)

    if isinstance(source, Path):
        if not source.exists():
            raise ParseError(f"JSON path not found: {source}")
        text = source.read_text(encoding="utf-8")
    elif not isinstance(source, str):
        raise ParseError(f"Unsupported JSON source type: {type(source)}")

    try:
        data = json.loads(text)
    except json.JSONDecodeError as e:
        raise ParseError(f"Invalid JSON: {e}") from e
    if not isinstance(data, dict):
        raise ParseError("Expected a JSON object (dict) at top-level.")
    return data


def parse_rational(text: Any) -> Rational:
    """
    "p/q", "-3", "2/4" -> exact reduced rational. Integers pass through; the
    unicode minus sign is accepted.
    """
    if isinstance(text, bool):
        raise ParseError(f"not a rational: {text!r}")
    if isinstance(text, int):
        return Rational(text)
    if not isinstance(text, str):
        raise ParseError(f"not a rational: {text!r}")
    m = _RATIONAL.match(text.replace("−", "-"))
    if m is None:
        raise ParseError(f"malformed rational: {text!r}")
    sign, num, den = m.groups()
    if den is not None and int(den) == 0:
        raise ParseError(f"zero denominator: {text!r}")
    value = Rational(int(num), int(den) if den is not None else 1)
    return -value if sign == "-" else value


def _int_field(data: Dict[str, Any], key: str, minimum: Optional[int] = None) -> Optional[int]:
    if key not in data or data[key] is None:
        return None
    value = data[key]
    if isinstance(value, bool) or not isinstance(value, int):
        raise ParseError(f"{key} must be an integer", {"value": value})
    if minimum is not None and value < minimum:
        raise ParseError(f"{key} must be >= {minimum}", {"value": value})
    return value


def load_options(data: Optional[Dict[str, Any]], overrides: Optional[Dict[str, Any]] = None) -> JobOptions:
    """Options from the document, with non-None overrides (CLI flags) taking precedence."""
    if data is not None and not isinstance(data, dict):
        raise ParseError("options must be an object")
    merged: Dict[str, Any] = dict(data or {})
    for k, v in (overrides or {}).items():
        if v is not None:
            merged[k] = v

    defaults = JobOptions()
    samples = _int_field(merged, "samples", 1)
    seed = _int_field(merged, "seed")
    bound = _int_field(merged, "bound", 1)
    delta = merged.get("delta")
    if delta is not None:
        delta = parse_rational(delta)
        if delta <= 0:
            raise ParseError("delta must be positive", {"value": str(delta)})
    corpus = merged.get("corpus")
    if corpus is not None and corpus not in CORPUS_NAMES:
        raise ParseError(f"unknown corpus '{corpus}'", {"allowed": list(CORPUS_NAMES)})
    return JobOptions(
        truncation=_int_field(merged, "truncation", 1),
        samples=defaults.samples if samples is None else samples,
        seed=defaults.seed if seed is None else seed,
        bound=defaults.bound if bound is None else bound,
        delta=delta,
        corpus=corpus,
    )


def load_job(
    source: JsonLike,
    command: Optional[str] = None,
    overrides: Optional[Dict[str, Any]] = None,
) -> JobSpec:
    """
    Load a JobSpec from a job document:
      {
        "command": "edges" | "classes" | "pv" | ...,   (optional when given here)
        "ambient_dim": int,
        "hyperplanes": [[int, ...], ...],
        "exponents": ["p/q", ...]?,
        "multiplicities": [int, ...]?,
        "options": {"truncation", "samples", "seed", "bound", "delta", "corpus"}?
      }
    """
    data = load_json(source)

    command_raw = command if command is not None else data.get("command")
    if command_raw is None:
        raise ParseError("Missing required field: command")
    try:
        cmd = Command(command_raw)
    except ValueError as e:
        raise ParseError(f"Invalid command '{command_raw}'.", {"allowed": [c.value for c in Command]}) from e
    options = load_options(data.get("options"), overrides)

    required = ["ambient_dim", "hyperplanes"]
    missing = [k for k in required if k not in data]
    corpus_only = cmd == Command.CHECK and options.corpus is not None and len(missing) == len(required)
    if missing and not corpus_only:
        raise ParseError(f"Missing required fields: {missing}")

    ambient_dim = None
    hyperplanes = None
    if not corpus_only:
        ambient_dim = _int_field(data, "ambient_dim", 1)
        hyperplanes = data["hyperplanes"]
        if not isinstance(hyperplanes, list) or not all(isinstance(h, list) for h in hyperplanes):
            raise ParseError("hyperplanes must be a list of integer vectors")
        for h in hyperplanes:
            if any(isinstance(x, bool) or not isinstance(x, int) for x in h):
                raise ParseError("hyperplane normals must have integer entries", {"normal": h})

    exponents = None
    if data.get("exponents") is not None:
        if not isinstance(data["exponents"], list):
            raise ParseError("exponents must be a list of rationals")
        exponents = ExponentVector(a=tuple(parse_rational(x) for x in data["exponents"]))
    elif cmd in _NEEDS_EXPONENTS:
        raise ParseError(f"command '{cmd.value}' needs exponents")

    multiplicities = None
    if data.get("multiplicities") is not None:
        raw = data["multiplicities"]
        if not isinstance(raw, list) or any(isinstance(x, bool) or not isinstance(x, int) or x < 1 for x in raw):
            raise ParseError("multiplicities must be a list of positive integers", {"value": raw})
        multiplicities = MultiplicityVector(m=tuple(raw))
    elif cmd in _NEEDS_MULTIPLICITIES:
        raise ParseError(f"command '{cmd.value}' needs multiplicities")

    return JobSpec(
        command=cmd,
        ambient_dim=ambient_dim,
        hyperplanes=None if hyperplanes is None else tuple(tuple(h) for h in hyperplanes),
        exponents=exponents,
        multiplicities=multiplicities,
        options=options,
    )
