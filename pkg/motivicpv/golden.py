"""
Golden-vector runner: each vector is a job document plus the expected exit
code, error name, result subset and/or reason substring.
"""
from __future__ import annotations

import json
import logging
from pathlib import Path
from typing import Any, Callable, Dict, List, Optional, Tuple

from .engine import MotivicPVEngine
from .models import ResultDoc

LOGGER = logging.getLogger(__name__)

Check = Callable[[Any, ResultDoc, Dict[str, Any]], bool]


def matches(expected: Any, actual: Any) -> bool:
    """Subset match: every key of an expected object must match; lists match element-wise."""
    if isinstance(expected, dict):
        return isinstance(actual, dict) and all(k in actual and matches(v, actual[k]) for k, v in expected.items())
    if isinstance(expected, list):
        return (
            isinstance(actual, list)
            and len(expected) == len(actual)
            and all(matches(e, a) for e, a in zip(expected, actual))
        )
    return expected == actual


def _error_name(out: Dict[str, Any]) -> Optional[str]:
    return (out.get("error") or {}).get("error")


# expectation key -> predicate(expected value, document, serialized document)
CHECKS: Dict[str, Check] = {
    "exit_code": lambda want, doc, out: doc.exit_code == want,
    "error": lambda want, doc, out: _error_name(out) == want,
    "result": lambda want, doc, out: matches(want, out.get("result")),
    "reason_contains": lambda want, doc, out: str(want) in json.dumps(out.get("error") or {}, ensure_ascii=False),
}


def evaluate_vector(engine: MotivicPVEngine, vector: Dict[str, Any]) -> Dict[str, Any]:
    expect = vector.get("expect", {})
    doc = engine.run_document(vector.get("given", {}))
    out = doc.to_dict()
    outcomes = [(name, CHECKS[name](expect[name], doc, out)) for name in CHECKS if name in expect]
    # a vector that asserts nothing is a broken vector
    passed = bool(outcomes) and all(ok for _, ok in outcomes)
    return {
        "test_id": vector.get("test_id") or vector.get("case_id") or "unknown",
        "status": "PASS" if passed else "FAIL",
        "checks": [{"name": name, "ok": ok} for name, ok in outcomes],
        "output": out,
    }


def run_golden(spec_path: str, engine: Optional[MotivicPVEngine] = None) -> Tuple[int, Dict[str, Any]]:
    vectors = json.loads(Path(spec_path).read_text(encoding="utf-8")).get("golden_tests", [])
    engine = engine or MotivicPVEngine()
    results: List[Dict[str, Any]] = [evaluate_vector(engine, v) for v in vectors]
    failures = sum(1 for r in results if r["status"] == "FAIL")
    LOGGER.info("golden vectors: %d run, %d failed", len(results), failures)
    return failures, {
        "spec_path": spec_path,
        "total": len(results),
        "failures": failures,
        "results": results,
    }


def summary_lines(report: Dict[str, Any]) -> List[str]:
    lines = [f"Golden tests: {report['total']} | Failures: {report['failures']}"]
    lines.extend(f"- {r['status']}: {r['test_id']}" for r in report["results"])
    return lines
