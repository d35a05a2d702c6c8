import argparse
import json
import logging
import os
import sys
import tempfile
from pathlib import Path
from typing import Any, Dict, Optional

from .engine import MotivicPVEngine
from .errors import InternalError
from .golden import run_golden, summary_lines
from .models import CORPUS_NAMES, Command

LOG_FORMAT = "%(asctime)s %(levelname)s %(name)s: %(message)s"

LOGGER = logging.getLogger(__name__)


def dump(doc: Dict[str, Any]) -> str:
    return json.dumps(doc, indent=2, sort_keys=True, ensure_ascii=False) + "\n"


def write_atomic(path: Path, text: str) -> None:
    """Write to a temporary file next to `path`, then rename over it."""
    path.parent.mkdir(parents=True, exist_ok=True)
    fd, tmp = tempfile.mkstemp(dir=str(path.parent), prefix=f".{path.name}.", suffix=".tmp")
    try:
        with os.fdopen(fd, "w", encoding="utf-8") as fh:
            fh.write(text)
        os.replace(tmp, path)
    except BaseException:
        if os.path.exists(tmp):
            os.unlink(tmp)
        raise


def _add_job_flags(p: argparse.ArgumentParser) -> None:
    p.add_argument("--input", required=True, help="Path to the job JSON document")
    p.add_argument("--output", help="Write the result document here (default: stdout)")
    p.add_argument("--truncation", type=int, help="Series truncation order")
    p.add_argument("--samples", type=int, help="Random draws for check / witness-search")
    p.add_argument("--seed", type=int, help="Seed of the random draws")
    p.add_argument("--bound", type=int, help="Multiplicity bound for witness-search")
    p.add_argument("--corpus", choices=CORPUS_NAMES, help="check: also run the named arrangement corpus")
    p.add_argument("--verbose", action="store_true", help="Debug logging on stderr")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="motivicpv", description="Motivic principal value integrals of arrangements")
    sub = parser.add_subparsers(dest="cmd", required=True)

    # -------------------------
    # computations
    # -------------------------
    for command in Command:
        p = sub.add_parser(command.value, help=f"Run the '{command.value}' computation on a job document")
        _add_job_flags(p)

    # -------------------------
    # golden vectors
    # -------------------------
    p_gold = sub.add_parser("golden", help="Run golden vectors from a spec JSON")
    p_gold.add_argument("--spec", required=True, help="Path to golden vector JSON (with golden_tests)")
    p_gold.add_argument("--json", action="store_true", help="Print full JSON report")
    p_gold.add_argument("--verbose", action="store_true", help="Debug logging on stderr")
    return parser


def main(argv: Optional[list] = None) -> int:
    args = build_parser().parse_args(argv)
    logging.basicConfig(
        level=logging.DEBUG if args.verbose else logging.WARNING,
        format=LOG_FORMAT,
        stream=sys.stderr,
    )

    if args.cmd == "golden":
        spec_path = Path(args.spec)
        if not spec_path.exists():
            print(f"Spec file not found: {spec_path}", file=sys.stderr)
            return 2

        failures, report = run_golden(str(spec_path))
        if args.json:
            sys.stdout.write(dump(report))
        else:
            print("\n".join(summary_lines(report)))
        return 1 if failures else 0

    overrides = {
        "truncation": args.truncation,
        "samples": args.samples,
        "seed": args.seed,
        "bound": args.bound,
        "corpus": args.corpus,
    }
    engine = MotivicPVEngine()
    try:
        doc = engine.run_document(Path(args.input), command=args.cmd, overrides=overrides)
        text = dump(doc.to_dict())
    except Exception as e:
        LOGGER.exception("%s failed outside the engine", args.cmd)
        doc = engine.error_document({"command": args.cmd}, InternalError.wrap(e), args.seed)
        text = dump(doc.to_dict())
    if args.output:
        write_atomic(Path(args.output), text)
    else:
        sys.stdout.write(text)
    return doc.exit_code


if __name__ == "__main__":
    raise SystemExit(main())
