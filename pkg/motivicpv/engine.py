from __future__ import annotations

import logging
import random
from pathlib import Path
from typing import Any, Callable, Dict, Optional

from . import __version__
from .arrangement import (
    edge_lattice,
    is_dense_edge,
    is_essential,
    is_generic,
    is_indecomposable,
    parse_arrangement,
)
from .classes import (
    affine_complement_class,
    arrangement_union_class,
    euler_characteristic,
    lpoly_to_json,
    projective_complement_class,
    resolution_class,
)
from .conformance.corpus import CorpusEntry, corpus_by_name, tags_for
from .conformance.suite import run_theorem_suite
from .errors import InternalError, MotivicPVError
from .formal import formal_is_zero, formal_pv, multiplicity, poles, reduce_formal, specialize
from .loaders import JsonLike, load_job, load_json
from .models import Arrangement, Command, JobSpec, ResultDoc
from .puiseux import PuiseuxRational
from .pv import (
    b_values,
    construct_positive_a,
    default_truncation,
    delta_chain_count,
    generic_closed_form,
    pv_integral,
    pv_integral_closed_form_check,
    series_expansion,
)
from .validators import require_valid
from .zeta import genericity_witness_search, nd_pole_check, numerically_generic_locus, residue_exponents

LOGGER = logging.getLogger(__name__)

Handler = Callable[[JobSpec, Optional[Arrangement]], Dict[str, Any]]


class MotivicPVEngine:
    """
    Orchestration for one job document.

    Flow:
      JSON Schema validation of the job   -> ParseError (exit 2) if invalid
      JobSpec loading + arrangement parse -> validation errors (exit 2)
      command dispatch                    -> result payload or computation error (exit 3)
      JSON Schema validation of the result document

    Anything else that goes wrong becomes an InternalError document (exit 3).
    """

    JOB_SCHEMA = "job.schema.json"
    RESULT_SCHEMA = "result.schema.json"

    def __init__(self, spec_dir: Optional[Path] = None):
        # Repo layout: motivicpv/engine.py -> parent.parent is the repo root, where "spec/" lives.
        self._spec_dir = spec_dir or Path(__file__).resolve().parent.parent / "spec"
        self._handlers: Dict[Command, Handler] = {
            Command.EDGES: self._edges,
            Command.CLASSES: self._classes,
            Command.PV: self._pv,
            Command.DELTA: self._delta,
            Command.GENERIC_CLOSED_FORM: self._generic_closed_form,
            Command.FORMAL: self._formal,
            Command.POLES: self._poles,
            Command.NDPOLE: self._ndpole,
            Command.WITNESS_SEARCH: self._witness_search,
            Command.CHECK: self._check,
        }

    def _schema_path(self, schema_name: str) -> Path:
        return self._spec_dir / "schema" / schema_name

    # -------------------------
    # entry points
    # -------------------------
    def run_document(
        self,
        source: JsonLike,
        command: Optional[str] = None,
        overrides: Optional[Dict[str, Any]] = None,
    ) -> ResultDoc:
        raw: Dict[str, Any] = {}
        seed = (overrides or {}).get("seed")
        try:
            raw = load_json(source)
            instance = dict(raw)
            if command is not None:
                instance["command"] = command
            corpus = (overrides or {}).get("corpus")
            options = instance.get("options")
            if corpus is not None and (options is None or isinstance(options, dict)):
                instance["options"] = dict(options or {}, corpus=corpus)
            require_valid(instance, self._schema_path(self.JOB_SCHEMA))
            job = load_job(raw, command=command, overrides=overrides)
        except MotivicPVError as e:
            LOGGER.debug("job rejected before dispatch: %s", e.reason)
            return self.error_document(raw, e, seed)
        except Exception as e:
            LOGGER.exception("unexpected failure while loading the job")
            return self.error_document(raw, InternalError.wrap(e), seed)
        return self.run(job)

    def run(self, job: JobSpec) -> ResultDoc:
        provenance = self._provenance(job.options.seed)
        try:
            arrangement = None
            if job.hyperplanes is not None:
                arrangement = parse_arrangement(job.ambient_dim, [list(h) for h in job.hyperplanes])
                LOGGER.debug("dispatching %s on N=%d d=%d", job.command.value, arrangement.ambient_dim, arrangement.d)
            result = self._handlers[job.command](job, arrangement)
        except MotivicPVError as e:
            LOGGER.debug("%s failed: %s", job.command.value, e.name)
            return self.error_document(job.to_json(), e, job.options.seed)
        except Exception as e:
            LOGGER.exception("%s failed unexpectedly", job.command.value)
            return self.error_document(job.to_json(), InternalError.wrap(e), job.options.seed)
        exit_code = 1 if job.command == Command.CHECK and result["failures"] else 0
        return self._finish(ResultDoc(job=job.to_json(), result=result, provenance=provenance, exit_code=exit_code))

    def error_document(self, job: Dict[str, Any], error: MotivicPVError, seed: Optional[int] = None) -> ResultDoc:
        return self._finish(ResultDoc(
            job=job,
            result=None,
            provenance=self._provenance(seed if seed is not None else 0),
            error=error.to_dict(),
            exit_code=error.exit_code,
        ))

    def _provenance(self, seed: int) -> Dict[str, Any]:
        return {"tool": "motivicpv", "version": __version__, "seed": seed}

    def _finish(self, doc: ResultDoc) -> ResultDoc:
        try:
            require_valid(doc.to_dict(), self._schema_path(self.RESULT_SCHEMA))
            return doc
        except Exception as e:
            if doc.error is not None and doc.error.get("error") == InternalError.__name__:
                # the fallback document itself is rejected; emit it as is
                return doc
            LOGGER.exception("result document failed its schema")
            wrapped = e if isinstance(e, MotivicPVError) else InternalError.wrap(e)
            error = InternalError(f"invalid result document: {wrapped.reason}", wrapped.detail)
            return self._finish(ResultDoc(
                job=doc.job if isinstance(doc.job, dict) else {},
                result=None,
                provenance=self._provenance(0),
                error=error.to_dict(),
                exit_code=error.exit_code,
            ))

    # -------------------------
    # handlers
    # -------------------------
    def _edges(self, job: JobSpec, arrangement: Arrangement) -> Dict[str, Any]:
        lattice = edge_lattice(arrangement)
        mu = lattice.mobius
        rows = []
        for edge in lattice.S:
            row = edge.to_json()
            row["mobius"] = mu[edge.basis]
            row["dense"] = is_dense_edge(arrangement, edge)
            rows.append(row)
        return {
            "essential": is_essential(arrangement),
            "indecomposable": is_indecomposable(arrangement),
            "generic": is_generic(arrangement),
            "edge_count": len(lattice.edges),
            "S": rows,
            "chains": sum(1 for _ in lattice.chains()),
        }

    def _classes(self, job: JobSpec, arrangement: Arrangement) -> Dict[str, Any]:
        projective = projective_complement_class(arrangement)
        return {
            "affine_complement": lpoly_to_json(affine_complement_class(arrangement)),
            "projective_complement": lpoly_to_json(projective),
            "euler_characteristic": euler_characteristic(projective),
            "resolution": lpoly_to_json(resolution_class(arrangement)),
            "union": lpoly_to_json(arrangement_union_class(arrangement)),
        }

    def _pv(self, job: JobSpec, arrangement: Arrangement) -> Dict[str, Any]:
        a = job.exponents
        value = pv_integral(arrangement, a)
        scaled = value * PuiseuxRational.lpower(arrangement.n)
        return {
            "q": a.q,
            "pv": value.to_json(),
            "scaled_pv": scaled.to_json(),
            "closed_strata_agree": value == pv_integral_closed_form_check(arrangement, a),
            "b": [{"edge": w.to_json()["basis"], "b": str(v)} for w, v in b_values(arrangement, a).items()],
        }

    def _delta(self, job: JobSpec, arrangement: Arrangement) -> Dict[str, Any]:
        a = job.exponents
        constructed = a is None
        if constructed:
            a = construct_positive_a(arrangement, delta=job.options.delta)
        value = pv_integral(arrangement, a) * PuiseuxRational.lpower(arrangement.n)
        order = job.options.truncation or default_truncation(arrangement, a)
        series = series_expansion(value, order)
        delta = delta_chain_count(arrangement, a)
        return {
            "exponents": a.to_json(),
            "constructed": constructed,
            "series": series,
            "series_constant_term": series[0],
            "delta_chain_count": delta,
            "agree": series[0] == delta,
        }

    def _generic_closed_form(self, job: JobSpec, arrangement: Arrangement) -> Dict[str, Any]:
        value = generic_closed_form(arrangement.n, job.exponents)
        out: Dict[str, Any] = {"closed_form": value.to_json(), "generic": is_generic(arrangement)}
        out["matches_pv"] = value == pv_integral(arrangement, job.exponents) if out["generic"] else None
        return out

    def _formal(self, job: JobSpec, arrangement: Arrangement) -> Dict[str, Any]:
        f = formal_pv(arrangement)
        out = {"formal": f.to_json(), "is_zero": formal_is_zero(f)}
        if job.exponents is not None:
            out["specialized"] = specialize(f, job.exponents).to_json()
        return out

    def _poles(self, job: JobSpec, arrangement: Arrangement) -> Dict[str, Any]:
        f = formal_pv(arrangement)
        found = poles(f)
        rows = [
            {"edge": w.to_json(), "c": c.to_json(), "kappa": multiplicity(f, w), "is_pole": w in found}
            for w, c in f.denominator
        ]
        out: Dict[str, Any] = {"edges": rows, "pole_count": len(found), "reduced": None}
        if not found:
            reduced = reduce_formal(f)
            out["reduced"] = reduced.to_json() if reduced is not None else None
        return out

    def _ndpole(self, job: JobSpec, arrangement: Arrangement) -> Dict[str, Any]:
        alpha = residue_exponents(arrangement, job.multiplicities)
        cert = nd_pole_check(arrangement, job.multiplicities)
        out = cert.to_json()
        out["alpha"] = [{"edge": w.to_json()["basis"], "alpha": str(v)} for w, v in alpha.items()]
        return out

    def _witness_search(self, job: JobSpec, arrangement: Arrangement) -> Dict[str, Any]:
        rng = random.Random(job.options.seed)
        report = genericity_witness_search(arrangement, job.options.bound, rng=rng, samples=job.options.samples)
        out = report.to_json()
        out["linear_forms"] = [
            {"edge": w.to_json()["basis"], "coefficients": list(c)} for w, c in numerically_generic_locus(arrangement)
        ]
        return out

    def _check(self, job: JobSpec, arrangement: Optional[Arrangement]) -> Dict[str, Any]:
        entries = []
        if arrangement is not None:
            entries.append(CorpusEntry(name="input", arrangement=arrangement, tags=tags_for(arrangement)))
        if job.options.corpus is not None:
            entries.extend(corpus_by_name(job.options.corpus))
        _, report = run_theorem_suite(
            entries,
            samples=job.options.samples,
            seed=job.options.seed,
            bound=job.options.bound,
            truncation=job.options.truncation,
        )
        return report
