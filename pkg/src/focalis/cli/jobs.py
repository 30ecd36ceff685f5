"""Job files, dispatch to the library, and result documents.

A job is a small YAML mapping::

    schema: 1
    command: evolute
    inputs:
      curve: "(t, i*t + t^3)"
    seed: 0

Unknown keys are rejected. Results are JSON documents with sorted keys, so
re-running a job gives byte-identical output.
"""

import json
from dataclasses import dataclass, field

import yaml

from ..algebra.gaussian import GaussianRational, coerce
from ..algebra.parse import parse_expression, parse_scalar, parse_tuple
from ..errors import FocalisError, ParseError, PreconditionError

SCHEMA = 1
TOP_KEYS = ("schema", "command", "inputs", "gram", "seed")

# command -> (required inputs, optional inputs with defaults)
COMMANDS = {
    "evolute": (("curve",), {"param": None}),
    "rotfocal": (("profile",), {"param": None}),
    "implicitize": (("curve",), {"params": None}),
    "imgdeg": ((), {"curve": None, "params": None, "polynomial": None}),
    "degree": (("kind",), {"m": None, "degrees": None, "d": None, "g": None,
                           "hk": None, "c1sq": None, "c2": None}),
    "inverse": (("o", "r"), {"mode": "standard", "params": None, "eliminate": True}),
    "isocurve": (("f0", "f1"), {"param": "t"}),
    "devel": (("f0", "f1"), {"param": "t", "ruling": "u"}),
    "check-t4": ((), {"surface": None, "params": None, "polynomial": None, "coords": None,
                      "vertex": None, "ruling": None}),
    "check-t5": (("o", "r"), {"params": None}),
    "product": (("m", "w"), {"mcurve": None, "wcurve": None, "samples": 20}),
    "sphere-fiber": (("polynomial", "o", "witness"), {"coords": None, "params": None,
                                                      "at_infinity": False}),
}

EXPRESSION_KEYS = {"curve", "profile", "polynomial", "surface", "o", "r", "f0", "f1", "m", "w",
                   "mcurve", "wcurve", "witness", "vertex"}

ERROR_CODES = {
    "PARSE_ERROR": "job file is not valid YAML or has the wrong shape",
    "UNKNOWN_SCHEMA": "schema version other than 1",
    "UNKNOWN_COMMAND": "command not in the command table",
    "UNKNOWN_KEY": "unexpected key at the top level or in inputs",
    "MISSING_INPUT": "a required input is absent",
    "MALFORMED_EXPRESSION": "an expression does not follow the grammar",
    "GRAM_NOT_SYMMETRIC": "gram matrix is not square or not symmetric",
    "GRAM_DEGENERATE": "gram matrix is singular",
    "NO_SAMPLES": "result has no parametrized component to sample",
    "PRECONDITION": "input violates a documented precondition",
    "UNSUPPORTED": "input is outside the implemented range",
    "INTERNAL_CONSISTENCY": "an internal cross-check failed",
}


@dataclass
class Job:
    command: str
    inputs: dict = field(default_factory=dict)
    gram: list = None
    seed: int = 0

    def to_dict(self):
        out = {"schema": SCHEMA, "command": self.command, "inputs": dict(self.inputs), "seed": self.seed}
        if self.gram is not None:
            out["gram"] = [list(row) for row in self.gram]
        return out


def _mark(exc):
    mark = getattr(exc, "problem_mark", None)
    if mark is None:
        return None, None
    return mark.line + 1, mark.column + 1


def _normalize_gram(gram):
    from ..euclid import QuadraticSpace

    if not isinstance(gram, list) or not gram or not all(isinstance(r, list) for r in gram):
        raise ParseError("gram must be a list of rows", "PARSE_ERROR")
    rows = [[str(parse_scalar(str(x))) for x in row] for row in gram]
    QuadraticSpace([[GaussianRational.parse(x) for x in row] for row in rows])
    return rows


def _check_expression(key, value):
    text = str(value)
    try:
        if key in ("r",) and isinstance(value, list):
            for v in value:
                parse_expression(str(v))
        elif text.lstrip().startswith("("):
            parse_tuple(text)
        else:
            parse_expression(text)
    except ParseError as exc:
        err = ParseError(f"input {key!r}: {exc}", "MALFORMED_EXPRESSION")
        err.column = exc.column
        raise err from None


def make_job(command, inputs=None, gram=None, seed=0):
    """Validated Job from Python values."""
    if command not in COMMANDS:
        raise ParseError(f"unknown command {command!r}", "UNKNOWN_COMMAND")
    required, optional = COMMANDS[command]
    inputs = dict(inputs or {})
    for k in inputs:
        if k not in required and k not in optional:
            raise ParseError(f"unknown input {k!r} for {command}", "UNKNOWN_KEY")
    for k in required:
        if k not in inputs:
            raise ParseError(f"missing input {k!r} for {command}", "MISSING_INPUT")
    for k, v in inputs.items():
        if k in EXPRESSION_KEYS and v is not None:
            _check_expression(k, v)
    if not isinstance(seed, int) or isinstance(seed, bool):
        raise ParseError("seed must be an integer", "PARSE_ERROR")
    if gram is not None:
        gram = _normalize_gram(gram)
    return Job(command, inputs, gram, seed)


def parse_job(text):
    """Parse a job file; errors carry line and column when YAML reports them."""
    try:
        data = yaml.safe_load(text)
    except yaml.YAMLError as exc:
        line, col = _mark(exc)
        raise ParseError(f"invalid YAML: {getattr(exc, 'problem', exc)}", "PARSE_ERROR", line, col) from None
    if not isinstance(data, dict):
        raise ParseError("job must be a mapping", "PARSE_ERROR", 1, 1)
    for k in data:
        if k not in TOP_KEYS:
            raise ParseError(f"unknown key {k!r}", "UNKNOWN_KEY")
    if data.get("schema") != SCHEMA:
        raise ParseError(f"unsupported schema {data.get('schema')!r}; expected {SCHEMA}", "UNKNOWN_SCHEMA")
    if "command" not in data:
        raise ParseError("missing command", "MISSING_INPUT")
    inputs = data.get("inputs") or {}
    if not isinstance(inputs, dict):
        raise ParseError("inputs must be a mapping", "PARSE_ERROR")
    return make_job(data["command"], inputs, data.get("gram"), data.get("seed", 0))


def render_job(job):
    """Canonical YAML text; ``parse_job(render_job(j)) == j``."""
    return yaml.safe_dump(job.to_dict(), sort_keys=True, default_flow_style=None, allow_unicode=True)


# --- result documents -----------------------------------------------------------


@dataclass
class ResultDocument:
    job: dict
    status: str
    payload: dict = field(default_factory=dict)
    error: dict = None
    exit_code: int = 0

    def to_dict(self):
        out = {"job": self.job, "status": self.status}
        if self.error is not None:
            out["error"] = self.error
        else:
            out["payload"] = self.payload
        return out

    def to_json(self):
        return json.dumps(self.to_dict(), sort_keys=True, indent=2, ensure_ascii=False) + "\n"

    @property
    def ok(self):
        return self.status == "ok"


def error_document(job_dict, exc):
    if isinstance(exc, FocalisError):
        code, msg, exit_code = exc.code, exc.message, exc.exit_code
    else:
        code, msg, exit_code = "INTERNAL_CONSISTENCY", f"{type(exc).__name__}: {exc}", 4
    return ResultDocument(job_dict, "error", error={"code": code, "message": msg}, exit_code=exit_code)


def run_job(job):
    """Dispatch to the owning module. Errors become error documents, never tracebacks."""
    from . import commands

    try:
        payload = commands.DISPATCH[job.command](job)
    except (FocalisError, ArithmeticError) as exc:
        return error_document(job.to_dict(), exc)
    if job.command == "imgdeg":
        payload["seed"] = job.seed
    return ResultDocument(job.to_dict(), "ok", payload)


# --- sample emission ---------------------------------------------------------------


def _fmt(z, digits):
    z = coerce(z)
    re, im = float(z.re), float(z.im)
    if not im:
        return format(re, f".{digits}g")
    if not re:
        return format(im, f".{digits}g") + "i"
    sign = "+" if im >= 0 else "-"
    return format(re, f".{digits}g") + sign + format(abs(im), f".{digits}g") + "i"


def _parametrized(payload, component=None):
    comps = list(payload.get("components", []))
    if payload.get("parametrization"):
        comps.insert(0, {"kind": "main", "parametrization": payload["parametrization"]})
    if component is not None:
        if isinstance(component, int) or str(component).isdigit():
            k = int(component)
            comps = comps[k:k + 1]
        else:
            comps = [c for c in comps if c.get("kind") == component]
    for c in comps:
        par = c.get("parametrization")
        if par and par.get("params"):
            return par
    return None


def emit_samples(result, count, fmt="csv", digits=12, component=None):
    """Exact parameter values with decimal coordinates for plotting (display only).

    ``component`` selects a component by index or kind; by default the
    first one with a positive-dimensional parametrization is used.
    """
    if fmt not in ("csv", "json"):
        raise PreconditionError(f"unknown sample format {fmt!r}", "PARSE_ERROR")
    payload = result.payload if isinstance(result, ResultDocument) else result
    par = _parametrized(payload or {}, component)
    if par is None:
        raise PreconditionError("result has no parametrized component", "NO_SAMPLES")
    params = par["params"]
    coords = [parse_expression(c, params) for c in par["coords"]]
    rows = []
    k = 0
    while len(rows) < count and k < 10 * count + 10:
        vals = {p: k for p in params}
        k += 1
        try:
            point = [_eval(c, vals) for c in coords]
        except ZeroDivisionError:
            continue
        rows.append(({p: str(v) for p, v in vals.items()}, [_fmt(x, digits) for x in point]))
    if fmt == "json":
        doc = {
            "display_only": True,
            "precision": digits,
            "params": params,
            "points": [{"params": pv, "coords": xs} for pv, xs in rows],
        }
        return json.dumps(doc, sort_keys=True, indent=2) + "\n"
    lines = [f"# display-only, {digits} significant digits"]
    lines.append(",".join(list(params) + [f"x{j + 1}" for j in range(len(coords))]))
    for pv, xs in rows:
        lines.append(",".join([pv[p] for p in params] + xs))
    return "\n".join(lines) + "\n"


def _eval(c, vals):
    from .._util import subs_any

    v = subs_any(c, vals)
    if not isinstance(v, GaussianRational):
        raise PreconditionError("coordinate depends on a symbolic constant", "NO_SAMPLES")
    return v


__all__ = [
    "COMMANDS",
    "ERROR_CODES",
    "Job",
    "ResultDocument",
    "emit_samples",
    "make_job",
    "parse_job",
    "render_job",
    "run_job",
]
