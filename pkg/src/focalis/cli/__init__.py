"""Command-line front end.

Usage::

    focalis <command> [key=value ...] [--job FILE] [--gram FILE] [--seed N]
            [--samples N --format csv|json] [--component K] [--out FILE]
    focalis batch JOB... --out-dir DIR [--workers N]

Exit codes: 0 ok, 2 parse error, 3 precondition error, 4 internal-consistency error.
"""

import argparse
import os
import sys
import tempfile
from concurrent.futures import ThreadPoolExecutor
from pathlib import Path

import yaml

from ..errors import FocalisError, ParseError
from .jobs import COMMANDS, Job, ResultDocument, emit_samples, error_document, make_job, parse_job, render_job, run_job

EXIT_OK, EXIT_PARSE, EXIT_PRECONDITION, EXIT_CONSISTENCY = 0, 2, 3, 4


def write_atomic(path, text):
    """Write via a temporary file in the same directory, then rename."""
    path = Path(path)
    path.parent.mkdir(parents=True, exist_ok=True)
    fd, tmp = tempfile.mkstemp(dir=path.parent, prefix=f".{path.name}.", suffix=".tmp")
    try:
        with os.fdopen(fd, "w", encoding="utf-8") as fh:
            fh.write(text)
        os.replace(tmp, path)
    except BaseException:
        if os.path.exists(tmp):
            os.unlink(tmp)
        raise


def _inline(pairs):
    inputs = {}
    for pair in pairs:
        key, sep, value = pair.partition("=")
        if not sep or not key:
            raise ParseError(f"inline argument {pair!r} is not key=value", "PARSE_ERROR")
        inputs[key.strip()] = yaml.safe_load(value) if value.strip().startswith("[") else value
    for k in ("eliminate", "at_infinity"):
        if isinstance(inputs.get(k), str):
            inputs[k] = inputs[k].lower() in ("1", "true", "yes")
    return inputs


def _load_gram(path):
    try:
        return yaml.safe_load(Path(path).read_text(encoding="utf-8"))
    except OSError as exc:
        raise ParseError(f"cannot read gram file: {exc}", "PARSE_ERROR") from None
    except yaml.YAMLError as exc:
        raise ParseError(f"gram file is not valid YAML: {exc}", "PARSE_ERROR") from None


def build_job(args):
    if args.job:
        try:
            text = Path(args.job).read_text(encoding="utf-8")
        except OSError as exc:
            raise ParseError(f"cannot read job file: {exc}", "PARSE_ERROR") from None
        job = parse_job(text)
        if args.command != "run" and job.command != args.command:
            raise ParseError(f"job file is for {job.command!r}, not {args.command!r}", "UNKNOWN_COMMAND")
        if args.inputs:
            raise ParseError("inline inputs cannot be combined with --job", "PARSE_ERROR")
        gram = job.gram
        seed = job.seed
    else:
        if args.command == "run":
            raise ParseError("'run' needs --job FILE", "MISSING_INPUT")
        job = make_job(args.command, _inline(args.inputs))
        gram, seed = None, 0
    if args.gram:
        gram = _load_gram(args.gram)
    if args.seed is not None:
        seed = args.seed
    return make_job(job.command, job.inputs, gram, seed)


def _parser():
    p = argparse.ArgumentParser(prog="focalis", description="Exact focal loci and inverse focal constructions.")
    p.add_argument("command", choices=sorted(COMMANDS) + ["run", "batch"], help="what to compute")
    p.add_argument("inputs", nargs="*", help="inline inputs as key=value (or job files for batch)")
    p.add_argument("--job", help="YAML job file")
    p.add_argument("--gram", help="YAML file with the Gram matrix")
    p.add_argument("--seed", type=int, help="seed for randomized steps (default 0)")
    p.add_argument("--samples", type=int, help="emit N display samples instead of the result document")
    p.add_argument("--format", choices=("csv", "json"), default="csv", help="sample format")
    p.add_argument("--component", help="sampled component: index or kind (e.g. circle)")
    p.add_argument("--digits", type=int, default=12, help="display precision for samples")
    p.add_argument("--out", help="write output here instead of stdout")
    p.add_argument("--out-dir", help="batch output directory")
    p.add_argument("--workers", type=int, default=1, help="batch worker count")
    return p


def _emit(text, out):
    if out:
        write_atomic(out, text)
    else:
        sys.stdout.write(text)


def run_batch(paths, out_dir, workers=1):
    """Run job files independently; each document is written atomically as ``<stem>.json``."""
    out_dir = Path(out_dir)

    def one(path):
        path = Path(path)
        try:
            job = parse_job(path.read_text(encoding="utf-8"))
            doc = run_job(job)
        except (FocalisError, OSError) as exc:
            doc = error_document({"file": path.name}, exc)
        write_atomic(out_dir / f"{path.stem}.json", doc.to_json())
        return doc.exit_code

    with ThreadPoolExecutor(max_workers=max(1, workers)) as pool:
        codes = list(pool.map(one, paths))
    return max(codes, default=0)


def main(argv=None):
    args = _parser().parse_args(argv)
    try:
        if args.command == "batch":
            if not args.out_dir:
                raise ParseError("batch needs --out-dir", "MISSING_INPUT")
            return run_batch(args.inputs, args.out_dir, args.workers)
        job = build_job(args)
    except FocalisError as exc:
        doc = error_document({"command": args.command}, exc)
        _emit(doc.to_json(), args.out)
        return doc.exit_code
    doc = run_job(job)
    if args.samples is not None and doc.ok:
        try:
            text = emit_samples(doc, args.samples, args.format, args.digits, args.component)
        except FocalisError as exc:
            doc = error_document(job.to_dict(), exc)
            _emit(doc.to_json(), args.out)
            return doc.exit_code
        _emit(text, args.out)
        return EXIT_OK
    _emit(doc.to_json(), args.out)
    return doc.exit_code


__all__ = ["Job", "ResultDocument", "build_job", "emit_samples", "main", "make_job", "parse_job",
           "render_job", "run_batch", "run_job", "write_atomic"]
