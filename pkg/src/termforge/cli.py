"""Command-line front end.

Payload goes to standard output, diagnostics to standard error.  Exit codes:
0 success, 1 validation errors, 2 syntax or usage error, 3 I/O error.
"""

from __future__ import annotations

import argparse
import os
import sys
from concurrent.futures import ThreadPoolExecutor

from .categories import builtin_registry, load_registry
from .collation import DEFAULT_PROFILE, collation_key, load_profile
from .errors import ParseError, TermforgeError
from .graph import tops
from .interchange import FORMATS, emit_dialect, guess_format, parse_dialect
from .lexical import build_term_index, find_concepts
from .merge import (BY_ENTRY_ID, BY_SHARED_TERM, PREFER_LEFT, PREFER_RIGHT, REPORT_ONLY,
                    MergePolicy, merge)
from .model import lookup_terms
from .termbase import Termbase
from .validation import validate

EXIT_OK, EXIT_INVALID, EXIT_USAGE, EXIT_IO = 0, 1, 2, 3
REGISTRY_ENV = "TERMFORGE_REGISTRY"


class _Fail(Exception):
    def __init__(self, code, line):
        super().__init__(line)
        self.code = code
        self.line = line


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise _Fail(EXIT_USAGE, f"usage error: {message}")


def _err(line):
    print(line, file=sys.stderr)


def _write_out(data: bytes, path=None):
    if path:
        try:
            with open(path, "wb") as fh:
                fh.write(data)
        except OSError as exc:
            raise _Fail(EXIT_IO, f"cannot write {path}: {exc.strerror}") from None
        return
    sys.stdout.flush()
    buf = getattr(sys.stdout, "buffer", None)
    if buf is not None:
        buf.write(data)
        buf.flush()
    else:
        sys.stdout.write(data.decode("utf-8"))


def _read(path) -> bytes:
    try:
        with open(path, "rb") as fh:
            return fh.read()
    except OSError as exc:
        raise _Fail(EXIT_IO, f"cannot read {path}: {exc.strerror}") from None


def _parse_failure(path, exc: ParseError):
    where = f"{exc.line}:{exc.column}" if exc.column is not None else f"{exc.line}"
    return _Fail(EXIT_USAGE, f"ERROR\t{exc.code}\t{path}:{where}\t{exc.message}")


def _load(path, dialect=None) -> Termbase:
    fmt = dialect or guess_format(path)
    data = _read(path)
    try:
        coll, graph, _ = parse_dialect(data, fmt)
    except ParseError as exc:
        raise _parse_failure(path, exc) from None
    except UnicodeDecodeError as exc:
        raise _Fail(EXIT_USAGE, f"ERROR\tSYNTAX\t{path}\tnot UTF-8: {exc.reason}") from None
    return Termbase(coll, graph)


def _registry(args):
    path = getattr(args, "registry", None) or os.environ.get(REGISTRY_ENV)
    if not path:
        return builtin_registry()
    try:
        return load_registry(path)
    except OSError as exc:
        raise _Fail(EXIT_IO, f"cannot read registry {path}: {exc.strerror}") from None
    except ParseError as exc:
        raise _parse_failure(path, exc) from None


def _emit(tb, fmt, reg):
    try:
        return emit_dialect(tb.collection, tb.graph, fmt, reg)
    except TermforgeError as exc:
        raise _Fail(EXIT_INVALID, f"ERROR\t{exc.code}\t-\t{exc.message}") from None


# -- subcommands --------------------------------------------------------------

def cmd_validate(args):
    reg = _registry(args)

    def check(path):
        try:
            tb = _load(path, args.dialect)
        except _Fail as fail:
            return fail, None
        return None, validate(tb.collection, tb.graph, reg)

    if len(args.files) > 1:
        with ThreadPoolExecutor() as pool:
            results = list(pool.map(check, args.files))
    else:
        results = [check(args.files[0])]
    status = EXIT_OK
    prefix = len(args.files) > 1
    for path, (fail, report) in zip(args.files, results):
        if fail is not None:
            _err(fail.line)
            status = max(status, fail.code)
            continue
        for line in report.lines():
            print(f"{path}\t{line}" if prefix else line)
        if report.errors or (args.strict and report.warnings):
            status = max(status, EXIT_INVALID)
    return status


def cmd_convert(args):
    reg = _registry(args)
    tb = _load(args.input, args.source)
    data, loss = _emit(tb, args.target, reg)
    _write_out(data, args.output)
    for line in loss.lines():
        _err(line)
    return EXIT_OK


def cmd_query(args):
    tb = _load(args.file, args.dialect)
    if args.concept:
        if not args.lang:
            raise _Fail(EXIT_USAGE, "usage error: --concept needs --lang")
        try:
            terms = lookup_terms(tb.collection, args.concept, args.lang)
        except TermforgeError as exc:
            raise _Fail(EXIT_USAGE, f"ERROR\t{exc.code}\t-\t{exc.message}") from None
        for tl in terms:
            print(tl.term)
    else:
        for eid in find_concepts(build_term_index(tb.collection), args.term, args.lang):
            print(eid)
    return EXIT_OK


def cmd_merge(args):
    reg = _registry(args)
    langs = frozenset(x for x in (args.langs or "").split(",") if x)
    try:
        policy = MergePolicy(args.identity, args.on_conflict, langs)
    except TermforgeError as exc:
        raise _Fail(EXIT_USAGE, f"usage error: {exc.message}") from None
    a, b = _load(args.a, args.dialect), _load(args.b, args.dialect)
    try:
        coll, graph, report = merge(a, b, policy, reg)
    except TermforgeError as exc:
        raise _Fail(EXIT_INVALID, f"ERROR\t{exc.code}\t-\t{exc.message}") from None
    fmt = args.dialect or (guess_format(args.output) if args.output else "gmt")
    data, loss = _emit(Termbase(coll, graph), fmt, reg)
    _write_out(data, args.output)
    for line in report.lines() + loss.lines():
        _err(line)
    return EXIT_OK


def cmd_sort(args):
    profile = DEFAULT_PROFILE
    if args.collation_profile:
        try:
            profile = load_profile(args.collation_profile)
        except OSError as exc:
            raise _Fail(EXIT_IO, f"cannot read {args.collation_profile}: {exc.strerror}") from None
        except ParseError as exc:
            raise _parse_failure(args.collation_profile, exc) from None
    tb = _load(args.file, args.dialect)
    rows = [(tl.term, te.id)
            for te in tb.collection.entries
            for ls in te.language_sections if ls.lang == args.lang
            for tl in ls.terms]
    rows.sort(key=lambda r: (collation_key(r[0], profile), r[1]))
    for term, eid in rows:
        print(f"{term}\t{eid}")
    return EXIT_OK


def cmd_stats(args):
    tb = _load(args.file, args.dialect)
    coll = tb.collection
    langs = sorted({ls.lang for te in coll.entries for ls in te.language_sections})
    n_terms = sum(len(ls.terms) for te in coll.entries for ls in te.language_sections)
    print(f"entries\t{len(coll.entries)}")
    print(f"languages\t{','.join(langs)}")
    print(f"terms\t{n_terms}")
    print(f"edges\t{len(tb.graph)}")
    print(f"tops\t{','.join(sorted(tops(tb.graph)))}")
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="termforge", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", parser_class=_Parser)
    sub.required = True

    def dialect_flag(p, name="--dialect", dest="dialect"):
        p.add_argument(name, dest=dest, choices=FORMATS,
                       help="file format (default: from the extension, else gmt)")

    p = sub.add_parser("validate", help="check termbase files")
    p.add_argument("files", nargs="+")
    dialect_flag(p)
    p.add_argument("--registry", help=f"data category registry file (or ${REGISTRY_ENV})")
    p.add_argument("--strict", action="store_true", help="warnings also fail")
    p.set_defaults(func=cmd_validate)

    p = sub.add_parser("convert", help="convert between formats through the pivot")
    p.add_argument("input")
    p.add_argument("--from", dest="source", choices=FORMATS, required=True)
    p.add_argument("--to", dest="target", choices=FORMATS, required=True)
    p.add_argument("-o", "--output")
    p.add_argument("--registry")
    p.set_defaults(func=cmd_convert)

    p = sub.add_parser("query", help="look up terms of a concept or concepts of a term")
    p.add_argument("file")
    group = p.add_mutually_exclusive_group(required=True)
    group.add_argument("--concept")
    group.add_argument("--term")
    p.add_argument("--lang")
    dialect_flag(p)
    p.set_defaults(func=cmd_query)

    p = sub.add_parser("merge", help="merge two termbases")
    p.add_argument("a")
    p.add_argument("b")
    p.add_argument("--identity", choices=(BY_ENTRY_ID, BY_SHARED_TERM), default=BY_ENTRY_ID)
    p.add_argument("--langs", help="comma-separated languages for by-shared-term")
    p.add_argument("--on-conflict", choices=(PREFER_LEFT, PREFER_RIGHT, REPORT_ONLY),
                   default=REPORT_ONLY)
    p.add_argument("-o", "--output")
    dialect_flag(p)
    p.add_argument("--registry")
    p.set_defaults(func=cmd_merge)

    p = sub.add_parser("sort", help="list the terms of one language in collation order")
    p.add_argument("file")
    p.add_argument("--lang", required=True)
    p.add_argument("--collation-profile")
    dialect_flag(p)
    p.set_defaults(func=cmd_sort)

    p = sub.add_parser("stats", help="counts and top concepts")
    p.add_argument("file")
    dialect_flag(p)
    p.set_defaults(func=cmd_stats)
    return parser


def run(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
        return args.func(args)
    except _Fail as fail:
        _err(fail.line)
        return fail.code


def main():
    sys.exit(run(sys.argv[1:]))


if __name__ == "__main__":
    main()
