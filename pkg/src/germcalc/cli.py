"""Command-line front end: a small session language, a batch runner and a REPL.

Every query writes one JSON object per line to stdout (sorted keys, no
timings, so reruns are byte-identical) and a one-line summary to stderr.
"""

from __future__ import annotations

import argparse
import json
import os
import re
import sys
from dataclasses import dataclass, field as dc_field
from typing import Callable, TextIO

from . import multigerm as mg
from .germs import (
    Germ,
    GermIdeal,
    GeneratorStream,
    NotASuperset,
    NotIndexedBy,
    extend_indexing,
    is_invertible,
    local_radical_member_complex,
    member,
    restrict,
)
from .groebner import DEFAULT_GB_BUDGET
from .parser import ParseError, parse_poly, parse_template
from .poly import BasePoint, Polynomial
from .real import real_membership, real_radical_closure, refute_real_vanishing
from .scalars import Field, FieldMismatch
from .verdict import DEFAULT_CURVE_BUDGET, DEFAULT_ENUM_BUDGET, Budget, Verdict
from .verify import verify_verdict
from .witness import InvalidWitness, base_json, curve_from, text

EXIT_OK, EXIT_SCRIPT_ERROR, EXIT_DEFECT = 0, 1, 2


class ScriptError(Exception):
    def __init__(self, message: str, kind: str = "ScriptError", extra: dict | None = None):
        super().__init__(message)
        self.kind = kind
        self.extra = extra or {}


# -- lexical helpers -----------------------------------------------------------


_OPEN, _CLOSE = "([{", ")]}"


def split_top(s: str, sep: str) -> list:
    """Split on ``sep`` outside brackets and quotes."""
    out, depth, quote, cur = [], 0, None, []
    for ch in s:
        if quote:
            cur.append(ch)
            if ch == quote:
                quote = None
            continue
        if ch in "\"'":
            quote = ch
        elif ch in _OPEN:
            depth += 1
        elif ch in _CLOSE:
            depth -= 1
        if ch == sep and depth == 0:
            out.append("".join(cur))
            cur = []
        else:
            cur.append(ch)
    out.append("".join(cur))
    return out


def split_words(s: str) -> list:
    """Whitespace-separated words, keeping bracketed groups whole."""
    words, depth, cur = [], 0, []
    for ch in s.strip():
        if ch in _OPEN:
            depth += 1
        elif ch in _CLOSE:
            depth -= 1
        if ch.isspace() and depth == 0:
            if cur:
                words.append("".join(cur))
                cur = []
        else:
            cur.append(ch)
    if cur:
        words.append("".join(cur))
    return words


def strip_comment(line: str) -> str:
    return split_top(line, "#")[0]


def bracket_items(s: str, open_="[", close="]") -> list:
    s = s.strip()
    if not (s.startswith(open_) and s.endswith(close)):
        raise ScriptError(f"expected {open_}...{close}, got {s!r}")
    inner = s[1:-1].strip()
    if not inner:
        return []
    return [x.strip().strip("\"'") for x in split_top(inner, ",")]


def parse_dims(s: str) -> list:
    s = s.strip()
    m = re.fullmatch(r"(\d+)\s*\.\.\s*(\d+)", s)
    if m:
        a, b = int(m.group(1)), int(m.group(2))
        return list(range(a, b + 1))
    if s.startswith("{"):
        items = bracket_items(s, "{", "}")
    else:
        items = [x for x in s.split(",") if x.strip()]
    try:
        return sorted({int(x) for x in items})
    except ValueError:
        raise ScriptError(f"bad coordinate set {s!r}") from None


NAME_RE = re.compile(r"[A-Za-z][A-Za-z0-9_]*$")
_LET_BASE = 10 ** 9


# -- session -------------------------------------------------------------------------


@dataclass
class Session:
    field: Field = Field.REAL
    point: dict = dc_field(default_factory=dict)  # coordinate -> scalar text
    gb: int = DEFAULT_GB_BUDGET
    enum: int = DEFAULT_ENUM_BUDGET
    curve: int = DEFAULT_CURVE_BUDGET
    defs: dict = dc_field(default_factory=dict)  # name -> (kind, payload)
    _systems: dict = dc_field(default_factory=dict)

    def budget(self) -> Budget:
        return Budget(self.gb, self.enum, self.curve)

    def base(self, F: Field) -> BasePoint:
        coords = {}
        for t, v in self.point.items():
            c = parse_poly(v, F)
            if not c.is_constant():
                raise ScriptError(f"point coordinate {v!r} is not a constant")
            coords[t] = c.constant_term()
        return BasePoint(coords, F)

    # -- definitions
    def define(self, name: str, kind: str, payload):
        if not NAME_RE.match(name) or name.startswith("x_") or name in ("i", "k", "s"):
            raise ScriptError(f"invalid name {name!r}")
        if name in self.defs:
            raise ScriptError(f"name {name!r} is already defined", "DuplicateName")
        self.defs[name] = (kind, payload)

    def lookup(self, name: str, kind: str | tuple):
        kinds = (kind,) if isinstance(kind, str) else kind
        entry = self.defs.get(name)
        if entry is None:
            raise ScriptError(f"undefined name {name!r}", "UndefinedName")
        if entry[0] not in kinds:
            raise ScriptError(f"{name!r} is a {entry[0]}, expected {' or '.join(kinds)}")
        return entry

    # -- materialisation
    def poly(self, expr: str, F: Field) -> Polynomial:
        expr = expr.strip()
        lets = [n for n, (k, _) in self.defs.items() if k == "let"]
        symbols = {n: _LET_BASE + j for j, n in enumerate(lets)}
        p = parse_poly(expr, F, symbols=symbols)
        used = {v: self.poly(self.defs[n][1], F) for n, v in symbols.items() if v in p.support()}
        return p.substitute(used) if used else p

    def polys(self, s: str, F: Field) -> list:
        s = s.strip()
        if s.startswith("["):
            return [self.poly(x, F) for x in bracket_items(s)]
        kind, payload = self.lookup(s, ("ideal", "let"))
        if kind == "let":
            return [self.poly(payload, F)]
        return [self.poly(x, F) for x in payload]

    def stream(self, s: str, F: Field) -> GeneratorStream:
        s = s.strip()
        base = self.base(F)
        if s.startswith("[") or self.defs.get(s, ("",))[0] in ("ideal", "let"):
            return GeneratorStream(base, finite=self.polys(s, F))
        kind, (skind, data, centered) = self.lookup(s, "stream")
        if skind == "finite":
            return GeneratorStream(base, finite=self.polys(data, F))
        if skind == "coordinates":
            return GeneratorStream.coordinates(base)
        return GeneratorStream(base, templates=[parse_template(t) for t in data], centered=centered)

    def system(self, s: str, F: Field):
        s = s.strip()
        key = (s, F, tuple(sorted(self.point.items())))
        if key in self._systems:
            return self._systems[key]
        _, (skind, args) = self.lookup(s, "system")
        base = self.base(F)
        if skind == "zero":
            out = mg.zero_system(self.stream(args[0], F))
        elif skind == "point":
            out = mg.point_system(base, parse_dims(args[0]))
        elif skind == "full":
            out = mg.full_system(base)
        elif skind == "empty":
            out = mg.empty_system(base)
        elif skind == "constant":
            out = mg.constant_system(mg.SetGerm.of(self.polys(args[0], F), base))
        elif skind == "chain":
            germs = [mg.SetGerm.of([self.poly(x, F) for x in bracket_items(g)], base) for g in bracket_items(args[0])]
            index = mg.DirectedIndex.chain(range(len(germs)))
            out = mg.ExplicitSystem(index, dict(enumerate(germs)), base, budget=self.budget(), strict=not args[1])
        elif skind == "sequence":
            out = mg.SequenceSystem(self.stream(args[0], F), parse_template(args[1]))
        elif skind in ("meet", "join"):
            A, B = self.system(args[0], F), self.system(args[1], F)
            out = (mg.sys_intersection if skind == "meet" else mg.sys_union)(A, B)
        else:
            raise ScriptError(f"unknown system form {skind!r}")
        self._systems[key] = out
        return out


# -- commands -----------------------------------------------------------------------------


_FIELD_OPT = re.compile(r"\s--field\s+(\w+)\s*$")
_WINDOW_OPT = re.compile(r"\s(?:--)?window\s+(\d+)\s*$")


def _take_field(rest: str, session: Session):
    m = _FIELD_OPT.search(" " + rest)
    if m:
        return (" " + rest)[: m.start()].strip(), Field.parse(m.group(1))
    return rest, session.field


def _take_window(rest: str):
    m = _WINDOW_OPT.search(" " + rest)
    if m:
        return (" " + rest)[: m.start()].strip(), int(m.group(1))
    return rest, None


def _head(rest: str):
    words = split_words(rest)
    if not words:
        raise ScriptError("missing argument")
    first = words[0]
    return first, rest.strip()[len(first):].strip()


def _verdict_result(v: Verdict) -> dict:
    return v.to_json()


def _cmd_field(s: Session, rest, F):
    s.field = Field.parse(rest.strip())


def _cmd_point(s: Session, rest, F):
    rest = rest.strip()
    if not rest.startswith("{"):
        name, rest = _head(rest)
        if name == "origin" and not rest:
            s.point = {}
            return
    items = bracket_items(rest, "{", "}")
    point = {}
    for item in items:
        k, _, v = item.partition(":")
        try:
            point[int(k)] = v.strip()
        except ValueError:
            raise ScriptError(f"bad point entry {item!r}") from None
    s.point = point
    s._systems.clear()
    s.base(s.field)  # validate now


def _cmd_budget(s: Session, rest, F):
    for word in rest.split():
        k, _, v = word.partition("=")
        if k not in ("gb", "enum", "curve"):
            raise ScriptError(f"unknown budget {k!r}")
        setattr(s, k, int(v))


def _definition(rest: str):
    name, _, body = rest.partition("=")
    name = name.strip()
    if not body.strip():
        raise ScriptError("expected NAME = ...")
    return name, body.strip()


def _cmd_let(s: Session, rest, F):
    name, body = _definition(rest)
    if not re.fullmatch(r"[A-Za-z]+", name):
        raise ScriptError(f"germ names are letters only, got {name!r}")
    s.poly(body, F)  # reject bad expressions at definition time
    s.define(name, "let", body)


def _cmd_ideal(s: Session, rest, F):
    name, body = _definition(rest)
    items = bracket_items(body)
    for x in items:
        s.poly(x, F)
    s.define(name, "ideal", items)


def _cmd_stream(s: Session, rest, F):
    name, body = _definition(rest)
    words = split_words(body)
    kind = words[0]
    if kind == "coordinates":
        payload = ("coordinates", None, True)
    elif kind == "finite" and len(words) == 2:
        s.polys(words[1], F)
        payload = ("finite", words[1], False)
    elif kind == "templates" and len(words) >= 2:
        templates = bracket_items(words[1])
        for t in templates:
            parse_template(t)
        payload = ("templates", templates, "centered" in words[2:])
    else:
        raise ScriptError("stream forms: coordinates | finite IDEAL | templates [...] [centered]")
    s.define(name, "stream", payload)


def _cmd_system(s: Session, rest, F):
    name, body = _definition(rest)
    words = split_words(body)
    kind, args = words[0], words[1:]
    if kind in ("full", "empty") and not args:
        payload = (kind, ())
    elif kind in ("zero", "point", "constant") and len(args) == 1:
        payload = (kind, (args[0],))
    elif kind == "point" and len(args) > 1:
        payload = (kind, (" ".join(args),))
    elif kind == "chain" and 1 <= len(args) <= 2:
        payload = (kind, (args[0], len(args) == 2 and args[1] == "unchecked"))
    elif kind == "sequence" and len(args) >= 3 and args[1] == "tail":
        payload = (kind, (args[0], " ".join(args[2:]).strip("\"'")))
    elif kind in ("meet", "join") and len(args) == 2:
        for a in args:
            s.lookup(a, "system")
        payload = (kind, tuple(args))
    else:
        raise ScriptError("system forms: zero S | point DIMS | chain [[..],..] [unchecked] | "
                          "sequence S tail T | meet A B | join A B | constant [..] | full | empty")
    s.define(name, "system", payload)
    s.system(name, F)  # build (and validate) once


def _cmd_member(s: Session, rest, F):
    I, f = _head(rest)
    base = s.base(F)
    return _verdict_result(member(GermIdeal.of(s.polys(I, F), base), s.poly(f, F), s.budget()))


def _cmd_radmem(s: Session, rest, F):
    I, f = _head(rest)
    base = s.base(F)
    ideal = GermIdeal.of(s.polys(I, F), base)
    if F is Field.COMPLEX:
        v = local_radical_member_complex(ideal, s.poly(f, F), s.budget())
    else:
        v = real_membership(ideal, s.poly(f, F), budget=s.budget())
    return _verdict_result(v)


def _cmd_realclosure(s: Session, rest, F):
    I, targets = _head(rest)
    base = s.base(F)
    ts = [s.poly(x, F) for x in bracket_items(targets)] if targets.startswith("[") else [s.poly(targets, F)]
    res = real_radical_closure(GermIdeal.of(s.polys(I, F), base), ts, budget=s.budget())
    return {"targets": [{"target": text(t), "verdict": res[t].to_json()} for t in ts]}


def _cmd_refute(s: Session, rest, F):
    I, tail = _head(rest)
    f, _, curve = tail.partition(" curve ")
    base = s.base(F)
    z = curve_from({k: v for k, v in (e.split(":", 1) for e in bracket_items(curve.strip(), "{", "}"))}, base) if curve else None
    return _verdict_result(refute_real_vanishing(GermIdeal.of(s.polys(I, F), base), s.poly(f, F), z, s.budget()))


def _setgerm(s: Session, word: str, F: Field):
    return mg.SetGerm.of(s.polys(word, F), s.base(F))


def _cmd_contains(s: Session, rest, F):
    words = split_words(rest)
    if len(words) != 2:
        raise ScriptError("contains A B")
    return _verdict_result(mg.setgerm_contains(_setgerm(s, words[0], F), _setgerm(s, words[1], F), s.budget()))


def _two_systems(s: Session, rest, F):
    rest, window = _take_window(rest)
    words = split_words(rest)
    if len(words) != 2:
        raise ScriptError("expected two system names")
    return s.system(words[0], F), s.system(words[1], F), window


def _cmd_precedes(s: Session, rest, F):
    A, B, window = _two_systems(s, rest, F)
    return _verdict_result(mg.precedes(A, B, s.budget(), window))


def _cmd_equiv(s: Session, rest, F):
    A, B, window = _two_systems(s, rest, F)
    return _verdict_result(mg.equiv(A, B, s.budget(), window))


def _cmd_pointgerm(s: Session, rest, F):
    src, tail = _head(rest)
    if not tail.startswith("dims"):
        raise ScriptError("pointgerm SOURCE dims DIMS")
    dims = parse_dims(tail[4:])
    return _verdict_result(mg.is_point_multigerm(s.stream(src, F), dims, s.budget()))


def _cmd_zeromem(s: Session, rest, F):
    S, f = _head(rest)
    return _verdict_result(mg.zero_ideal_member(s.poly(f, F), s.system(S, F), s.budget()))


def _cmd_nullstellensatz(s: Session, rest, F):
    I, f = _head(rest)
    report = mg.nullstellensatz_check(GermIdeal.of(s.polys(I, F), s.base(F)), s.poly(f, F), s.budget())
    return report.to_json()


def _cmd_invertible(s: Session, rest, F):
    g = Germ(s.poly(rest, F), s.base(F))
    return {"invertible": is_invertible(g), "value": text(Polynomial.constant(g.value(), F))}


def _reindex(op: Callable, s: Session, rest, F):
    rest = rest.strip()
    cut = rest.rfind("{")
    if cut < 0:
        raise ScriptError("expected a coordinate set {..}")
    g = Germ(s.poly(rest[:cut], F), s.base(F))
    h = op(g, parse_dims(rest[cut:]))
    return {"germ": text(h.poly), "indexing_set": sorted(h.indexing_set)}


def _cmd_restrict(s, rest, F):
    return _reindex(restrict, s, rest, F)


def _cmd_extend(s, rest, F):
    return _reindex(extend_indexing, s, rest, F)


def _cmd_dump(s: Session, rest, F):
    defs = {}
    for name, (kind, payload) in s.defs.items():
        defs[name] = {"kind": kind, "definition": payload if not isinstance(payload, tuple) else list(payload)}
    return {
        "field": s.field.value,
        "point": base_json(s.base(s.field)),
        "budget": {"gb": s.gb, "enum": s.enum, "curve": s.curve},
        "definitions": defs,
    }


SETTERS = {
    "field": _cmd_field,
    "point": _cmd_point,
    "budget": _cmd_budget,
    "let": _cmd_let,
    "ideal": _cmd_ideal,
    "stream": _cmd_stream,
    "system": _cmd_system,
}

QUERIES = {
    "member": _cmd_member,
    "radmem": _cmd_radmem,
    "realclosure": _cmd_realclosure,
    "refute": _cmd_refute,
    "contains": _cmd_contains,
    "precedes": _cmd_precedes,
    "equiv": _cmd_equiv,
    "pointgerm": _cmd_pointgerm,
    "zeromem": _cmd_zeromem,
    "nullstellensatz": _cmd_nullstellensatz,
    "invertible": _cmd_invertible,
    "restrict": _cmd_restrict,
    "extend": _cmd_extend,
    "dump": _cmd_dump,
}


def _error_object(exc: Exception) -> dict:
    if isinstance(exc, ScriptError):
        out = {"type": exc.kind, "message": str(exc)}
        out.update(exc.extra)
        return out
    out = {"type": type(exc).__name__, "message": str(exc)}
    if isinstance(exc, NotIndexedBy):
        out["missing"] = sorted(exc.missing)
    if isinstance(exc, ParseError):
        out["column"] = exc.column
    return out


_HANDLED = (ScriptError, ParseError, NotIndexedBy, NotASuperset, FieldMismatch, ValueError, TypeError,
            InvalidWitness, KeyError)


def _summary(command: str, result) -> str:
    if isinstance(result, dict):
        if "outcome" in result:
            return result["outcome"]
        if "agreement" in result:
            return result["agreement"]
        if "invertible" in result:
            return str(result["invertible"]).lower()
        if "targets" in result:
            return ", ".join(f"{t['target']}: {t['verdict']['outcome']}" for t in result["targets"])
        if "germ" in result:
            return f"{result['germ']} on {result['indexing_set']}"
    return "ok"


class Runner:
    """Executes lines of the session language, writing reports to ``out``."""

    def __init__(self, session: Session | None = None, out: TextIO | None = None, err: TextIO | None = None):
        self.session = session or Session()
        self.out = out or sys.stdout
        self.err = err or sys.stderr
        self.defect = False

    def emit(self, obj: dict):
        self.out.write(json.dumps(obj, sort_keys=True) + "\n")
        self.out.flush()

    def run_line(self, line: str, lineno: int) -> bool:
        """Run every command on a line; False after the first error."""
        for part in split_top(strip_comment(line), ";"):
            part = part.strip()
            if not part:
                continue
            if not self.run_command(part, lineno):
                return False
        return True

    def run_command(self, cmd: str, lineno: int) -> bool:
        keyword, _, rest = cmd.partition(" ")
        s = self.session
        try:
            rest, F = _take_field(rest, s)
            if keyword in SETTERS:
                SETTERS[keyword](s, rest, F)
                return True
            if keyword not in QUERIES:
                raise ScriptError(f"unknown command {keyword!r}", "UnknownCommand")
            result = QUERIES[keyword](s, rest, F)
        except _HANDLED as exc:
            err = _error_object(exc)
            self.emit({"command": keyword, "line": lineno, "input": cmd, "error": err})
            self.err.write(f"line {lineno}: {keyword}: error: {err['type']}: {err['message']}\n")
            return False
        report = {"command": keyword, "line": lineno, "input": cmd, "field": F.value, "result": result}
        if keyword == "nullstellensatz" and result.get("agreement") == "disagree":
            self.defect = True
        self.emit(report)
        self.err.write(f"line {lineno}: {keyword}: {_summary(keyword, result)}\n")
        return True


def run_script(text_in: str, out: TextIO | None = None, err: TextIO | None = None, session: Session | None = None) -> int:
    runner = Runner(session, out, err)
    for lineno, line in enumerate(text_in.splitlines(), start=1):
        if not runner.run_line(line, lineno):
            return EXIT_SCRIPT_ERROR
    return EXIT_DEFECT if runner.defect else EXIT_OK


def repl(inp: TextIO | None = None, out: TextIO | None = None, err: TextIO | None = None,
         session: Session | None = None, history: TextIO | None = None, prompt: bool = True) -> int:
    inp, err = inp or sys.stdin, err or sys.stderr
    runner = Runner(session, out, err)
    lineno = 0
    while True:
        if prompt:
            err.write("germcalc> ")
            err.flush()
        line = inp.readline()
        if not line:
            break
        lineno += 1
        if history is not None:
            history.write(line if line.endswith("\n") else line + "\n")
            history.flush()
        runner.run_line(line.rstrip("\n"), lineno)
    return EXIT_DEFECT if runner.defect else EXIT_OK


def verify_reports(text_in: str, out: TextIO | None = None) -> int:
    """Verify every conclusive verdict in a JSON document or JSON-lines report."""
    out = out or sys.stdout
    text_in = text_in.strip()
    if not text_in:
        return EXIT_OK
    try:
        docs = [json.loads(text_in)]
    except json.JSONDecodeError:
        docs = [json.loads(line) for line in text_in.splitlines() if line.strip()]
    failures = 0
    for n, doc in enumerate(docs, start=1):
        for path, verdict in _verdicts_in(doc):
            try:
                verify_verdict(verdict)
                status = {"valid": True}
            except InvalidWitness as exc:
                failures += 1
                status = {"valid": False, "reason": str(exc)}
            out.write(json.dumps(dict(status, document=n, path=path), sort_keys=True) + "\n")
    return EXIT_OK if failures == 0 else EXIT_SCRIPT_ERROR


def _verdicts_in(doc, path="$"):
    """Top-level conclusive verdicts (and Nullstellensatz reports) inside a report object."""
    if isinstance(doc, dict):
        if doc.get("kind") == "nullstellensatz" and "agreement" in doc:
            yield path, doc
            return
        if "outcome" in doc and "witness" in doc:
            if doc["outcome"] in ("proved", "refuted"):
                yield path, doc
            return
        for k in sorted(doc):
            yield from _verdicts_in(doc[k], f"{path}.{k}")
    elif isinstance(doc, list):
        for i, x in enumerate(doc):
            yield from _verdicts_in(x, f"{path}[{i}]")


# -- entry point -----------------------------------------------------------------------


def budgets_from_env(env=os.environ) -> dict:
    out = {}
    raw = env.get("GERMCALC_BUDGETS", "")
    for item in re.split(r"[,\s]+", raw.strip()):
        if not item:
            continue
        k, _, v = item.partition("=")
        if k not in ("gb", "enum", "curve") or not v.isdigit():
            raise SystemExit(f"germcalc: bad GERMCALC_BUDGETS entry {item!r}")
        out[k] = int(v)
    return out


def _session_from_args(args) -> Session:
    s = Session()
    for k, v in budgets_from_env().items():
        setattr(s, k, v)
    for k in ("gb", "enum", "curve"):
        v = getattr(args, f"{k}_budget", None)
        if v is not None:
            setattr(s, k, v)
    if getattr(args, "field", None):
        s.field = Field.parse(args.field)
    return s


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="germcalc", description="Exact reasoning about ideals of polynomial germs.")
    sub = p.add_subparsers(dest="cmd", required=True)

    def budget_flags(sp):
        sp.add_argument("--gb-budget", type=int, help="pair reductions per basis computation")
        sp.add_argument("--enum-budget", type=int, help="fin(I) subsets examined")
        sp.add_argument("--curve-budget", type=int, help="curve candidates tried")
        sp.add_argument("--field", choices=["real", "complex"], help="initial session field")

    run = sub.add_parser("run", help="run a script (use - for standard input)")
    run.add_argument("script")
    budget_flags(run)
    rp = sub.add_parser("repl", help="interactive session")
    rp.add_argument("--history", help="append every input line to this file")
    budget_flags(rp)
    vw = sub.add_parser("verify-witness", help="replay witnesses in a JSON verdict or report")
    vw.add_argument("json", help="file path, - for standard input, or an inline JSON object")
    return p


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    if args.cmd == "run":
        src = sys.stdin.read() if args.script == "-" else open(args.script, encoding="utf-8").read()
        return run_script(src, session=_session_from_args(args))
    if args.cmd == "repl":
        hist = open(args.history, "a", encoding="utf-8") if args.history else None
        try:
            return repl(session=_session_from_args(args), history=hist, prompt=sys.stdin.isatty())
        finally:
            if hist:
                hist.close()
    arg = args.json
    if arg == "-":
        data = sys.stdin.read()
    elif arg.lstrip().startswith("{"):
        data = arg
    else:
        data = open(arg, encoding="utf-8").read()
    return verify_reports(data)


if __name__ == "__main__":
    sys.exit(main())
