"""Command-line driver: algebra files, module expressions and JSON reports.

Algebra file format (``#`` starts a comment)::

    field p = 2
    quiver
      vertices: 1 2 3
      a: 1 -> 2
      b: 1 -> 3
    relations
      b*a
      c*b + 2 d*a
    nilpotency L = 2

Words compose right to left (``b*a`` is ``a`` followed by ``b``). Instead of
``quiver``/``relations``/``nilpotency`` a ``constants`` block may list a
basis, the unit, the primitive idempotents and the nonzero products::

    constants
      basis: e x
      unit: e
      idempotents: e
      e*e = e
      e*x = x
      x*e = x

Module expressions: ``S<v>``, ``P<v>``, ``I<v>``, ``regular``, ``D(...)``,
``Tr(...)``, ``dual(...)``, ``syzygy(k, ...)``, ``op(...)`` and sums joined
by ``+``. Atoms are left modules; ``op(...)`` builds its argument over the
opposite algebra, and ``D``, ``Tr`` and ``dual`` switch sides. A path to a
JSON file with ``{"dim": d, "generators": {...}}`` (optionally
``"side": "right"``) is accepted too.
"""

from __future__ import annotations

import argparse
import json
import os
import re
import sys
import time
from dataclasses import dataclass

import numpy as np

from . import __version__
from .algebra import Algebra, AlgebraError, Presentation, QuiverSpec, build_algebra, build_from_constants, is_prime, regular_module
from .gorenstein import (
    INCONCLUSIVE,
    REFUTED,
    THEOREMS,
    Caps,
    explore_purity_question,
    findim_bounds,
    gorenstein_profile,
    ideal_reflexivity_report,
    in_c_class,
    nakayama_report,
    verify,
)
from .homology import (
    InconsistencyError,
    d_class_chain,
    dims,
    dominant_dimension,
    eval_report,
    fmt,
    grade_report,
    lambda_dual,
    min_inj_resolution,
    min_proj_resolution,
    purity_classify,
    reduced_grade,
    regular_inj_resolution,
    syzygy,
    transpose,
)
from .modules import ModuleError, direct_sum, duality_D, from_payload, injective, projective, simple, to_payload

SCHEMA_VERSION = 1
EXIT_OK, EXIT_USAGE, EXIT_REFUTED, EXIT_INCONCLUSIVE = 0, 1, 2, 3

FIXTURE_DIR = os.path.join(os.path.dirname(__file__), "fixtures")


class ParseError(ValueError):
    def __init__(self, message, line=None, col=None):
        self.line, self.col = line, col
        where = "" if line is None else (f"{line}: " if col is None else f"{line}:{col}: ")
        super().__init__(where + message)


# ---------------------------------------------------------------------------
# algebra files


@dataclass
class ConstantsSpec:
    p: int
    basis: list
    unit: dict
    idempotents: list
    products: dict  # (label, label) -> {label: coeff}


_NAME = r"[A-Za-z_][A-Za-z0-9_']*|[0-9]+"
_WORD_RE = re.compile(r"\s*([+-])?\s*(\d+)?\s*((?:%s)(?:\s*\*\s*(?:%s))*)\s*" % (_NAME, _NAME))


def _natural_key(name):
    return (0, int(name), "") if name.isdigit() else (1, 0, name)


def _strip(raw):
    return raw.split("#", 1)[0].rstrip()


def _parse_sum(text, lineno, col0, allowed=None):
    """'2 b*a - c*d' -> {('b','a'): 2, ('c','d'): -1}  (words as written, left to right)."""
    out = {}
    pos = 0
    text = text.rstrip()
    if not text.strip():
        raise ParseError("empty expression", lineno, col0 + 1)
    first = True
    while pos < len(text):
        m = _WORD_RE.match(text, pos)
        if not m or m.end() == pos:
            raise ParseError(f"cannot parse term near {text[pos:]!r}", lineno, col0 + pos + 1)
        sign, coeff, word = m.group(1), m.group(2), m.group(3)
        if sign is None and not first:
            raise ParseError("terms must be joined by + or -", lineno, col0 + m.start(3) + 1)
        letters = tuple(w.strip() for w in word.split("*"))
        if allowed is not None:
            for w in letters:
                if w not in allowed:
                    raise ParseError(f"unknown symbol {w!r}", lineno, col0 + m.start(3) + word.find(w) + 1)
        c = int(coeff) if coeff else 1
        if sign == "-":
            c = -c
        out[letters] = out.get(letters, 0) + c
        pos = m.end()
        first = False
    return out


def parse_algebra_file(text: str):
    """Return a :class:`Presentation` or a :class:`ConstantsSpec`; raise ParseError with a position."""
    p = None
    section = None
    vertices, arrows = None, []
    relations = []
    nilpotency = None
    cbasis, cunit, cidem, cprod = None, None, None, {}
    seen_constants = False
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = _strip(raw)
        if not line.strip():
            continue
        indent = len(line) - len(line.lstrip())
        body = line.strip()
        col = indent + 1
        m = re.fullmatch(r"field\s+p\s*=\s*(\S+)", body)
        if m:
            try:
                p = int(m.group(1))
            except ValueError:
                raise ParseError("field characteristic must be an integer", lineno, col + body.find(m.group(1))) from None
            if not is_prime(p):
                raise ParseError(f"field characteristic {p} is not prime", lineno, col + body.find(m.group(1)))
            section = None
            continue
        m = re.fullmatch(r"nilpotency\s+L\s*=\s*(\S+)", body)
        if m:
            if not m.group(1).isdigit() or int(m.group(1)) < 1:
                raise ParseError("nilpotency must be a positive integer", lineno, col + body.find(m.group(1)))
            nilpotency = int(m.group(1))
            section = None
            continue
        if body in ("quiver", "relations", "constants"):
            section = body
            if body == "quiver":
                vertices = vertices or []
            if body == "constants":
                seen_constants = True
            continue
        if section == "quiver":
            m = re.fullmatch(r"vertices\s*:\s*(.*)", body)
            if m:
                names = m.group(1).replace(",", " ").split()
                for v in names:
                    if not re.fullmatch(_NAME, v):
                        raise ParseError(f"bad vertex name {v!r}", lineno, col + body.find(v))
                    if v in vertices:
                        raise ParseError(f"duplicate vertex {v!r}", lineno, col + body.find(v))
                    vertices.append(v)
                continue
            m = re.fullmatch(r"(%s)\s*:\s*(%s)\s*->\s*(%s)" % (_NAME, _NAME, _NAME), body)
            if m:
                name, s, t = m.groups()
                for v, g in ((s, 2), (t, 3)):
                    if v not in vertices:
                        raise ParseError(f"arrow {name!r} uses undeclared vertex {v!r}", lineno, col + m.start(g))
                if name in vertices or any(a[0] == name for a in arrows):
                    raise ParseError(f"duplicate name {name!r}", lineno, col)
                arrows.append((name, s, t))
                continue
            raise ParseError("expected 'vertices: ...' or 'name: src -> tgt'", lineno, col)
        if section == "relations":
            if vertices is None:
                raise ParseError("relations before quiver", lineno, col)
            amap = {a[0]: a for a in arrows}
            terms = _parse_sum(body, lineno, indent, allowed=set(amap))
            rel = {}
            for word, c in terms.items():
                trav = tuple(reversed(word))
                if len(trav) < 2:
                    raise ParseError(f"relation term {'*'.join(word)!r} has length < 2", lineno, col)
                for x, y in zip(trav, trav[1:]):
                    if amap[x][2] != amap[y][1]:
                        raise ParseError(f"word {'*'.join(word)!r} is not composable", lineno, col + body.find(word[0]))
                rel[trav] = rel.get(trav, 0) + c
            relations.append(rel)
            continue
        if section == "constants":
            m = re.fullmatch(r"(basis|unit|idempotents)\s*:\s*(.*)", body)
            if m:
                key, val = m.groups()
                if key == "basis":
                    cbasis = val.replace(",", " ").split()
                    if len(set(cbasis)) != len(cbasis) or not cbasis:
                        raise ParseError("basis labels must be distinct and nonempty", lineno, col)
                    continue
                if cbasis is None:
                    raise ParseError("basis must come first", lineno, col)
                off = indent + body.find(val)
                if key == "unit":
                    cunit = _linear(val, lineno, off, cbasis)
                else:
                    cidem = [_linear(part, lineno, off, cbasis) for part in val.split(",")]
                continue
            m = re.fullmatch(r"(%s)\s*\*\s*(%s)\s*=\s*(.*)" % (_NAME, _NAME), body)
            if m:
                if cbasis is None:
                    raise ParseError("basis must come first", lineno, col)
                x, y, val = m.groups()
                for s_ in (x, y):
                    if s_ not in cbasis:
                        raise ParseError(f"unknown basis label {s_!r}", lineno, col + body.find(s_))
                cprod[(x, y)] = {} if val.strip() == "0" else _linear(val, lineno, indent + body.find(val), cbasis)
                continue
            raise ParseError("expected 'basis:', 'unit:', 'idempotents:' or 'x*y = ...'", lineno, col)
        raise ParseError(f"unexpected line {body!r}", lineno, col)
    if p is None:
        raise ParseError("missing 'field p = <prime>'")
    if seen_constants:
        if cbasis is None or cunit is None or cidem is None:
            raise ParseError("constants block needs basis, unit and idempotents")
        return ConstantsSpec(p, cbasis, cunit, cidem, cprod)
    if vertices is None:
        raise ParseError("missing quiver block")
    if nilpotency is None:
        raise ParseError("missing 'nilpotency L = <int>'")
    verts = tuple(sorted(vertices, key=_natural_key))
    arrs = tuple(sorted(arrows))
    try:
        return Presentation(QuiverSpec(verts, arrs), tuple(relations), nilpotency, p)
    except AlgebraError as exc:
        raise ParseError(str(exc)) from None


def _linear(text, lineno, col0, basis):
    terms = _parse_sum(text, lineno, col0, allowed=set(basis))
    out = {}
    for word, c in terms.items():
        if len(word) != 1:
            raise ParseError("expected a linear combination of basis labels", lineno, col0 + 1)
        out[word[0]] = out.get(word[0], 0) + c
    return out


def build_from_parsed(parsed, name=None) -> Algebra:
    if isinstance(parsed, Presentation):
        return build_algebra(parsed, name=name)
    n = len(parsed.basis)
    idx = {b: i for i, b in enumerate(parsed.basis)}

    def vec(d):
        v = np.zeros(n, dtype=np.int64)
        for k, c in d.items():
            v[idx[k]] += c
        return v % parsed.p

    consts = np.zeros((n, n, n), dtype=np.int64)
    for (x, y), d in parsed.products.items():
        consts[idx[x], idx[y]] = vec(d)
    return build_from_constants(
        n, consts, vec(parsed.unit), [vec(e) for e in parsed.idempotents], parsed.p, basis_labels=parsed.basis, name=name
    )


def load_algebra(path: str) -> Algebra:
    if not os.path.exists(path) and os.path.exists(os.path.join(FIXTURE_DIR, path)):
        path = os.path.join(FIXTURE_DIR, path)
    with open(path, encoding="utf-8") as fh:
        text = fh.read()
    name = os.path.splitext(os.path.basename(path))[0]
    parsed = parse_algebra_file(text)
    try:
        return build_from_parsed(parsed, name=name)
    except AlgebraError as exc:
        raise ParseError(str(exc)) from None


# ---------------------------------------------------------------------------
# module expressions


_TOKEN = re.compile(r"\s*(\(|\)|,|\+|[A-Za-z_][A-Za-z0-9_']*|[0-9]+)")


def _tokens(text):
    pos, out = 0, []
    text = text.rstrip()
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if not m:
            raise ParseError(f"unexpected character {text[pos]!r}", 1, pos + 1)
        out.append((m.group(1), m.start(1) + 1))
        pos = m.end()
    return out


class _ModuleParser:
    def __init__(self, alg, text):
        self.alg = alg
        self.toks = _tokens(text)
        self.i = 0

    def peek(self):
        return self.toks[self.i][0] if self.i < len(self.toks) else None

    def take(self, expect=None):
        if self.i >= len(self.toks):
            raise ParseError("unexpected end of module expression", 1, None)
        tok, col = self.toks[self.i]
        if expect is not None and tok != expect:
            raise ParseError(f"expected {expect!r}, found {tok!r}", 1, col)
        self.i += 1
        return tok, col

    def parse(self):
        m = self.expr(self.alg)
        if self.peek() is not None:
            raise ParseError(f"trailing input {self.peek()!r}", 1, self.toks[self.i][1])
        return m

    def expr(self, alg):
        parts = [self.term(alg)]
        while self.peek() == "+":
            self.take()
            parts.append(self.term(alg))
        if len(parts) == 1:
            return parts[0]
        first = parts[0].algebra
        if any(x.algebra is not first for x in parts):
            raise ParseError("summands live over different sides", 1, None)
        return direct_sum(*parts, name="+".join(x.name or "?" for x in parts))

    def _wrapped(self, alg):
        self.take("(")
        m = self.expr(alg)
        self.take(")")
        return m

    def term(self, alg):
        tok, col = self.take()
        if tok == "regular":
            m = regular_module(alg)
            return m
        if tok in ("D", "Tr", "dual", "op", "syzygy"):
            if tok == "op":
                inner = self._wrapped(alg.opposite)
                return inner
            if tok == "syzygy":
                self.take("(")
                k, kcol = self.take()
                if not k.isdigit():
                    raise ParseError("syzygy index must be a non-negative integer", 1, kcol)
                self.take(",")
                inner = self.expr(alg)
                self.take(")")
                out, _ = syzygy(inner, int(k))
                out.name = f"syzygy({k},{inner.name})"
                return out
            inner = self._wrapped(alg)
            if tok == "D":
                return duality_D(inner)
            if tok == "Tr":
                return transpose(inner)
            out = lambda_dual(inner).value
            out.name = f"dual({inner.name})"
            return out
        m = re.fullmatch(r"([SPI])(.+)", tok)
        if m:
            kind, v = m.groups()
            if v not in alg.vertex_names:
                raise ParseError(f"unknown vertex {v!r}", 1, col + 1)
            i = alg.vertex_names.index(v)
            return {"S": simple, "P": projective, "I": injective}[kind](alg, i)
        raise ParseError(f"unknown module constructor {tok!r}", 1, col)


def parse_module(alg, text):
    """Evaluate a module expression over ``alg`` (left modules unless wrapped in op(...))."""
    return _ModuleParser(alg, text).parse()


def load_module(alg, arg, json_file=None):
    path = json_file or (arg if arg and os.path.isfile(arg) else None)
    if path:
        with open(path, encoding="utf-8") as fh:
            payload = json.load(fh)
        side = payload.get("side", "left")
        if side not in ("left", "right"):
            raise ParseError(f"bad side {side!r}")
        base = alg if side == "left" else alg.opposite
        return from_payload(base, payload, name=payload.get("name") or os.path.basename(path))
    return parse_module(alg, arg)


def side_of(m, alg):
    return "left" if m.algebra is alg else "right"


# ---------------------------------------------------------------------------
# commands


def _need_module(args, alg):
    if args.module is None and args.module_file is None:
        raise UsageError("this command needs --module or --module-file")
    return load_module(alg, args.module, args.module_file)


class UsageError(ValueError):
    pass


def _names(alg, mults):
    return {alg.vertex_names[v]: int(k) for v, k in enumerate(mults) if k}


def cmd_profile(alg, args, caps):
    prof = gorenstein_profile(alg, caps.cap)
    out = prof.as_dict()
    out["fd_first_term_left"] = fmt(prof.left.fd[0]) if prof.left.fd else None
    out["fd_first_term_right"] = fmt(prof.right.fd[0]) if prof.right.fd else None
    out["one_gorenstein"] = prof.is_k_gorenstein(1)
    return out, EXIT_OK


def cmd_dims(alg, args, caps):
    m = _need_module(args, alg)
    out = {"module": m.name, "side": side_of(m, alg), "dim_vector": list(m.dim_vector)}
    out.update(dims(m, caps.cap).as_dict())
    return out, EXIT_OK


def cmd_grade(alg, args, caps):
    m = _need_module(args, alg)
    rep = grade_report(m, caps.cap, caps.lattice_cap)
    out = {"module": m.name, "side": side_of(m, alg)}
    out.update(rep.as_dict())
    return out, EXIT_OK if rep.strong_complete else EXIT_INCONCLUSIVE


def cmd_transpose(alg, args, caps):
    m = _need_module(args, alg)
    tr = transpose(m)
    out = {
        "module": m.name,
        "side": side_of(m, alg),
        "transpose": {"side": side_of(tr, alg), "dim_vector": list(tr.dim_vector), **to_payload(tr)},
    }
    return out, EXIT_OK


def cmd_eval(alg, args, caps):
    m = _need_module(args, alg)
    try:
        rep = eval_report(m)
    except InconsistencyError as exc:
        return {"module": m.name, "error": str(exc)}, EXIT_REFUTED
    out = {"module": m.name, "side": side_of(m, alg)}
    out.update(rep.as_dict())
    return out, EXIT_OK


def cmd_inj_res(alg, args, caps):
    m = _need_module(args, alg)
    res = min_inj_resolution(m, caps.cap)
    out = {
        "module": m.name,
        "side": side_of(m, alg),
        "terms": [_names(m.algebra, x) for x in res.multiplicities],
        "terminated": res.terminated,
        "id": fmt(res.id()),
    }
    return out, EXIT_OK


def cmd_proj_res(alg, args, caps):
    m = _need_module(args, alg)
    res = min_proj_resolution(m, caps.cap)
    out = {
        "module": m.name,
        "side": side_of(m, alg),
        "terms": [_names(m.algebra, x) for x in res.multiplicities()],
        "terminated": res.terminated,
        "pd": fmt(res.pd()),
        "minimal": res.is_minimal(),
        "exact": res.is_exact(),
    }
    return out, EXIT_OK


def cmd_dominant(alg, args, caps):
    res = regular_inj_resolution(alg, caps.cap)
    out = {
        "dominant_dimension": fmt(dominant_dimension(alg, caps.cap)),
        "regular_injective_resolution": [_names(alg, x) for x in res.multiplicities],
    }
    return out, EXIT_OK


def cmd_purity(alg, args, caps):
    m = _need_module(args, alg)
    pur = purity_classify(m, caps.lattice_cap, caps.cap)
    out = {"module": m.name, "side": side_of(m, alg)}
    out.update(pur.as_dict())
    out["c_classes"] = {str(n): in_c_class(m, n, caps.cap) for n in range(3)}
    return out, EXIT_OK if pur.pure is not None else EXIT_INCONCLUSIVE


def cmd_dclass(alg, args, caps):
    m = _need_module(args, alg)
    chain = d_class_chain(m, args.k)
    stages = []
    for i, st in enumerate(chain.stages, start=1):
        stages.append({"index": i, "dim_vector": list(st.dim_vector), "reduced_grade": fmt(reduced_grade(st, i + 1))})
    out = {"module": m.name, "k": args.k, "complete": chain.complete, "failed_stage": chain.failed_stage, "stages": stages}
    return out, EXIT_OK


def _status_exit(verdicts):
    statuses = {v.status for v in verdicts}
    if REFUTED in statuses:
        return EXIT_REFUTED
    if INCONCLUSIVE in statuses:
        return EXIT_INCONCLUSIVE
    return EXIT_OK


def cmd_verify(alg, args, caps):
    target = args.theorem
    if target == "all":
        ids = list(THEOREMS)
    elif target in THEOREMS:
        ids = [target]
    else:
        raise UsageError(f"unknown theorem id {target!r}; choose from: all, " + ", ".join(THEOREMS))
    verdicts = [verify(t, alg, caps) for t in ids]
    summary = {s: sum(v.status == s for v in verdicts) for s in ("verified", "refuted", "inconclusive")}
    out = {"summary": summary, "verdicts": [v.as_dict() for v in verdicts]}
    return out, _status_exit(verdicts)


def cmd_explore(alg, args, caps):
    return explore_purity_question(alg, caps, args.max_ext_dim), EXIT_OK


def cmd_findim(alg, args, caps):
    bounds, verdict = findim_bounds(alg, caps=caps)
    return {"bounds": bounds.as_dict(), "verdict": verdict.as_dict()}, _status_exit([verdict])


def cmd_nakayama(alg, args, caps):
    v = nakayama_report(alg, caps)
    return v.as_dict(), _status_exit([v])


def cmd_ideals(alg, args, caps):
    v = ideal_reflexivity_report(alg, caps)
    return v.as_dict(), _status_exit([v])


COMMANDS = {
    "profile": cmd_profile,
    "dims": cmd_dims,
    "grade": cmd_grade,
    "transpose": cmd_transpose,
    "eval": cmd_eval,
    "inj-res": cmd_inj_res,
    "proj-res": cmd_proj_res,
    "dominant": cmd_dominant,
    "purity": cmd_purity,
    "dclass": cmd_dclass,
    "verify": cmd_verify,
    "explore-purity-question": cmd_explore,
    "findim": cmd_findim,
    "nakayama": cmd_nakayama,
    "ideals": cmd_ideals,
}


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(message)


def build_parser():
    common = _Parser(add_help=False)
    common.add_argument("--algebra", required=True, help="algebra file (or the name of a bundled fixture)")
    common.add_argument("--module", help="module expression or JSON file")
    common.add_argument("--module-file", help="JSON file with generator matrices")
    common.add_argument("--cap", type=int, default=6, help="resolution length cap")
    common.add_argument("--dim-cap", type=int, default=4, help="largest module dimension enumerated")
    common.add_argument("--lattice-cap", type=int, default=10**6, help="largest submodule lattice explored")
    common.add_argument("--seed", type=int, default=0, help="seed for randomized isomorphism search")
    fmt_group = common.add_mutually_exclusive_group()
    fmt_group.add_argument("--json", action="store_true", default=True, help="compact JSON (default)")
    fmt_group.add_argument("--pretty", action="store_true", help="indented JSON")
    parser = _Parser(prog="gfhom", description="Homological invariants of bound-quiver algebras over GF(p).")
    parser.add_argument("--version", action="version", version=f"gfhom {__version__}")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)
    for name in COMMANDS:
        sp = sub.add_parser(name, parents=[common])
        if name == "verify":
            sp.add_argument("theorem", help="theorem id or 'all'")
        if name == "explore-purity-question":
            sp.add_argument("--max-ext-dim", type=int, default=8, help="skip Ext modules above this dimension")
        if name == "dclass":
            sp.add_argument("--k", type=int, default=2, help="chain length")
    return parser


def report(alg, command, caps, results, wall):
    return {
        "tool": "gfhom",
        "version": __version__,
        "schema": SCHEMA_VERSION,
        "algebra": {"name": alg.name, "digest": alg.digest(), "dim": int(alg.dim), "p": alg.p, "vertices": list(alg.vertex_names)},
        "command": command,
        "caps": caps.as_dict(),
        "results": results,
        "wall_time": round(wall, 6),
    }


def dumps(doc, pretty=False):
    return json.dumps(doc, sort_keys=True, indent=2 if pretty else None, separators=None if pretty else (",", ":"), default=_jsonable)


def _jsonable(x):
    if isinstance(x, np.integer):
        return int(x)
    if isinstance(x, np.ndarray):
        return x.tolist()
    return str(x)


def run(argv, out=None, err=None):
    """Execute one command; returns the exit code."""
    out = out or sys.stdout
    err = err or sys.stderr
    t0 = time.perf_counter()
    try:
        args = build_parser().parse_args(argv)
        for flag in ("cap", "dim_cap", "lattice_cap"):
            if getattr(args, flag) < 1:
                raise UsageError(f"--{flag.replace('_', '-')} must be positive")
        caps = Caps(args.cap, args.dim_cap, args.lattice_cap, args.seed)
        alg = load_algebra(args.algebra)
        results, code = COMMANDS[args.command](alg, args, caps)
    except (UsageError, ParseError, ModuleError, AlgebraError, OSError) as exc:
        print(json.dumps({"error": str(exc), "exit": EXIT_USAGE}), file=err)
        return EXIT_USAGE
    command = [args.command] + ([args.theorem] if args.command == "verify" else [])
    doc = report(alg, command, caps, results, time.perf_counter() - t0)
    print(dumps(doc, args.pretty), file=out)
    return code


def main(argv=None):
    sys.exit(run(sys.argv[1:] if argv is None else argv))


if __name__ == "__main__":
    main()
