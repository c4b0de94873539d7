"""Line-oriented input files for the command line tool.

Grammar: one stanza per line, `<kind> <name> key=value ...`; `#` starts a
comment; blank lines are skipped.  Matrices and scalars use the same textual
forms the library prints, so every emitted object parses back bit-exactly.
Errors carry exact 1-based line and column positions.

Stanza kinds and their keys:

    module    <name> dim=<n> inv=<matrix>
    realvs    <name> dim=<n> g=<matrix> J=<matrix>
    hermitian <name> dim=<n> gram=<matrix>
    gate      <name> on=<hermitian> mat=<matrix>
    realset   <name> size=<n> tau=<perm>
    quantize  <name> basis=<labels>
    channel   <name> gate=<gate> rho=<gate>
    check     <name> target=<name> [kind=<kind>]

Names are unique per kind and every reference must already be defined
(definition before use).  A `gate` names a square matrix on a declared
Hermitian space; states for `channel` are declared the same way.
"""

from __future__ import annotations

import re
from dataclasses import dataclass

from .linalg import Matrix, MatrixParseError, parse_matrix

_NAME = re.compile(r"[A-Za-z_][A-Za-z0-9_]*\Z")
_KINDS = ("module", "realvs", "hermitian", "gate", "realset", "quantize", "channel", "check")
_KEYS = {
    "module": ("dim", "inv"),
    "realvs": ("dim", "g", "J"),
    "hermitian": ("dim", "gram"),
    "gate": ("on", "mat"),
    "realset": ("size", "tau"),
    "quantize": ("basis",),
    "channel": ("gate", "rho"),
    "check": ("target", "kind"),
}
_OPTIONAL = {"check": ("kind",)}


class SpecFileError(ValueError):
    def __init__(self, message: str, line: int, col: int):
        super().__init__(f"{message} (line {line}, column {col})")
        self.message = message
        self.line = line
        self.col = col


@dataclass(frozen=True, slots=True)
class Stanza:
    kind: str
    name: str
    fields: dict
    line: int


@dataclass(frozen=True, slots=True)
class SpecFile:
    stanzas: tuple

    def find(self, kind: str, name: str):
        for st in self.stanzas:
            if st.kind == kind and st.name == name:
                return st
        return None

    def names(self, kind: str) -> tuple:
        return tuple(st.name for st in self.stanzas if st.kind == kind)


def _tokens(line: str):
    """(text, 1-based column) pairs, whitespace-separated, comment-stripped."""
    cut = line.find("#")
    if cut >= 0:
        line = line[:cut]
    out = []
    col = 0
    while col < len(line):
        if line[col].isspace():
            col += 1
            continue
        end = col
        while end < len(line) and not line[end].isspace():
            end += 1
        out.append((line[col:end], col + 1))
        col = end
    return out


def _parse_int(text: str, lineno: int, col: int, minimum: int = 0) -> int:
    if not re.fullmatch(r"-?\d+", text):
        raise SpecFileError(f"expected an integer, got {text!r}", lineno, col)
    value = int(text)
    if value < minimum:
        raise SpecFileError(f"integer must be at least {minimum}", lineno, col)
    return value


def _parse_mat(text: str, lineno: int, col: int) -> Matrix:
    try:
        return parse_matrix(text)
    except MatrixParseError as exc:
        raise SpecFileError(str(exc), lineno, col + exc.offset) from None


def _parse_perm(text: str, lineno: int, col: int) -> tuple:
    parts = text.split(",")
    values = []
    at = col
    for part in parts:
        values.append(_parse_int(part, lineno, at))
        at += len(part) + 1
    return tuple(values)


def _parse_labels(text: str, lineno: int, col: int) -> tuple:
    parts = text.split(",")
    at = col
    seen = set()
    for part in parts:
        if not _NAME.match(part):
            raise SpecFileError(f"bad basis label {part!r}", lineno, at)
        if part in seen:
            raise SpecFileError(f"duplicate basis label {part!r}", lineno, at)
        seen.add(part)
        at += len(part) + 1
    return tuple(parts)


def parse_spec(text: str) -> SpecFile:
    """Parse and resolve a spec file; raises SpecFileError with a position."""
    stanzas = []
    declared = {kind: {} for kind in _KINDS}

    def resolve(kind, name, lineno, col):
        if name not in declared[kind]:
            raise SpecFileError(f"unknown {kind} {name!r}", lineno, col)
        return declared[kind][name]

    for lineno, raw in enumerate(text.splitlines(), start=1):
        toks = _tokens(raw)
        if not toks:
            continue
        (kind, kcol) = toks[0]
        if kind not in _KINDS:
            raise SpecFileError(f"unknown stanza kind {kind!r}", lineno, kcol)
        if len(toks) < 2:
            raise SpecFileError("stanza needs a name", lineno, kcol + len(kind))
        (name, ncol) = toks[1]
        if not _NAME.match(name):
            raise SpecFileError(f"bad name {name!r}", lineno, ncol)
        if name in declared[kind]:
            raise SpecFileError(f"duplicate {kind} name {name!r}", lineno, ncol)
        fields = {}
        positions = {}
        for (tok, tcol) in toks[2:]:
            eq = tok.find("=")
            if eq <= 0:
                raise SpecFileError(f"expected key=value, got {tok!r}", lineno, tcol)
            key = tok[:eq]
            value = tok[eq + 1:]
            if key not in _KEYS[kind]:
                raise SpecFileError(f"unknown key {key!r} for {kind}", lineno, tcol)
            if key in fields:
                raise SpecFileError(f"duplicate key {key!r}", lineno, tcol)
            if not value:
                raise SpecFileError(f"empty value for {key!r}", lineno, tcol)
            fields[key] = value
            positions[key] = tcol + eq + 1
        for key in _KEYS[kind]:
            if key not in fields and key not in _OPTIONAL.get(kind, ()):
                raise SpecFileError(f"{kind} needs {key}=", lineno, kcol)

        parsed = {}
        if kind == "module":
            parsed["dim"] = _parse_int(fields["dim"], lineno, positions["dim"], minimum=1)
            parsed["inv"] = _parse_mat(fields["inv"], lineno, positions["inv"])
            if parsed["inv"].shape != (parsed["dim"], parsed["dim"]):
                raise SpecFileError("inv must be dim x dim", lineno, positions["inv"])
        elif kind == "realvs":
            parsed["dim"] = _parse_int(fields["dim"], lineno, positions["dim"], minimum=1)
            parsed["g"] = _parse_mat(fields["g"], lineno, positions["g"])
            parsed["J"] = _parse_mat(fields["J"], lineno, positions["J"])
            for key in ("g", "J"):
                if parsed[key].shape != (parsed["dim"], parsed["dim"]):
                    raise SpecFileError(f"{key} must be dim x dim", lineno, positions[key])
        elif kind == "hermitian":
            parsed["dim"] = _parse_int(fields["dim"], lineno, positions["dim"], minimum=1)
            parsed["gram"] = _parse_mat(fields["gram"], lineno, positions["gram"])
            if parsed["gram"].shape != (parsed["dim"], parsed["dim"]):
                raise SpecFileError("gram must be dim x dim", lineno, positions["gram"])
        elif kind == "gate":
            space = resolve("hermitian", fields["on"], lineno, positions["on"])
            parsed["on"] = fields["on"]
            parsed["mat"] = _parse_mat(fields["mat"], lineno, positions["mat"])
            d = space.fields["dim"]
            if parsed["mat"].shape != (d, d):
                raise SpecFileError(f"mat must be {d}x{d} for {fields['on']}", lineno, positions["mat"])
        elif kind == "realset":
            parsed["size"] = _parse_int(fields["size"], lineno, positions["size"], minimum=0)
            parsed["tau"] = _parse_perm(fields["tau"], lineno, positions["tau"])
            if len(parsed["tau"]) != parsed["size"]:
                raise SpecFileError("tau must list size entries", lineno, positions["tau"])
            if sorted(parsed["tau"]) != list(range(parsed["size"])):
                raise SpecFileError("tau is not a permutation", lineno, positions["tau"])
        elif kind == "quantize":
            parsed["basis"] = _parse_labels(fields["basis"], lineno, positions["basis"])
        elif kind == "channel":
            gate = resolve("gate", fields["gate"], lineno, positions["gate"])
            rho = resolve("gate", fields["rho"], lineno, positions["rho"])
            if gate.fields["on"] != rho.fields["on"]:
                raise SpecFileError("gate and rho live on different spaces", lineno, positions["rho"])
            parsed["gate"] = fields["gate"]
            parsed["rho"] = fields["rho"]
        elif kind == "check":
            target = fields["target"]
            if "kind" in fields:
                tkind = fields["kind"]
                if tkind not in _KINDS or tkind == "check":
                    raise SpecFileError(f"bad kind {tkind!r}", lineno, positions["kind"])
                resolve(tkind, target, lineno, positions["target"])
                parsed["kind"] = tkind
            else:
                hits = [k for k in _KINDS if k != "check" and target in declared[k]]
                if not hits:
                    raise SpecFileError(f"unknown target {target!r}", lineno, positions["target"])
                if len(hits) > 1:
                    raise SpecFileError(
                        f"ambiguous target {target!r}; add kind=", lineno, positions["target"])
                parsed["kind"] = hits[0]
            parsed["target"] = target

        st = Stanza(kind, name, parsed, lineno)
        declared[kind][name] = st
        stanzas.append(st)

    return SpecFile(tuple(stanzas))
