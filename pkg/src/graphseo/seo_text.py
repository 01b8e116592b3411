"""English, Picture and Log file formats.

English rows look like ``ROTX 23.700000 AT 1 IF 3F 2T``. Picture rows put
qubit ``q`` at character offset ``4 * (nb - 1 - q)`` so the highest bit is
leftmost, e.g. ``0---@---X   |``; every gate row is ``4 * nb - 3`` wide.
"""
import re

from .errors import DomainError, ParseError
from .seo_ir import (
    ONE_BIT,
    PHASES,
    ROTATIONS,
    Control,
    Instruction,
    Program,
    require_valid,
    validate,
)

SUFFIXES = {"tree": "qtree", "line": "qline"}

_PICTURE_SYMBOL = {
    "SIGX": "X",
    "SIGY": "Y",
    "SIGZ": "Z",
    "HAD2": "H",
    "ROTX": "Rx",
    "ROTY": "Ry",
    "ROTZ": "Rz",
    "ROTN": "R",
    "P0PH": "0P",
    "P1PH": "@P",
}


def output_paths(prefix, graph):
    tag = SUFFIXES[graph]
    return {part: f"{prefix}_{tag}_{part}.txt" for part in ("log", "eng", "pic")}


def _num(v):
    return f"{v:.6f}"


def _ifs(row):
    return " IF " + " ".join(map(str, row.controls)) if row.controls else ""


def english_line(row):
    k = row.kind
    if k == "LOOP":
        return f"LOOP {row.label} REPS: {row.reps}"
    if k == "NEXT":
        return f"NEXT {row.label}"
    if k == "SWAP":
        head = f"SWAP {row.bits[0]} {row.bits[1]}"
    elif k == "PHAS":
        head = f"PHAS {_num(row.values[0])}"
    elif k in ONE_BIT:
        head = f"{k} AT {row.target}"
    else:
        head = f"{k} {' '.join(map(_num, row.values))} AT {row.target}"
    return head + _ifs(row)


def write_english(program):
    require_valid(program)
    return "".join(english_line(r) + "\n" for r in program.rows)


_CONTROL_RE = re.compile(r"^(\d+)([TF])$")


def _int(tok, what, lineno):
    if not re.fullmatch(r"\d+", tok):
        raise ParseError(lineno, f"expected {what}, got {tok!r}")
    return int(tok)


def _float(tok, lineno):
    try:
        return float(tok)
    except ValueError:
        raise ParseError(lineno, f"expected a number, got {tok!r}") from None


def _parse_line(tokens, lineno):
    kind = tokens[0]
    rest = tokens[1:]

    if kind == "LOOP":
        if len(rest) != 3 or rest[1] != "REPS:":
            raise ParseError(lineno, "expected 'LOOP k REPS: n'")
        return Instruction.loop(_int(rest[0], "loop label", lineno), _int(rest[2], "repetitions", lineno))
    if kind == "NEXT":
        if len(rest) != 1:
            raise ParseError(lineno, "expected 'NEXT k'")
        return Instruction.next(_int(rest[0], "loop label", lineno))

    ctrls = ()
    if "IF" in rest:
        at = rest.index("IF")
        ctrl_toks = rest[at + 1:]
        rest = rest[:at]
        if not ctrl_toks:
            raise ParseError(lineno, "IF without controls")
        parsed = []
        for tok in ctrl_toks:
            m = _CONTROL_RE.match(tok)
            if not m:
                raise ParseError(lineno, f"malformed control token {tok!r}")
            parsed.append(Control(int(m.group(1)), m.group(2) == "T"))
        ctrls = tuple(parsed)

    if kind == "SWAP":
        if len(rest) != 2:
            raise ParseError(lineno, "expected 'SWAP a b'")
        return Instruction.swap(_int(rest[0], "bit", lineno), _int(rest[1], "bit", lineno), ctrls)
    if kind == "PHAS":
        if len(rest) != 1:
            raise ParseError(lineno, "expected 'PHAS value'")
        return Instruction.phas(_float(rest[0], lineno), ctrls)

    nvals = 0 if kind in ONE_BIT else 3 if kind == "ROTN" else 1
    if len(rest) != nvals + 2 or rest[nvals] != "AT":
        raise ParseError(lineno, f"expected '{kind} {'v ' * nvals}AT t'")
    target = _int(rest[-1], "target bit", lineno)
    vals = [_float(t, lineno) for t in rest[:nvals]]
    if kind in ONE_BIT:
        return Instruction.gate(kind, target, ctrls)
    if kind == "ROTN":
        return Instruction.rot(kind, vals, target, ctrls)
    return Instruction.rot(kind, vals[0], target, ctrls)


_KNOWN = {"LOOP", "NEXT", "SWAP", "PHAS", *PHASES, *ONE_BIT, *ROTATIONS, "ROTN"}


def parse_english(text, nb):
    """Parse an English file into a validated :class:`Program`.

    Tokens may be separated by any run of whitespace, and ``REPS:n`` is
    accepted with or without a space after the colon. Blank lines are
    skipped. Errors carry the 1-based line number.
    """
    rows, linenos = [], []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        tokens = raw.replace("REPS:", "REPS: ").split()
        if not tokens:
            continue
        if tokens[0] not in _KNOWN:
            raise ParseError(lineno, f"unknown mnemonic {tokens[0]!r}")
        rows.append(_parse_line(tokens, lineno))
        linenos.append(lineno)
    program = Program(nb, rows)
    diags = validate(program)
    if diags:
        d = diags[0]
        raise ParseError(linenos[d.row], d.message)
    return program


def picture_line(row, nb):
    if not row.is_gate:
        return english_line(row)

    marks = {c.bit: "@" if c.polarity else "0" for c in row.controls}
    k = row.kind
    if k == "SWAP":
        a, b = row.bits
        marks[max(a, b)] = "<"
        marks[min(a, b)] = ">"
    elif k == "PHAS":
        free = [q for q in range(nb) if q not in marks]
        if not free:
            raise DomainError("PHAS controlled on every qubit has no column for 'Ph'")
        marks[free[0]] = "Ph"
    else:
        marks[row.target] = _PICTURE_SYMBOL[k]

    col = lambda q: 4 * (nb - 1 - q)  # noqa: E731
    left, right = col(max(marks)), col(min(marks))
    chars = [" "] * (4 * (nb - 1) + 1)
    for i in range(left, right):
        chars[i] = "-"
    for q in range(nb):
        if q not in marks:
            chars[col(q)] = "+" if left <= col(q) <= right else "|"
    for q, sym in marks.items():
        # two-char symbols start at their column, except on qubit 0 where they end at it
        c = max(0, col(q) - (len(sym) - 1 if q == 0 else 0))
        chars[c:c + len(sym)] = sym
    return "".join(chars)


def write_picture(program, nb=None):
    nb = program.nb if nb is None else nb
    require_valid(program)
    return "".join(picture_line(r, nb) + "\n" for r in program.rows)


def format_error(eps):
    return "not computed" if eps is None else f"{eps:.3e}"


def write_log(summary):
    """Key/value record of a compile run's inputs and outputs."""
    req = summary.request
    lines = [
        f"File Prefix: {req.prefix}",
        f"Number of Qubits: {req.nb}",
        f"Coupling Constant: {req.g!r}",
        f"Number of Trots: {req.nt}",
    ]
    if req.order is not None:
        lines.append(f"Order: {req.order}")
    lines += [
        f"Number of Elementary Operations: {summary.num_ops}",
        f"Error: {format_error(summary.epsilon)}",
        f"Message: {summary.message}".rstrip(),
    ]
    return "\n".join(lines) + "\n"
