"""Elementary-operation instructions, programs, and the op-counting rule."""
from dataclasses import dataclass, field

from .errors import DomainError

ONE_BIT = ("SIGX", "SIGY", "SIGZ", "HAD2")
ROTATIONS = ("ROTX", "ROTY", "ROTZ")
PHASES = ("P0PH", "P1PH")
SELF_INVERSE = ("SWAP",) + ONE_BIT
KINDS = ("LOOP", "NEXT", "SWAP", "PHAS") + PHASES + ONE_BIT + ROTATIONS + ("ROTN",)


@dataclass(frozen=True, order=True)
class Control:
    bit: int
    polarity: bool = True

    def __str__(self):
        return f"{self.bit}{'T' if self.polarity else 'F'}"


def controls(*tokens):
    """Build a control tuple from tokens like ``"3F"``, ``"2T"``."""
    out = []
    for tok in tokens:
        if len(tok) < 2 or tok[-1] not in "TF" or not tok[:-1].isdigit():
            raise DomainError(f"malformed control token {tok!r}")
        out.append(Control(int(tok[:-1]), tok[-1] == "T"))
    return tuple(out)


@dataclass(frozen=True)
class Instruction:
    """One row of a program.

    ``bits`` holds the target (one-bit gates), the swapped pair (SWAP), or
    nothing (PHAS, LOOP, NEXT). ``values`` holds the angle(s) or phase.
    LOOP/NEXT use ``label`` and ``reps``. Controls are kept sorted by
    descending bit.
    """

    kind: str
    bits: tuple = ()
    values: tuple = ()
    controls: tuple = ()
    label: int = None
    reps: int = None

    def __post_init__(self):
        if self.kind not in KINDS:
            raise DomainError(f"unknown instruction kind {self.kind!r}")
        object.__setattr__(self, "bits", tuple(int(b) for b in self.bits))
        object.__setattr__(self, "values", tuple(float(v) for v in self.values))
        ctrls = tuple(sorted(self.controls, key=lambda c: -c.bit))
        object.__setattr__(self, "controls", ctrls)

    @property
    def is_gate(self):
        return self.kind not in ("LOOP", "NEXT")

    @property
    def target(self):
        return self.bits[0] if self.bits else None

    # constructors mirroring the English mnemonics

    @classmethod
    def loop(cls, label, reps):
        return cls("LOOP", label=int(label), reps=int(reps))

    @classmethod
    def next(cls, label):
        return cls("NEXT", label=int(label))

    @classmethod
    def swap(cls, a, b, ctrls=()):
        return cls("SWAP", bits=(a, b), controls=ctrls)

    @classmethod
    def phas(cls, value, ctrls=()):
        return cls("PHAS", values=(value,), controls=ctrls)

    @classmethod
    def gate(cls, kind, target, ctrls=()):
        """One of SIGX, SIGY, SIGZ, HAD2."""
        return cls(kind, bits=(target,), controls=ctrls)

    @classmethod
    def rot(cls, kind, angle_deg, target, ctrls=()):
        """ROTX/ROTY/ROTZ with one angle, ROTN with ``(ax, ay, az)``, P0PH/P1PH with a phase."""
        vals = tuple(angle_deg) if kind == "ROTN" else (angle_deg,)
        return cls(kind, bits=(target,), values=vals, controls=ctrls)


@dataclass(frozen=True)
class Program:
    nb: int
    rows: tuple = field(default_factory=tuple)

    def __post_init__(self):
        object.__setattr__(self, "rows", tuple(self.rows))

    def __len__(self):
        return len(self.rows)

    def __iter__(self):
        return iter(self.rows)


@dataclass(frozen=True)
class Diagnostic:
    row: int
    message: str

    def __str__(self):
        return f"row {self.row}: {self.message}"


def _row_diagnostics(row, nb):
    msgs = []
    k = row.kind
    if k == "LOOP":
        if row.reps is None or row.reps < 1:
            msgs.append(f"LOOP reps must be >= 1, got {row.reps}")
        return msgs
    if k == "NEXT":
        return msgs

    expected_bits = {"SWAP": 2, "PHAS": 0}.get(k, 1)
    expected_vals = {"SWAP": 0, "ROTN": 3}.get(k, 0 if k in ONE_BIT else 1)
    if len(row.bits) != expected_bits:
        msgs.append(f"{k} takes {expected_bits} bit operand(s), got {len(row.bits)}")
    if len(row.values) != expected_vals:
        msgs.append(f"{k} takes {expected_vals} value(s), got {len(row.values)}")
    for b in row.bits:
        if not 0 <= b < nb:
            msgs.append(f"bit {b} outside [0, {nb})")
    if k == "SWAP" and len(row.bits) == 2 and row.bits[0] == row.bits[1]:
        msgs.append("SWAP bits must differ")
    seen = set()
    for c in row.controls:
        if not 0 <= c.bit < nb:
            msgs.append(f"control bit {c.bit} outside [0, {nb})")
        if c.bit in row.bits:
            msgs.append(f"control equals target (bit {c.bit})")
        if c.bit in seen:
            msgs.append(f"duplicate control on bit {c.bit}")
        seen.add(c.bit)
    return msgs


def validate(program):
    """Return every invariant violation in ``program`` (empty list when valid)."""
    diags = []
    open_loop = None
    for i, row in enumerate(program.rows):
        diags.extend(Diagnostic(i, m) for m in _row_diagnostics(row, program.nb))
        if row.kind == "LOOP":
            if open_loop is not None:
                diags.append(Diagnostic(i, f"nested LOOP inside loop {open_loop[1].label}"))
            if row.label != i:
                diags.append(Diagnostic(i, f"LOOP label {row.label} does not equal its row index {i}"))
            open_loop = (i, row)
        elif row.kind == "NEXT":
            if open_loop is None:
                diags.append(Diagnostic(i, f"NEXT {row.label} without matching LOOP"))
            elif open_loop[1].label != row.label:
                diags.append(Diagnostic(i, f"NEXT {row.label} does not match open LOOP {open_loop[1].label}"))
                open_loop = None
            else:
                open_loop = None
    if open_loop is not None:
        diags.append(Diagnostic(open_loop[0], f"LOOP {open_loop[1].label} has no matching NEXT"))
    return diags


def require_valid(program):
    diags = validate(program)
    if diags:
        raise DomainError("invalid program: " + "; ".join(map(str, diags)))


def count_elementary_ops(program):
    """Gate rows counted once, or ``reps`` times inside a LOOP/NEXT pair."""
    require_valid(program)
    total, mult = 0, 1
    for row in program.rows:
        if row.kind == "LOOP":
            mult = row.reps
        elif row.kind == "NEXT":
            mult = 1
        else:
            total += mult
    return total


def unrolled(program):
    """Yield gate rows in time order with loop bodies repeated."""
    rows = program.rows
    i = 0
    while i < len(rows):
        row = rows[i]
        if row.kind == "LOOP":
            j = i + 1
            while rows[j].kind != "NEXT":
                j += 1
            for _ in range(row.reps):
                yield from rows[i + 1:j]
            i = j + 1
        else:
            yield row
            i += 1


def reverse_adjoint_swaps(rows):
    """Adjoint of a self-inverse gate list: the same rows in reverse order."""
    rows = list(rows)
    for row in rows:
        if row.kind not in SELF_INVERSE:
            raise DomainError(f"{row.kind} is not self-inverse")
    return rows[::-1]
