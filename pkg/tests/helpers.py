import math

import numpy as np

from graphseo.seo_ir import ONE_BIT, Control, Instruction, Program

I2 = np.eye(2, dtype=complex)
N1 = np.diag([0, 1]).astype(complex)
N0 = np.diag([1, 0]).astype(complex)
SX = np.array([[0, 1], [1, 0]], dtype=complex)
SY = np.array([[0, -1j], [1j, 0]])
SZ = np.diag([1, -1]).astype(complex)
HAD = np.array([[1, 1], [1, -1]], dtype=complex) / math.sqrt(2)


def kron_on(nb, ops):
    """Kronecker product with ``ops[q]`` on qubit ``q`` (identity elsewhere); qubit 0 rightmost."""
    out = np.eye(1, dtype=complex)
    for q in reversed(range(nb)):
        out = np.kron(out, ops.get(q, I2))
    return out


def small_expm(gen):
    from scipy.linalg import expm

    return expm(1j * gen)


def oracle_matrix(instr, nb):
    """Operator of one row built from tensor products, independent of the verifier."""
    proj = {c.bit: N1 if c.polarity else N0 for c in instr.controls}
    p_ctrl = kron_on(nb, proj)
    ident = np.eye(2**nb, dtype=complex)
    k = instr.kind
    if k == "SWAP":
        a, b = instr.bits
        perm = np.zeros((2**nb, 2**nb), dtype=complex)
        for s in range(2**nb):
            ba, bb = (s >> a) & 1, (s >> b) & 1
            t = s & ~((1 << a) | (1 << b)) | (ba << b) | (bb << a)
            perm[t, s] = 1
        return ident + p_ctrl @ (perm - ident)
    if k == "PHAS":
        return ident + (np.exp(1j * instr.values[0]) - 1) * p_ctrl
    if k in ("P0PH", "P1PH"):
        extra = dict(proj)
        extra[instr.target] = N0 if k == "P0PH" else N1
        return ident + (np.exp(1j * instr.values[0]) - 1) * kron_on(nb, extra)
    if k in ONE_BIT:
        gate = {"SIGX": SX, "SIGY": SY, "SIGZ": SZ, "HAD2": HAD}[k]
    elif k == "ROTN":
        gen = sum(math.radians(v) * s for v, s in zip(instr.values, (SX, SY, SZ)))
        gate = small_expm(0.5 * gen)
    else:
        gen = {"ROTX": SX, "ROTY": SY, "ROTZ": SZ}[k]
        gate = small_expm(0.5 * math.radians(instr.values[0]) * gen)
    return ident + p_ctrl @ (kron_on(nb, {instr.target: gate}) - ident)


GATE_KINDS = ("SWAP", "PHAS", "P0PH", "P1PH", "SIGX", "SIGY", "SIGZ", "HAD2", "ROTX", "ROTY", "ROTZ", "ROTN")


def random_gate(rng, nb, kinds=GATE_KINDS):
    kind = kinds[rng.integers(len(kinds))]
    bits = list(rng.permutation(nb))
    angle = lambda: round(float(rng.uniform(-360, 360)), 6)  # noqa: E731
    if kind == "SWAP":
        if nb < 2:
            kind = "SIGX"
        else:
            used, rest = bits[:2], bits[2:]
    if kind == "PHAS":
        used, rest = [], bits
    elif kind != "SWAP":
        used, rest = bits[:1], bits[1:]
    nctrl = int(rng.integers(0, len(rest) + 1))
    if kind == "PHAS" and nctrl == nb:
        nctrl -= 1
    ctrls = tuple(Control(int(b), bool(rng.integers(2))) for b in rest[:nctrl])
    if kind == "SWAP":
        return Instruction.swap(int(used[0]), int(used[1]), ctrls)
    if kind == "PHAS":
        return Instruction.phas(angle(), ctrls)
    if kind in ONE_BIT:
        return Instruction.gate(kind, int(used[0]), ctrls)
    if kind == "ROTN":
        return Instruction.rot(kind, (angle(), angle(), angle()), int(used[0]), ctrls)
    return Instruction.rot(kind, angle(), int(used[0]), ctrls)


def random_program(rng, nb, size, loop=None):
    """Random valid program; ``loop`` is ``None`` (coin flip), ``True`` or ``False``."""
    rows = [random_gate(rng, nb) for _ in range(size)]
    if loop is None:
        loop = bool(rng.integers(2))
    if loop and size:
        start = int(rng.integers(0, size))
        stop = int(rng.integers(start, size + 1))
        reps = int(rng.integers(1, 5))
        rows = rows[:start] + [Instruction.loop(start, reps)] + rows[start:stop] + [Instruction.next(start)] + rows[stop:]
    return Program(nb, rows)


def same_program(p, q, tol=1e-9):
    if p.nb != q.nb or len(p.rows) != len(q.rows):
        return False
    for a, b in zip(p.rows, q.rows):
        if (a.kind, a.bits, a.controls, a.label, a.reps) != (b.kind, b.bits, b.controls, b.label, b.reps):
            return False
        if len(a.values) != len(b.values) or any(abs(x - y) > tol for x, y in zip(a.values, b.values)):
            return False
    return True
