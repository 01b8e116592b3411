"""Dense linear algebra used to check a compiled program against ``exp(iH)``.

The eigensolver is a cyclic Jacobi method in round-robin (tournament)
ordering: each round rotates ``n/2`` disjoint index pairs at once, so a sweep
is ``n - 1`` vectorised rounds instead of ``n(n-1)/2`` scalar rotations.
"""
import math
from dataclasses import dataclass

import numpy as np

from .errors import DomainError
from .seo_ir import count_elementary_ops, require_valid, unrolled

MAX_VERIFY_QUBITS = 12
MAX_SWEEPS = 100

_SX = np.array([[0, 1], [1, 0]], dtype=complex)
_SY = np.array([[0, -1j], [1j, 0]], dtype=complex)
_SZ = np.array([[1, 0], [0, -1]], dtype=complex)
_HAD = np.array([[1, 1], [1, -1]], dtype=complex) / math.sqrt(2)
_PAULI = {"SIGX": _SX, "SIGY": _SY, "SIGZ": _SZ, "HAD2": _HAD}
_AXIS = {"ROTX": _SX, "ROTY": _SY, "ROTZ": _SZ}


@dataclass(frozen=True, eq=False)
class EigenSystem:
    values: np.ndarray
    vectors: np.ndarray


@dataclass(frozen=True)
class ErrorReport:
    epsilon: float
    num_ops: int


def _round_robin(n):
    """Yield ``(p, q)`` index arrays covering every pair once per sweep."""
    m = n + (n % 2)
    players = list(range(m))
    for _ in range(m - 1):
        half = m // 2
        ps, qs = [], []
        for a, b in zip(players[:half], players[m - 1:half - 1:-1]):
            if a < n and b < n:
                ps.append(min(a, b))
                qs.append(max(a, b))
        yield np.array(ps, dtype=int), np.array(qs, dtype=int)
        players = [players[0], players[-1], *players[1:-1]]


def _off_max(a):
    off = a - np.diag(np.diag(a))
    return np.abs(off).max() if off.size else 0.0


def jacobi_eigensym(h, tol=1e-13):
    """Eigenvalues (ascending) and orthonormal eigenvectors of a real symmetric matrix.

    Sweeps until the largest off-diagonal entry falls below
    ``tol * ||h||_F``, at most ``MAX_SWEEPS`` times.
    """
    a = np.array(h, dtype=float)
    if a.ndim != 2 or a.shape[0] != a.shape[1]:
        raise DomainError(f"expected a square matrix, got shape {a.shape}")
    if np.abs(a - a.T).max(initial=0.0) > 1e-12:
        raise DomainError("matrix is not symmetric")
    n = a.shape[0]
    v = np.eye(n)
    scale = np.linalg.norm(a)
    if scale == 0.0 or n == 1:
        return EigenSystem(np.diag(a).copy(), v)

    threshold = tol * scale
    skip = 1e-2 * threshold
    schedule = list(_round_robin(n))
    for _ in range(MAX_SWEEPS):
        if _off_max(a) < threshold:
            break
        for p, q in schedule:
            apq = a[p, q]
            live = np.abs(apq) > skip
            if not live.any():
                continue
            p, q, apq = p[live], q[live], apq[live]
            theta = (a[q, q] - a[p, p]) / (2.0 * apq)
            t = np.sign(theta) / (np.abs(theta) + np.hypot(theta, 1.0))
            t[theta == 0.0] = 1.0
            c = 1.0 / np.sqrt(t * t + 1.0)
            s = t * c

            ap, aq = a[:, p].copy(), a[:, q].copy()
            a[:, p] = c * ap - s * aq
            a[:, q] = s * ap + c * aq
            ap, aq = a[p, :].copy(), a[q, :].copy()
            a[p, :] = c[:, None] * ap - s[:, None] * aq
            a[q, :] = s[:, None] * ap + c[:, None] * aq
            a[p, q] = a[q, p] = 0.0

            vp, vq = v[:, p].copy(), v[:, q].copy()
            v[:, p] = c * vp - s * vq
            v[:, q] = s * vp + c * vq

    # one Newton-Schulz step pulls V back onto the orthogonal group
    v = 1.5 * v - 0.5 * v @ (v.T @ v)
    values = np.diag(a).copy()
    order = np.argsort(values, kind="stable")
    return EigenSystem(values[order], v[:, order])


def evolution_operator(h):
    """``exp(i h)`` built from the Jacobi eigensystem of ``h``."""
    es = jacobi_eigensym(h)
    return (es.vectors * np.exp(1j * es.values)) @ es.vectors.T


def _control_mask(idx, controls):
    mask = np.ones(idx.shape, dtype=bool)
    for c in controls:
        mask &= ((idx >> c.bit) & 1) == int(c.polarity)
    return mask


def _one_bit_matrix(instr):
    k = instr.kind
    if k in _PAULI:
        return _PAULI[k]
    if k in _AXIS:
        half = 0.5 * math.radians(instr.values[0])
        return math.cos(half) * np.eye(2) + 1j * math.sin(half) * _AXIS[k]
    if k == "ROTN":
        ax, ay, az = (math.radians(x) for x in instr.values)
        norm = math.sqrt(ax * ax + ay * ay + az * az)
        if norm == 0.0:
            return np.eye(2, dtype=complex)
        gen = (ax * _SX + ay * _SY + az * _SZ) / norm
        return math.cos(norm / 2) * np.eye(2) + 1j * math.sin(norm / 2) * gen
    raise DomainError(f"{k} is not a one-bit gate")


def apply_instruction(instr, m, nb):
    """Left-multiply the ``2**nb``-row array ``m`` by ``instr``'s operator, in place."""
    if not instr.is_gate:
        raise DomainError(f"{instr.kind} rows have no operator")
    idx = np.arange(2**nb)
    ok = _control_mask(idx, instr.controls)
    k = instr.kind

    if k == "PHAS":
        m[ok] *= np.exp(1j * instr.values[0])
        return m
    if k in ("P0PH", "P1PH"):
        want = 0 if k == "P0PH" else 1
        sel = ok & (((idx >> instr.target) & 1) == want)
        m[sel] *= np.exp(1j * instr.values[0])
        return m
    if k == "SWAP":
        a, b = instr.bits
        sel = idx[ok & (((idx >> a) & 1) == 0) & (((idx >> b) & 1) == 1)]
        partner = sel ^ ((1 << a) | (1 << b))
        m[sel], m[partner] = m[partner].copy(), m[sel].copy()
        return m

    t = instr.target
    i0 = idx[ok & (((idx >> t) & 1) == 0)]
    i1 = i0 | (1 << t)
    g = _one_bit_matrix(instr)
    r0, r1 = m[i0].copy(), m[i1].copy()
    m[i0] = g[0, 0] * r0 + g[0, 1] * r1
    m[i1] = g[1, 0] * r0 + g[1, 1] * r1
    return m


def instruction_matrix(instr, nb):
    return apply_instruction(instr, np.eye(2**nb, dtype=complex), nb)


def program_matrix(program):
    """Product of all gate rows, loops unrolled; the first row acts first."""
    require_valid(program)
    u = np.eye(2**program.nb, dtype=complex)
    for row in unrolled(program):
        apply_instruction(row, u, program.nb)
    return u


def frobenius_distance(u, v):
    u, v = np.asarray(u), np.asarray(v)
    if u.shape != v.shape:
        raise DomainError(f"dimension mismatch: {u.shape} vs {v.shape}")
    d = u - v
    return float(np.sqrt(np.sum((d * d.conj()).real)))


def error_order_estimate(eps1, eps2, g1, g2):
    """Apparent power ``p`` in ``eps ~ K g**p`` from two samples."""
    if min(eps1, eps2, g1, g2) <= 0:
        raise DomainError("errors and couplings must be positive")
    if g1 == g2:
        raise DomainError("couplings must differ")
    return math.log(eps2 / eps1) / math.log(g2 / g1)


def verify(program, hamiltonian):
    """Frobenius distance between ``exp(iH)`` and the program's unitary."""
    if program.nb > MAX_VERIFY_QUBITS:
        raise DomainError(f"verification is limited to {MAX_VERIFY_QUBITS} qubits")
    u = evolution_operator(hamiltonian.matrix)
    return ErrorReport(frobenius_distance(u, program_matrix(program)), count_elementary_ops(program))

