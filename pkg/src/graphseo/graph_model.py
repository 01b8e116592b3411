"""Tree and line graphs on ``2**nb`` basis states, and their Hamiltonians.

Row/column ``i`` of every matrix is computational-basis state ``i``; bit 0 is
the least significant (rightmost) qubit. State 0 of the tree is the isolated
dud node.
"""
from dataclasses import dataclass

import numpy as np

from .errors import DomainError


def _check_nb(nb):
    if int(nb) != nb or nb < 2:
        raise DomainError(f"number of qubits must be an integer >= 2, got {nb!r}")


def gray_code(j, nb):
    """Return the state at position ``j`` of the reflected Gray sequence."""
    if not 0 <= j < 2**nb:
        raise DomainError(f"Gray position {j} outside [0, {2**nb})")
    return j ^ (j >> 1)


def line_edges(nb):
    """Edges ``(a, b, flipped_bit)`` joining consecutive Gray states."""
    _check_nb(nb)
    edges = []
    for j in range(2**nb - 1):
        a, b = gray_code(j, nb), gray_code(j + 1, nb)
        edges.append((a, b, (a ^ b).bit_length() - 1))
    return edges


def tree_edges(nb):
    """Parent/child edges ``(p, 2p)``, ``(p, 2p+1)`` of the balanced tree."""
    _check_nb(nb)
    edges = []
    for p in range(1, 2 ** (nb - 1)):
        edges.append((p, 2 * p))
        edges.append((p, 2 * p + 1))
    return edges


@dataclass(frozen=True)
class TreeGraph:
    nb: int

    def __post_init__(self):
        _check_nb(self.nb)

    @property
    def levels(self):
        return self.nb - 1

    @property
    def ns(self):
        return 2**self.nb

    @property
    def nlvs(self):
        return 2**self.levels

    @property
    def edges(self):
        return tree_edges(self.nb)


@dataclass(frozen=True)
class LineGraph:
    nb: int

    def __post_init__(self):
        _check_nb(self.nb)

    @property
    def gray(self):
        return [gray_code(j, self.nb) for j in range(2**self.nb)]

    @property
    def edges(self):
        return line_edges(self.nb)


@dataclass(frozen=True, eq=False)
class Hamiltonian:
    nb: int
    g: float
    matrix: np.ndarray


def _from_edges(nb, g, pairs):
    if not np.isfinite(g):
        raise DomainError(f"coupling constant must be finite, got {g!r}")
    n = 2**nb
    h = np.zeros((n, n))
    for a, b in pairs:
        h[a, b] = h[b, a] = g
    h.setflags(write=False)
    return Hamiltonian(nb, float(g), h)


def build_tree_hamiltonian(nb, g):
    _check_nb(nb)
    return _from_edges(nb, g, tree_edges(nb))


def build_line_hamiltonian(nb, g):
    _check_nb(nb)
    return _from_edges(nb, g, [(a, b) for a, b, _ in line_edges(nb)])


def tree_level_slice(nb, level, g=1.0):
    """Hamiltonian restricted to edges between tree levels ``level`` and ``level + 1``."""
    _check_nb(nb)
    if not 0 <= level <= nb - 2:
        raise DomainError(f"tree level {level} outside [0, {nb - 2}]")
    lo, hi = 2**level, 2 ** (level + 1)
    return _from_edges(nb, g, [(p, c) for p, c in tree_edges(nb) if lo <= p < hi]).matrix


def line_parity_slice(nb, parity, g=1.0):
    """Line Hamiltonian restricted to edges at even (0) or odd (1) Gray positions."""
    edges = line_edges(nb)
    return _from_edges(nb, g, [(a, b) for a, b, _ in edges[parity::2]]).matrix
