"""Suzuki product formulas over a two-generator split ``H = A + B``."""
from dataclasses import dataclass

import numpy as np

from .errors import DomainError
from .request import ORDERS
from .seo_ir import Instruction


@dataclass(frozen=True)
class TrotterPlan:
    g: float
    nt: int = 1
    order: int = 2

    def __post_init__(self):
        if not isinstance(self.nt, (int, np.integer)) or self.nt < 1:
            raise DomainError(f"number of trots must be an integer >= 1, got {self.nt!r}")
        if self.order not in ORDERS:
            raise DomainError(f"unsupported Suzuki order {self.order!r}; use one of {ORDERS}")

    @property
    def step_coupling(self):
        return self.g / self.nt


def merge_adjacent(seq):
    """Sum coefficients of neighbouring factors with the same label."""
    out = []
    for label, c in seq:
        if out and out[-1][0] == label:
            out[-1] = (label, out[-1][1] + c)
        else:
            out.append((label, c))
    return out


def suzuki_sequence(order):
    """Factor list ``[(label, coeff), ...]`` of the order-``order`` Suzuki formula.

    Each coefficient is a fraction of the coupling: the step is the
    time-ordered product of ``exp(i * coeff * s * X)`` for ``X`` in {A, B}.
    """
    if order not in ORDERS:
        raise DomainError(f"unsupported Suzuki order {order!r}; use one of {ORDERS}")
    seq = [("A", 0.5), ("B", 1.0), ("A", 0.5)]
    for k in range(2, order // 2 + 1):
        p = 1.0 / (4.0 - 4.0 ** (1.0 / (2 * k - 1)))
        outer = [(lab, p * c) for lab, c in seq]
        middle = [(lab, (1.0 - 4.0 * p) * c) for lab, c in seq]
        seq = merge_adjacent(outer * 2 + middle + outer * 2)
    return seq


def drop_empty(seq, labels):
    """Remove factors whose generator is absent, then re-merge neighbours."""
    return merge_adjacent([(lab, c) for lab, c in seq if lab in labels])


def factor_product(seq, generators, s):
    """Dense product of ``exp(i c s X)`` over ``seq``, first factor acting first.

    ``generators`` maps labels to real symmetric matrices.
    """
    from .verifier import evolution_operator

    n = next(iter(generators.values())).shape[0]
    u = np.eye(n, dtype=complex)
    for label, c in seq:
        u = evolution_operator(c * s * generators[label]) @ u
    return u


def trotterize(step_builder, plan, start=0):
    """Wrap one product-formula step in a LOOP repeated ``plan.nt`` times.

    ``step_builder(step_coupling)`` returns the rows of a single step. With
    ``nt == 1`` the step rows are returned bare. ``start`` is the row index
    the returned block will occupy; the loop label equals it.
    """
    step = list(step_builder(plan.step_coupling))
    if plan.nt == 1:
        return step
    return [Instruction.loop(start, plan.nt), *step, Instruction.next(start)]
