"""Compile inputs and outputs shared by the compilers, log writer and CLI."""
import math
from dataclasses import dataclass

from .errors import DomainError

ORDERS = (2, 4, 6)


@dataclass(frozen=True)
class CompileRequest:
    prefix: str = "test"
    nb: int = 3
    g: float = 0.1
    nt: int = 1
    order: int = 2
    verify: bool = True

    def problems(self):
        """Human-readable input mistakes, one per bad field."""
        out = []
        if not self.prefix:
            out.append("File Prefix must not be empty")
        if not isinstance(self.nb, int) or self.nb < 2:
            out.append("Number of Qubits must be at least 2")
        if not math.isfinite(self.g):
            out.append("Coupling Constant must be a finite real number")
        if not isinstance(self.nt, int) or self.nt < 1:
            out.append("Number of Trots must be at least 1")
        if isinstance(self.order, int) and self.order % 2:
            out.append("Order must be even (2, 4 or 6)")
        elif self.order not in ORDERS:
            out.append("Order must be one of 2, 4, 6")
        return out

    def check(self):
        probs = self.problems()
        if probs:
            raise DomainError("; ".join(probs))


@dataclass(frozen=True)
class CompileSummary:
    request: CompileRequest
    num_ops: int
    epsilon: float = None
    message: str = ""
