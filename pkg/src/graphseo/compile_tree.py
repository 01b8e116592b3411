"""Circuit for ``exp(iH_tree)``.

Each level coupling ``H_l`` (edges from tree level ``l`` to ``l + 1``) is
compiled exactly: a controlled Hadamard folds every sibling pair into its
symmetric combination, controlled swaps rotate bit 0 up to bit ``l``, a CNOT
lines the child up one bit-flip away from its parent, and a single
controlled x-rotation with coupling ``sqrt(2) * theta`` does the transition.
Levels of equal parity commute, so the two parity groups are combined with a
Suzuki formula.
"""
import math

from .errors import DomainError
from .graph_model import build_tree_hamiltonian
from .request import CompileRequest
from .seo_ir import Control, Instruction, Program, reverse_adjoint_swaps
from .trotter import TrotterPlan, drop_empty, suzuki_sequence, trotterize

DEFAULT_ORDER = 4


def rotx_degrees(c):
    """ROTX angle (degrees) realising ``exp(i c sigma_x)``."""
    return 2.0 * c * 180.0 / math.pi


def level_groups(nb):
    levels = range(nb - 1)
    return {"A": [lv for lv in levels if lv % 2 == 0], "B": [lv for lv in levels if lv % 2 == 1]}


def compile_level(level, theta, nb):
    """Rows whose product is exactly ``exp(i theta H_level)``; ``2*level + 5`` rows."""
    if not 0 <= level <= nb - 2:
        raise DomainError(f"tree level {level} outside [0, {nb - 2}]")
    if not math.isfinite(theta):
        raise DomainError(f"coupling {theta!r} is not finite")
    high = tuple(Control(b, False) for b in range(level + 2, nb))
    child = (Control(level + 1, True),) + high

    prep = [Instruction.gate("HAD2", 0, child)]
    prep += [Instruction.swap(b, b + 1, child) for b in range(level)]
    prep.append(Instruction.gate("SIGX", level, child))
    core = Instruction.rot(
        "ROTX", rotx_degrees(math.sqrt(2.0) * theta), level + 1, (Control(level, True),) + high
    )
    return prep + [core] + reverse_adjoint_swaps(prep)


def tree_step(nb, seq):
    groups = level_groups(nb)
    seq = drop_empty(seq, {lab for lab, lv in groups.items() if lv})

    def build(s):
        rows = []
        for label, c in seq:
            for lv in groups[label]:
                rows += compile_level(lv, c * s, nb)
        return rows

    return build


def compile_tree(request):
    """Program approximating ``exp(iH_tree)`` with ``request.nt`` Suzuki steps."""
    request.check()
    plan = TrotterPlan(request.g, request.nt, request.order)
    rows = trotterize(tree_step(request.nb, suzuki_sequence(plan.order)), plan)
    return Program(request.nb, rows)


def tree_request(nb, g, nt=1, order=DEFAULT_ORDER, **kw):
    return CompileRequest(nb=nb, g=g, nt=nt, order=order, **kw)


def tree_hamiltonian(request):
    return build_tree_hamiltonian(request.nb, request.g)
