"""Circuit for ``exp(iH_line)`` using the Gray-code even/odd edge split.

Edges at even Gray positions all flip bit 0 and together cover every pair
``{x, x ^ 1}``, so their sum is ``sigma_x`` on bit 0. Edges at odd positions
touch disjoint state pairs, so each becomes one multi-controlled x-rotation
and they commute.
"""
from .compile_tree import rotx_degrees
from .graph_model import build_line_hamiltonian, line_edges
from .request import CompileRequest
from .seo_ir import Control, Instruction, Program
from .trotter import TrotterPlan, suzuki_sequence, trotterize

DEFAULT_ORDER = 2


def compile_even_part(theta, nb):
    return [Instruction.rot("ROTX", rotx_degrees(theta), 0)]


def compile_odd_part(theta, nb):
    rows = []
    angle = rotx_degrees(theta)
    for j, (a, _, bit) in enumerate(line_edges(nb)):
        if j % 2 == 0:
            continue
        ctrls = tuple(Control(b, bool((a >> b) & 1)) for b in range(nb) if b != bit)
        rows.append(Instruction.rot("ROTX", angle, bit, ctrls))
    return rows


def line_step(nb, seq):
    parts = {"A": compile_even_part, "B": compile_odd_part}

    def build(s):
        rows = []
        for label, c in seq:
            rows += parts[label](c * s, nb)
        return rows

    return build


def compile_line(request):
    request.check()
    plan = TrotterPlan(request.g, request.nt, request.order)
    rows = trotterize(line_step(request.nb, suzuki_sequence(plan.order)), plan)
    return Program(request.nb, rows)


def line_request(nb, g, nt=1, order=DEFAULT_ORDER, **kw):
    return CompileRequest(nb=nb, g=g, nt=nt, order=order, **kw)


def line_hamiltonian(request):
    return build_line_hamiltonian(request.nb, request.g)
