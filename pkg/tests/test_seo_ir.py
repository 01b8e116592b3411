import numpy as np
import pytest

from graphseo.errors import DomainError
from graphseo.seo_ir import (
    Control,
    Instruction,
    Program,
    controls,
    count_elementary_ops,
    reverse_adjoint_swaps,
    unrolled,
    validate,
)
from helpers import random_program

X = Instruction.gate


def messages(program):
    return [d.message for d in validate(program)]


def test_empty_program_is_valid():
    assert validate(Program(3)) == []


def test_loop_program_is_valid():
    prog = Program(1, [Instruction.loop(0, 2), X("SIGX", 0), Instruction.next(0)])
    assert validate(prog) == []


def test_control_equals_target():
    msgs = messages(Program(1, [X("SIGX", 0, controls("0T"))]))
    assert any("control equals target" in m for m in msgs)


@pytest.mark.parametrize(
    "rows, fragment",
    [
        ([X("SIGX", 3)], "outside"),
        ([X("SIGX", 0, controls("5T"))], "outside"),
        ([X("SIGX", 0, controls("1T", "1F"))], "duplicate"),
        ([Instruction.swap(1, 1)], "must differ"),
        ([Instruction.loop(0, 0), Instruction.next(0)], "reps"),
        ([Instruction.loop(0, 2), X("SIGX", 0)], "no matching NEXT"),
        ([Instruction.next(0)], "without matching LOOP"),
        ([X("SIGX", 0), Instruction.loop(0, 2), Instruction.next(0)], "label"),
        ([Instruction.loop(0, 2), Instruction.loop(1, 2), Instruction.next(1), Instruction.next(0)], "nested"),
    ],
)
def test_diagnostics(rows, fragment):
    msgs = messages(Program(2, rows))
    assert any(fragment in m for m in msgs), msgs


def test_controls_sorted_descending():
    instr = X("SIGX", 1, (Control(2, True), Control(3, False)))
    assert [c.bit for c in instr.controls] == [3, 2]


def test_bad_control_token():
    with pytest.raises(DomainError):
        controls("3X")


def test_count_plain_rows():
    assert count_elementary_ops(Program(2, [X("SIGX", 0)] * 5)) == 5


def test_count_loop_body_times_reps():
    body = [X("SIGX", 0), X("SIGZ", 1), X("HAD2", 0), X("SIGY", 1)]
    prog = Program(2, [Instruction.loop(0, 3), *body, Instruction.next(0)])
    assert count_elementary_ops(prog) == 12


def test_count_loop_then_plain():
    prog = Program(2, [Instruction.loop(0, 2), X("SIGX", 0), X("SIGX", 1), Instruction.next(0), X("SIGZ", 0)])
    assert count_elementary_ops(prog) == 5


def test_count_rejects_invalid():
    with pytest.raises(DomainError):
        count_elementary_ops(Program(1, [Instruction.next(0)]))


def test_count_equals_unrolled_length():
    rng = np.random.default_rng(7)
    for _ in range(200):
        prog = random_program(rng, int(rng.integers(1, 5)), int(rng.integers(0, 8)))
        assert count_elementary_ops(prog) == len(list(unrolled(prog)))


def test_count_additive_over_loop_free_segments():
    rng = np.random.default_rng(8)
    for _ in range(50):
        p = random_program(rng, 3, 5, loop=False)
        q = random_program(rng, 3, 4, loop=False)
        joined = Program(3, p.rows + q.rows)
        assert count_elementary_ops(joined) == count_elementary_ops(p) + count_elementary_ops(q)


def test_reverse_adjoint_swaps():
    assert reverse_adjoint_swaps([]) == []
    a, b = Instruction.swap(0, 1), Instruction.swap(1, 2)
    assert reverse_adjoint_swaps([a, b]) == [b, a]
    assert reverse_adjoint_swaps([a]) == [a]
    with pytest.raises(DomainError):
        reverse_adjoint_swaps([a, Instruction.rot("ROTX", 10.0, 0)])
