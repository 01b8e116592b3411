"""Command-line driver: compile, write the English/Picture/Log files, report.

    graphseo tree --prefix test --qubits 4 --coupling 0.05 --trots 1
    graphseo line --prefix test --qubits 3 --coupling 0.1 --trots 2 --order 4

Exit status is 0 on success, 1 for an input mistake, 2 for an internal error.
"""
import argparse
import sys
from pathlib import Path

from .compile_line import DEFAULT_ORDER as LINE_ORDER, compile_line, line_hamiltonian
from .compile_tree import DEFAULT_ORDER as TREE_ORDER, compile_tree, tree_hamiltonian
from .errors import DomainError
from .request import CompileRequest, CompileSummary
from .seo_ir import count_elementary_ops
from .seo_text import output_paths, parse_english, write_english, write_log, write_picture
from .verifier import MAX_VERIFY_QUBITS, verify

EXIT_OK, EXIT_INPUT, EXIT_INTERNAL = 0, 1, 2

COMPILERS = {
    "tree": (compile_tree, tree_hamiltonian, TREE_ORDER),
    "line": (compile_line, line_hamiltonian, LINE_ORDER),
}


class InputError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise InputError(message)


def build_parser():
    parser = _Parser(prog="graphseo", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="graph", required=True)
    for name, helptext in (("tree", "balanced binary tree graph"), ("line", "line (open string) graph in Gray order")):
        p = sub.add_parser(name, help=helptext)
        p.add_argument("--prefix", default="test", help="output file prefix; may include a directory")
        p.add_argument("--qubits", required=True, help="number of qubits nb >= 2")
        p.add_argument("--coupling", required=True, help="coupling constant g")
        p.add_argument("--trots", default="1", help="number of trots nt >= 1")
        p.add_argument("--order", default=None, help=f"Suzuki order, 2/4/6 (default {COMPILERS[name][2]})")
        p.add_argument("--no-verify", dest="verify", action="store_false",
                       help="skip computing the error")
    return parser


def _number(text, kind, field, problems):
    try:
        return kind(text)
    except (TypeError, ValueError):
        noun = "an integer" if kind is int else "a real number"
        problems.append(f"{field} must be {noun}, got {text!r}")
        return None


def request_from_args(args):
    """Build a checked request; every input mistake is reported at once."""
    problems = []
    order = COMPILERS[args.graph][2] if args.order is None else _number(args.order, int, "Order", problems)
    fields = dict(
        prefix=args.prefix,
        nb=_number(args.qubits, int, "Number of Qubits", problems),
        g=_number(args.coupling, float, "Coupling Constant", problems),
        nt=_number(args.trots, int, "Number of Trots", problems),
        order=order,
        verify=args.verify,
    )
    # fill unparsable fields with harmless placeholders so the range checks still run
    placeholders = dict(nb=2, g=0.0, nt=1, order=2)
    req = CompileRequest(**{k: placeholders[k] if v is None else v for k, v in fields.items()})
    problems += req.problems()
    if problems:
        raise InputError("; ".join(problems))
    return req


def run(graph, request):
    """Compile ``request``, write its three files, and return the summary."""
    compile_fn, hamiltonian_fn, _ = COMPILERS[graph]
    program = compile_fn(request)
    paths = output_paths(request.prefix, graph)
    Path(paths["eng"]).parent.mkdir(parents=True, exist_ok=True)
    Path(paths["eng"]).write_text(write_english(program))
    Path(paths["pic"]).write_text(write_picture(program))

    reread = parse_english(Path(paths["eng"]).read_text(), request.nb)
    num_ops = count_elementary_ops(reread)
    epsilon, message = None, ""
    if request.verify:
        if request.nb > MAX_VERIFY_QUBITS:
            message = "error not computed"
        else:
            epsilon = verify(program, hamiltonian_fn(request)).epsilon

    summary = CompileSummary(request, num_ops, epsilon, message)
    Path(paths["log"]).write_text(write_log(summary))
    return summary


def main(argv=None):
    try:
        args = build_parser().parse_args(argv)
        request = request_from_args(args)
    except InputError as exc:
        print(f"Message: {exc}")
        return EXIT_INPUT
    try:
        summary = run(args.graph, request)
    except DomainError as exc:
        print(f"Message: {exc}")
        return EXIT_INPUT
    except Exception as exc:  # noqa: BLE001
        print(f"internal error: {exc!r}", file=sys.stderr)
        return EXIT_INTERNAL
    sys.stdout.write(write_log(summary))
    return EXIT_OK


if __name__ == "__main__":
    sys.exit(main())
