"""Compile ``exp(iH)`` for tree and line graph Hamiltonians into elementary-operation circuits."""
from .compile_line import compile_line
from .compile_tree import compile_tree
from .errors import DomainError, ParseError
from .request import CompileRequest, CompileSummary
from .seo_ir import Control, Instruction, Program, count_elementary_ops, validate
from .verifier import error_order_estimate, frobenius_distance, program_matrix, verify

__all__ = [
    "CompileRequest",
    "CompileSummary",
    "Control",
    "DomainError",
    "Instruction",
    "ParseError",
    "Program",
    "compile_line",
    "compile_tree",
    "count_elementary_ops",
    "error_order_estimate",
    "frobenius_distance",
    "program_matrix",
    "validate",
    "verify",
]
