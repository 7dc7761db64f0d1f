"""
Scarf matrices, bases and pivots.

scarf_solve lives in scarf.solver; it is kept out of this namespace because
it drives the pivot graph, which itself imports the modules below.
"""

from .bases import FeasibleBasis, OrdinalBasis, cardinal_pivot, initial_bases, ordinal_pivot
from .matrices import ColumnId, MatrixA, MatrixC, build_matrix_a, build_matrix_c, market_columns
from .tableau import ExactTableau, LinearProgramResult, maximize
from .trace import ScarfStep, ScarfTrace, format_trace

__all__ = [
    'ColumnId',
    'ExactTableau',
    'FeasibleBasis',
    'LinearProgramResult',
    'MatrixA',
    'MatrixC',
    'OrdinalBasis',
    'ScarfStep',
    'ScarfTrace',
    'build_matrix_a',
    'build_matrix_c',
    'cardinal_pivot',
    'format_trace',
    'initial_bases',
    'market_columns',
    'maximize',
    'ordinal_pivot',
]
