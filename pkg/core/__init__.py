"""
Core Engine Components
"""
from .engine import Engine
from .result import CheckResult, InvariantReport, TrivialityVerdict, UnknotResult
from .context import ExecutionContext, SearchBudget
from .gauss_code import GaussCode, CyclicGaussCode, Passage, Role, parse_code, serialize_code
from .moves import Move, MoveKind, apply_move, legal_moves, invert_move
from .certificate import Certificate, verify_certificate

__all__ = [
    'Engine', 'ExecutionContext', 'SearchBudget',
    'CheckResult', 'InvariantReport', 'TrivialityVerdict', 'UnknotResult',
    'GaussCode', 'CyclicGaussCode', 'Passage', 'Role', 'parse_code', 'serialize_code',
    'Move', 'MoveKind', 'apply_move', 'legal_moves', 'invert_move',
    'Certificate', 'verify_certificate',
]
