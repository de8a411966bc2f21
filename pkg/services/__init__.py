"""
Service Layer
Input loading and validation services
"""
from .loader import DataLoader, RawRecord
from .validator import CheckedRecord, Validator

__all__ = ['DataLoader', 'RawRecord', 'CheckedRecord', 'Validator']
