"""
Plusweld
Gauss-code engine for plus-welded knotoids

Version: 1.0.0
"""

__version__ = "1.0.0"
__license__ = "MIT"

from .cli import CLI, ExitStatus, main

__all__ = ['CLI', 'ExitStatus', 'main']
