# Copyright ampkit Developers.
# See LICENSE for details.

"""
Shared test infrastructure for ampkit and for code built on it.
"""

__all__ = [
    "TestCase",
    "CaptureEliotLogs",
]

from ._testcase import TestCase
from ._eliot import CaptureEliotLogs
