"""
Verification Module

Acceptance suites that check the library's claims exhaustively at small
rank and report them as ClaimReports.
"""

from verification.orchestrator import run_selftest

__all__ = ["run_selftest"]
