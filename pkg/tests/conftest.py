"""
Shared fixtures, collected from tests/fixtures.
"""

from tests.fixtures.conftest import *  # noqa: F401,F403
