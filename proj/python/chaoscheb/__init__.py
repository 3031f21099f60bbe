"""Chebyshev and Jacobian elliptic map cryptosystems and their attacks."""

from ._chaoscheb import *  # noqa: F401,F403
from ._chaoscheb import __doc__  # noqa: F401
