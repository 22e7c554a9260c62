"""Italian and perfect Italian domination on Sierpinski graphs S(K_n,t)."""

from ._italdom import *  # noqa: F401,F403
from ._italdom import __doc__  # noqa: F401
