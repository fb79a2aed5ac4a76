from ._stostab import *  # noqa: F401,F403
from ._stostab import __doc__  # noqa: F401
