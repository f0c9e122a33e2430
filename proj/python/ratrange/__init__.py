from ._ratrange import *  # noqa: F401,F403
from ._ratrange import __doc__  # noqa: F401
