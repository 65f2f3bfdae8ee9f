from ._speclab import *  # noqa: F401,F403
from ._speclab import __doc__  # noqa: F401
