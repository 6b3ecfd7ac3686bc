try:
    from ._mwn import *  # noqa: F401,F403
    from ._mwn import __doc__  # noqa: F401
except ImportError:  # running against a bare build tree
    from _mwn import *  # noqa: F401,F403
