try:
    from ._bellwit import *  # noqa: F401,F403
except ImportError:  # in-tree build puts the extension on sys.path directly
    from _bellwit import *  # noqa: F401,F403
