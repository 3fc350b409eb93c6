# -*- coding: utf-8 -*-
import logging
import threading
from functools import wraps

_state = threading.local()


def _depth() -> int:
    return getattr(_state, 'depth', 0)


def log(logger: logging.Logger, level: int = logging.INFO):
    """
    Trace entry and exit of the wrapped callable.

    Nested traced calls are indented with '.' per level, tracked per thread.

    :param logger: Logger that receives the trace
    :param level: Level used for the IN/OUT lines
    """
    def decorator(fn):
        @wraps(fn)
        def wrapper(*args, **kwargs):
            if not logger.isEnabledFor(level):
                return fn(*args, **kwargs)
            fName = fn.__qualname__
            depth = _depth()
            indent = '.' * depth
            _state.depth = depth + 1
            logger.log(level, "%s%s(%s, %s) IN", indent, fName, args, kwargs)
            try:
                results = fn(*args, **kwargs)
                try:
                    logger.debug("%s%s returns %s", indent, fName, results)
                except TypeError:
                    logger.debug("%s%s returns %s", indent, fName, str(results))
                return results
            except Exception as e:
                logger.exception("%s%s raised %s", indent, fName, e)
                raise
            finally:
                _state.depth = depth
                logger.log(level, "%s%s OUT", indent, fName)

        return wrapper
    return decorator
