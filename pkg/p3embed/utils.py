import asyncio
import logging
import sys
from contextlib import contextmanager

logger = logging.getLogger(__name__)


@contextmanager
def get_output(path=None, open_flags='w', default=None):
    """
    Context manager that opens the file if a path was given, otherwise returns the default value
    (standard output if no default is given).
    """
    if path is not None:
        file = open(path, open_flags)
        try:
            yield file
        finally:
            file.close()
    else:
        yield default if default is not None else sys.stdout


def create_error_check_callback(ignore=None):
    """
    Creates callback causing errors of a finished future to be raised.
    Useful for background tasks that are never awaited.
    :param ignore: Any number of errors to ignore.
    :returns callback which can be added to a future with future.add_done_callback(...)
    """
    def callback(future):
        if future.cancelled():
            return
        if ignore:
            try:
                future.result()
            except ignore:
                # ignore suppressed errors
                pass
        else:
            future.result()
    return callback


async def run_blocking(fun, *args):
    """
    Runs a blocking computation in the default executor so the event loop stays responsive.
    """
    loop = asyncio.get_event_loop()
    return await loop.run_in_executor(None, fun, *args)
