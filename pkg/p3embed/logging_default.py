import logging
import datetime

_installed = []


def verbosity_level(verbose=0, quiet=False):
    """
    Console log level for the -v / -q command line flags.

    :param verbose: number of -v flags, 1 for INFO, 2 or more for DEBUG
    :param quiet: only show errors
    """
    if quiet:
        return logging.ERROR
    if verbose >= 2:
        return logging.DEBUG
    if verbose == 1:
        return logging.INFO
    return logging.WARNING


def configure(console_level=logging.WARNING, file_level=logging.DEBUG, logfile_name=None):
    """
    Configures logging formatting. Handlers installed by an earlier call are replaced.

    :param console_level: log level of console logger
    :param file_level: log level of file logger
    :param logfile_name: name of logfile, a date prefix and the .log suffix are added
    """
    root_logger = logging.getLogger()
    root_logger.setLevel(logging.DEBUG)
    while _installed:
        handler = _installed.pop()
        root_logger.removeHandler(handler)
        handler.close()

    formatter = logging.Formatter(
        "[%(asctime)s] %(name)s %(funcName)s::%(lineno)s %(levelname)s - %(message)s",
        "%H:%M:%S"
    )

    # create console logger
    console_handler = logging.StreamHandler()
    console_handler.setFormatter(formatter)
    console_handler.setLevel(console_level)

    root_logger.addHandler(console_handler)
    _installed.append(console_handler)

    # create file logger
    if logfile_name is not None:
        today = datetime.datetime.now()
        name_of_file = today.strftime(f'%Y-%m-%d_%H-%M_{logfile_name}.log')

        file_handler = logging.FileHandler(name_of_file)
        file_handler.setLevel(file_level)
        file_handler.setFormatter(formatter)

        root_logger.addHandler(file_handler)
        _installed.append(file_handler)
        return name_of_file
    return None
