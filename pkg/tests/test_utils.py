import asyncio
import logging
import os

import pytest

from p3embed import logging_default as log
from p3embed.utils import create_error_check_callback, get_output, run_blocking


def test_get_output(tmp_path, capsys):
    with get_output() as out:
        out.write('to stdout\n')
    assert capsys.readouterr().out == 'to stdout\n'
    path = tmp_path / 'out.txt'
    with get_output(path=str(path)) as out:
        out.write('to file\n')
    assert path.read_text() == 'to file\n'


def test_error_check_callback():
    async def fail(error):
        raise error

    async def run():
        loop = asyncio.get_event_loop()
        ignored = loop.create_task(fail(KeyError('x')))
        raised = loop.create_task(fail(ValueError('y')))
        await asyncio.gather(ignored, raised, return_exceptions=True)
        create_error_check_callback(ignore=KeyError)(ignored)
        with pytest.raises(ValueError):
            create_error_check_callback()(raised)

    asyncio.run(run())


def test_run_blocking():
    assert asyncio.run(run_blocking(sum, [1, 2, 3])) == 6


def test_verbosity_level():
    assert log.verbosity_level() == logging.WARNING
    assert log.verbosity_level(1) == logging.INFO
    assert log.verbosity_level(3) == logging.DEBUG
    assert log.verbosity_level(2, quiet=True) == logging.ERROR


def test_configure_replaces_handlers(tmp_path, monkeypatch):
    monkeypatch.chdir(tmp_path)
    root = logging.getLogger()
    before = len(root.handlers)
    log.configure()
    log.configure()
    assert len(root.handlers) <= before + 1
    name = log.configure(logfile_name='run')
    assert name.endswith('_run.log')
    logging.getLogger('p3embed.test').debug('written to the file')
    assert os.path.exists(name)
    log.configure()
