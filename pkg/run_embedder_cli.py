#!/usr/bin/env python3

import sys

from p3embed.cli_main import main

"""Decides point-set embeddability of plane 3-trees and draws the embeddings.

Call "shell" for an interactive session, then "help" for an explanation of available commands.

Usage:
    run_embedder_cli.py [-v | -vv | -q] [--log <log_file>] [--coord-bound <N>] [--backend <backend>] <command> ...

    run_embedder_cli.py embed <instance> [--mode baseline|improved] [--svg <out.svg>] [--stats] [-o <file>] [--json]
    run_embedder_cli.py embed-general <instance> [--svg <out.svg>] [--stats] [-o <file>] [--json]
    run_embedder_cli.py verify <instance> <mapping> [--general]
    run_embedder_cli.py gen --n <n> [--seed <s>] [--yes | --collinear] [--coord-bound <B>] [-o <file>]
    run_embedder_cli.py bench --suite <spec> [-o <report.json>]
    run_embedder_cli.py shell [<instance>]
    run_embedder_cli.py -h | --help

Options:
    --coord-bound <N>       Largest absolute coordinate accepted for input points. Placed before the command.
                            The "gen" command takes its own --coord-bound for the size of generated instances.

    --backend <backend>     Range oracle used by the embedders, "hierarchical" (default) or "brute-force".

    -l --log <log_file>     Write debug output to a dated log file.

Exit codes:
    0   embeddable / valid
    1   not embeddable / invalid
    2   input error
"""


if __name__ == '__main__':
    sys.exit(main())
