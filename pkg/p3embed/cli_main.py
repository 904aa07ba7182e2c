"""
Command line entry point, see run_embedder_cli.py for usage.

Exit codes: 0 embeddable / valid, 1 not embeddable / invalid, 2 input error.
"""
import argparse
import asyncio
import json
import logging

from p3embed import bench, generator, logging_default as log, svg, utils
from p3embed import instance as formats
from p3embed.command_line_interface import EmbedderCLI
from p3embed.embedder import Mode, embed
from p3embed.errors import EmbeddingInputError
from p3embed.general import DPTable, embed_general
from p3embed.geometry import DEFAULT_COORDINATE_BOUND, set_coordinate_bound
from p3embed.plane3tree import validate_and_build
from p3embed.range_oracle import Backend
from p3embed.verifier import VerifyMode, verify

logger = logging.getLogger(__name__)

EXIT_OK = 0
EXIT_NEGATIVE = 1
EXIT_INPUT_ERROR = 2


def _write_mapping(mapping, args):
    with utils.get_output(path=args.output) as out:
        out.write(formats.mapping_to_json(mapping) + '\n' if args.json else formats.format_mapping(mapping))


def _cmd_embed(args):
    loaded = formats.load_instance(args.instance)
    tree = validate_and_build(loaded.graph)
    result = embed(tree, loaded.points, mode=Mode.from_arg(args.mode), backend=args.backend)
    if args.stats:
        print(json.dumps(result.stats.as_dict(), indent=1))
    if not result.found:
        print(f'not embeddable: {result.reason.value}')
        if args.svg:
            svg.export_svg(loaded.graph, loaded.points, None, args.svg)
        return EXIT_NEGATIVE
    _write_mapping(result.mapping, args)
    if args.svg:
        svg.export_svg(loaded.graph, loaded.points, result.mapping, args.svg)
    return EXIT_OK


def _cmd_embed_general(args):
    loaded = formats.load_instance(args.instance)
    tree = validate_and_build(loaded.graph)
    table = DPTable()
    mapping = embed_general(tree, loaded.points, backend=args.backend, table=table)
    if args.stats:
        print(json.dumps({'entries_evaluated': table.entries_evaluated, 'memo_size': len(table)}, indent=1))
    if mapping is None:
        print('not embeddable')
        return EXIT_NEGATIVE
    _write_mapping(mapping, args)
    if args.svg:
        svg.export_svg(loaded.graph, loaded.points, mapping, args.svg)
    return EXIT_OK


def _cmd_verify(args):
    loaded = formats.load_instance(args.instance)
    mapping = formats.load_mapping(args.mapping)
    mode = VerifyMode.GENERALIZED if args.general else VerifyMode.EXACT
    report = verify(loaded.graph, loaded.points, mapping, mode)
    if report.valid:
        print('valid')
        return EXIT_OK
    for violation in report.violations:
        print(violation)
    return EXIT_NEGATIVE


def _cmd_gen(args):
    if args.collinear:
        generated = generator.gen_yes_instance(args.n, args.seed, args.gen_coord_bound, general_position=False)
    elif args.yes:
        generated = generator.gen_yes_instance(args.n, args.seed, args.gen_coord_bound)
    else:
        generated = generator.gen_random_instance(args.n, args.seed, args.gen_coord_bound)
    with utils.get_output(path=args.output) as out:
        out.write(formats.serialize_instance(generated))
    return EXIT_OK


def _cmd_bench(args):
    report = bench.bench(args.suite)
    with utils.get_output(path=args.output) as out:
        out.write(bench.dump_report(report) + '\n')
    failed = [run['instance'] for run in report['runs'] if run['verified'] is False]
    if failed:
        logger.error(f'Verifier rejected mappings for {", ".join(failed)}')
        return EXIT_NEGATIVE
    return EXIT_OK


def _cmd_shell(args):
    cli = EmbedderCLI(backend=args.backend)

    async def _run():
        if args.instance:
            print(await cli.cmd_load(args.instance))
        await cli.run()

    asyncio.run(_run())
    return EXIT_OK


def build_parser():
    parser = argparse.ArgumentParser(prog='run_embedder_cli.py',
                                     description='Point-set embedding of plane 3-trees.')
    parser.add_argument('-v', '--verbose', action='count', default=0, help='-v for info, -vv for debug output')
    parser.add_argument('-q', '--quiet', action='store_true', help='only print errors')
    parser.add_argument('-l', '--log', help='also write debug output to a dated log file with this name')
    parser.add_argument('--coord-bound', dest='max_coord', type=int, default=DEFAULT_COORDINATE_BOUND,
                        help='largest absolute point coordinate accepted (default 2^31 - 1)')
    parser.add_argument('--backend', type=Backend.from_arg, default=Backend.HIERARCHICAL,
                        help='range oracle: hierarchical or brute-force')
    commands = parser.add_subparsers(dest='command', required=True)

    cmd = commands.add_parser('embed', help='embed a plane 3-tree on exactly its points')
    cmd.add_argument('instance')
    cmd.add_argument('--mode', choices=[mode.value for mode in Mode], default=Mode.IMPROVED.value)
    cmd.add_argument('--svg')
    cmd.add_argument('--stats', action='store_true')
    cmd.add_argument('-o', '--output')
    cmd.add_argument('--json', action='store_true', help='write the mapping as JSON')
    cmd.set_defaults(handler=_cmd_embed)

    cmd = commands.add_parser('embed-general', help='embed a plane 3-tree on a subset of the points')
    cmd.add_argument('instance')
    cmd.add_argument('--svg')
    cmd.add_argument('--stats', action='store_true')
    cmd.add_argument('-o', '--output')
    cmd.add_argument('--json', action='store_true')
    cmd.set_defaults(handler=_cmd_embed_general)

    cmd = commands.add_parser('verify', help='check a mapping against an instance')
    cmd.add_argument('instance')
    cmd.add_argument('mapping')
    cmd.add_argument('--general', action='store_true', help='allow unused points')
    cmd.set_defaults(handler=_cmd_verify)

    cmd = commands.add_parser('gen', help='generate an instance')
    cmd.add_argument('--n', type=int, required=True)
    cmd.add_argument('--seed', type=int, default=0)
    kind = cmd.add_mutually_exclusive_group()
    kind.add_argument('--yes', action='store_true', help='embeddable instance with planted drawing')
    kind.add_argument('--collinear', action='store_true', help='embeddable instance with collinear points')
    cmd.add_argument('--coord-bound', dest='gen_coord_bound', type=int, default=generator.DEFAULT_COORD_BOUND)
    cmd.add_argument('-o', '--output')
    cmd.set_defaults(handler=_cmd_gen)

    cmd = commands.add_parser('bench', help='run a benchmark suite')
    cmd.add_argument('--suite', required=True, help='"key=value; ..." spec or JSON file')
    cmd.add_argument('-o', '--output')
    cmd.set_defaults(handler=_cmd_bench)

    cmd = commands.add_parser('shell', help='interactive shell')
    cmd.add_argument('instance', nargs='?')
    cmd.set_defaults(handler=_cmd_shell)
    return parser


def main(argv=None):
    parser = build_parser()
    args = parser.parse_args(argv)
    log.configure(console_level=log.verbosity_level(args.verbose, args.quiet), logfile_name=args.log)

    try:
        set_coordinate_bound(args.max_coord)
        return args.handler(args)
    except (EmbeddingInputError, OSError) as e:
        logger.error(e)
        print(f'error: {e}')
        return EXIT_INPUT_ERROR
