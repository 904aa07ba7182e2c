import asyncio
import inspect
import logging
import shlex

from aioconsole import ainput

from p3embed import bench, generator, instance as formats, svg
from p3embed.embedder import Mode, embed
from p3embed.errors import EmbeddingInputError
from p3embed.general import DPTable, embed_general
from p3embed.plane3tree import validate_and_build
from p3embed.range_oracle import Backend
from p3embed.utils import create_error_check_callback, run_blocking
from p3embed.verifier import VerifyMode, verify

logger = logging.getLogger(__name__)


def _print_doc(string):
    """
    Attempts to remove common white space at the start of the lines in a doc string
    to unify the output of doc strings with different indention levels.

    Keeps whitespace lines intact.

    :param string: doc string to print
    """
    lines = string.split('\n')
    if lines:
        prefix_i = 0
        for i, line_0 in enumerate(lines):
            # find non empty start lines
            if line_0.strip():
                # traverse line and stop if character mismatch with other non empty lines
                for prefix_i, c in enumerate(line_0):
                    if not c.isspace():
                        break
                    if any(lines[j].strip() and (prefix_i >= len(lines[j]) or c != lines[j][prefix_i])
                           for j in range(i+1, len(lines))):
                        break
                break

        for line in lines:
            print(line[prefix_i:] if line.strip() else line)


class CLI:
    def __init__(self):
        self.commands = {}

    def add_command(self, name, command):
        if name in self.commands:
            raise ValueError(f'Command {name} already registered.')
        self.commands[name] = command

    async def cmd_help(self):
        print('Commands:')
        for name, fun in inspect.getmembers(self):
            if name.startswith('cmd_') and fun.__doc__:
                _print_doc(fun.__doc__)

        for name, fun in self.commands.items():
            if fun.__doc__:
                _print_doc(fun.__doc__)

        print('Commands can be chained using "&&"')
        print('Type "exit" to close.')

    async def execute(self, user_input):
        """
        Runs one input line.
        :returns False if the line asked to exit
        """
        for command in user_input.split('&&'):
            if not command.strip():
                continue
            cmd, *args = shlex.split(command)

            if cmd == 'exit':
                return False

            if hasattr(self, f'cmd_{cmd}'):
                fun = getattr(self, f'cmd_{cmd}')
            elif cmd in self.commands:
                fun = self.commands[cmd]
            else:
                print('command', cmd, 'not found, call help for help.')
                continue

            try:
                result = await fun(*args)
                if result:
                    print(result)
            except (EmbeddingInputError, ValueError, TypeError, OSError) as e:
                print(e)
        return True

    async def run(self):
        while True:
            user_input = await ainput(prompt='cmd >> ')
            if not user_input:
                continue
            if not await self.execute(user_input):
                return


class EmbedderCLI(CLI):
    """
    Interactive shell holding one current instance and the result of the last embedding.
    """
    def __init__(self, backend=Backend.HIERARCHICAL):
        super().__init__()
        self.backend = backend
        self.instance = None
        self.tree = None
        self.mapping = None
        self.mapping_mode = None
        self.last_stats = None
        self.background = []

    def _require_instance(self):
        if self.instance is None:
            raise ValueError('No instance loaded, use "load" or "gen" first.')

    def _set_instance(self, instance):
        self.instance = instance
        self.tree = validate_and_build(instance.graph)
        self.mapping = None
        self.mapping_mode = None
        self.last_stats = None
        return f'Instance with {instance.graph.n} vertices and {len(instance.points)} points, ' \
               f'expected {instance.expected.value}.'

    async def cmd_load(self, path):
        """
        load - Loads an instance file.

        Usage:
            load <instance_file>
        """
        loaded = await run_blocking(formats.load_instance, path)
        return self._set_instance(loaded)

    async def cmd_gen(self, n, seed='0', kind='yes'):
        """
        gen - Generates an instance.

        Usage:
            gen <n> [<seed>] [yes|random|collinear]
        """
        n, seed = int(n), int(seed)
        if kind == 'yes':
            generated = generator.gen_yes_instance(n, seed)
        elif kind == 'collinear':
            generated = generator.gen_yes_instance(n, seed, general_position=False)
        elif kind == 'random':
            generated = generator.gen_random_instance(n, seed)
        else:
            raise ValueError(f'Unexpected instance kind "{kind}"')
        return self._set_instance(generated)

    async def cmd_embed(self, mode='improved'):
        """
        embed - Embeds the current instance on exactly its points.

        Usage:
            embed [baseline|improved]
        """
        self._require_instance()
        mode = Mode.from_arg(mode)
        result = await run_blocking(lambda: embed(self.tree, self.instance.points, mode=mode, backend=self.backend))
        self.last_stats = result.stats.as_dict()
        if not result.found:
            self.mapping = None
            return f'No embedding ({result.reason.value}).'
        self.mapping = result.mapping
        self.mapping_mode = VerifyMode.EXACT
        return formats.format_mapping(result.mapping).rstrip()

    async def cmd_general(self):
        """
        general - Embeds the current instance on a subset of its points.
        """
        self._require_instance()
        table = DPTable()
        mapping = await run_blocking(lambda: embed_general(self.tree, self.instance.points, self.backend, table))
        self.last_stats = {'entries_evaluated': table.entries_evaluated, 'memo_size': len(table)}
        if mapping is None:
            self.mapping = None
            return 'No embedding.'
        self.mapping = mapping
        self.mapping_mode = VerifyMode.GENERALIZED
        return formats.format_mapping(mapping).rstrip()

    async def cmd_verify(self, mapping_file=None):
        """
        verify - Verifies the last embedding or a mapping file against the current instance.

        Usage:
            verify [<mapping_file>]
        """
        self._require_instance()
        if mapping_file is not None:
            mapping = await run_blocking(formats.load_mapping, mapping_file)
            mode = VerifyMode.EXACT if len(self.instance.points) == self.instance.graph.n else VerifyMode.GENERALIZED
        elif self.mapping is not None:
            mapping, mode = self.mapping, self.mapping_mode
        else:
            raise ValueError('Nothing to verify, run "embed" or pass a mapping file.')
        report = verify(self.instance.graph, self.instance.points, mapping, mode)
        if report.valid:
            return 'Valid.'
        return '\n'.join(str(violation) for violation in report.violations)

    async def cmd_svg(self, path):
        """
        svg - Writes the last embedding (or the bare point set) as SVG.

        Usage:
            svg <output_file>
        """
        self._require_instance()
        svg.export_svg(self.instance.graph, self.instance.points, self.mapping, path)
        return f'Wrote {path}.'

    async def cmd_save(self, path, what='instance'):
        """
        save - Saves the current instance or the last mapping.

        Usage:
            save <file> [instance|mapping|json]
        """
        self._require_instance()
        if what == 'instance':
            formats.save_instance(path, self.instance)
        elif what in ('mapping', 'json'):
            if self.mapping is None:
                raise ValueError('No mapping to save.')
            formats.save_mapping(path, self.mapping, as_json=what == 'json')
        else:
            raise ValueError(f'Unexpected argument "{what}"')
        return f'Wrote {path}.'

    async def cmd_stats(self):
        """
        stats - Prints the counters of the last embedding.
        """
        if self.last_stats is None:
            return 'No statistics yet.'
        return '\n'.join(f'{key}: {value}' for key, value in self.last_stats.items())

    async def cmd_bench(self, spec, output='bench.json'):
        """
        bench - Runs a benchmark suite in the background and writes the report.

        Usage:
            bench "<suite_spec>" [<output_file>]
        """
        suite = bench.parse_suite(spec)

        async def run():
            report = await bench.run_suite(suite)
            with open(output, 'w') as f:
                f.write(bench.dump_report(report))
            print(f'Benchmark finished, report written to {output}.')

        task = asyncio.ensure_future(run())
        task.add_done_callback(create_error_check_callback())
        self.background.append(task)
        return f'Benchmark of {len(suite.n) * suite.seeds} instances started.'
