# -*- coding: utf-8 -*-

"""
Command Line
------------

The end to end pipeline::

    pyaivat solve --game leduc --iterations 1000000 --out run
    pyaivat simulate --game leduc --games 100000 --out run
    pyaivat estimate --pa cx,cxy --out run
    pyaivat oracle --game kuhn --trials 50
    pyaivat report --samples run/samples.txt --out run

``solve`` writes ``strategy.txt`` (the agent strategy of the solved
profile), ``values.txt`` (exact self-play values for every known player
set) and ``values-learned.txt`` (the running means of the solver).
``simulate`` plays agent x against agent y in the seat extended game;
an agent is a strategy file or one of the built in agents. ``estimate``
runs every estimator on the same logged episodes and writes the samples
and the report.

Exit codes: 0 success, 1 usage, 2 data corruption, 3 oracle failure.
"""
import argparse
from collections import namedtuple
import os
import sys
from pyaivat.constants import Defaults, Estimator, ExitCode, Player
from pyaivat.exceptions import DataCorruptionException
from pyaivat.exceptions import OracleFailureException
from pyaivat.exceptions import ParameterException, UsageException
from pyaivat.episodes import EpisodeLog, check_agent_spec
from pyaivat.episodes import estimate_episodes, simulate
from pyaivat.episodes import read_samples, write_samples
from pyaivat.estimators import EstimatorConfig, PartitionCache
from pyaivat.estimators import build_estimator
from pyaivat.games import create_game, game_names
from pyaivat.games.tree import expected_value
from pyaivat.oracle import check_unbiased, run_oracle
from pyaivat.partitions import PA_CODES, write_partition
from pyaivat.solver.agents import agent_names, fixed_agent
from pyaivat.solver.mccfr import mccfr_train
from pyaivat.solver.strategy import agent_profile
from pyaivat.solver.strategy import read_strategy, read_value_functions
from pyaivat.solver.strategy import write_strategy, write_value_functions
from pyaivat.solver.values import exact_values
from pyaivat.stats import RunningSummary, compare, report_table
from pyaivat.stats import write_report
from pyaivat.version import Version

# Logging
import logging
_logger = logging.getLogger(__name__)


def _split(text):
    return [item.strip() for item in (text or '').split(',') if item.strip()]


class RunConfig(namedtuple('RunConfig', [
        'game', 'x_spec', 'y_spec', 'games', 'seed', 'iterations',
        'estimators', 'pa_codes', 'values', 'out', 'workers', 'decompose',
        'dump_partitions', 'trials'])):
    """ The validated options of one command
    """
    __slots__ = ()

    @classmethod
    def from_options(cls, options):
        """ Builds the configuration from parsed arguments

        :param options: The argparse namespace
        :returns: The RunConfig
        """
        out = getattr(options, 'out', None) or '.'
        config = cls(
            game=getattr(options, 'game', None),
            x_spec=getattr(options, 'x', None) or os.path.join(
                out, Defaults.StrategyFile),
            y_spec=getattr(options, 'y', None) or os.path.join(
                out, Defaults.StrategyFile),
            games=getattr(options, 'games', Defaults.Games),
            seed=getattr(options, 'seed', Defaults.Seed),
            iterations=getattr(options, 'iterations', Defaults.Iterations),
            estimators=tuple(_split(getattr(
                options, 'estimators', None)) or Estimator.All),
            pa_codes=tuple(_split(getattr(options, 'pa', None)) or ('cx',)),
            values=getattr(options, 'values', None),
            out=out,
            workers=getattr(options, 'workers', Defaults.Workers),
            decompose=getattr(options, 'decompose', False),
            dump_partitions=getattr(options, 'dump_partitions', False),
            trials=getattr(options, 'trials', None))
        config.validate()
        return config

    def validate(self):
        """ Checks the ranges and names of the options
        """
        if self.game is not None and self.game not in game_names():
            raise ParameterException('unknown game {0!r}'.format(self.game))
        for name in ('games', 'iterations', 'workers', 'trials'):
            value = getattr(self, name)
            if value is not None and value < 1:
                raise ParameterException(
                    '--{0} must be at least 1, got {1}'.format(name, value))
        for name in self.estimators:
            if name not in Estimator.All:
                raise ParameterException(
                    'unknown estimator {0!r}, expected one of {1}'.format(
                        name, ', '.join(Estimator.All)))
        for code in self.pa_codes:
            if code not in PA_CODES:
                raise ParameterException(
                    'unknown known player code {0!r}, expected one of '
                    '{1}'.format(code, ', '.join(PA_CODES)))

    def path(self, name):
        return os.path.join(self.out, name)

    def value_file(self):
        """ Returns the value file, ``values.txt`` of the output directory
        when none was given
        """
        if self.values is not None:
            return self.values
        default = self.path(Defaults.ValueFile)
        if os.path.exists(default):
            return default
        return None


def load_agent(spec, owner, game_id=None):
    """ Loads an agent from a strategy file or a built in agent name

    :param spec: The file path or agent name
    :param owner: The agent the strategy plays for
    :param game_id: The game the strategy must play
    :returns: The strategy
    """
    if spec in agent_names():
        return fixed_agent(spec, owner)
    if not os.path.exists(spec):
        raise ParameterException(
            'agent {0!r} is neither a strategy file nor one of {1}'.format(
                spec, ', '.join(agent_names())))
    return read_strategy(spec, owner, game_id)


def _prepare(config):
    if not os.path.isdir(config.out):
        os.makedirs(config.out)


# region Commands

def cmd_solve(config, stream=sys.stdout):
    """ Solves the seat extended game and writes strategy and values

    :param config: The RunConfig
    :param stream: Where the summary is printed
    :returns: The SolveReport
    """
    _prepare(config)
    game = create_game(config.game, seat_extended=True)
    profile, learned, report = mccfr_train(
        game, config.iterations, config.seed,
        [c for c in Defaults.Checkpoints if c < config.iterations])
    strategy = profile[Player.X]
    write_strategy(config.path(Defaults.StrategyFile), strategy,
                   game.game_id)
    cache = PartitionCache(game)
    self_play = agent_profile(strategy, strategy)
    functions = dict((code, exact_values(
        game, self_play, cache(code)[0], Player.X))
        for code in PA_CODES if code != 'c')
    # mivat values see the cards of x only
    functions['c'] = exact_values(
        game, self_play, cache('c')[0], Player.X, observer=Player.X)
    write_value_functions(config.path(Defaults.ValueFile), functions,
                          game.game_id)
    write_value_functions(config.path(Defaults.LearnedValueFile), {
        'cx': learned[Player.X],
        'cy': learned[Player.Y].negated(Player.X),
    }, game.game_id)
    for iterations, value in report.checkpoints:
        stream.write('iterations {0} exploitability {1:.6f}\n'.format(
            iterations, value))
    stream.write('exploitability {0:.6f} chips/game\n'.format(
        report.exploitability))
    return report


def cmd_simulate(config, stream=sys.stdout):
    """ Plays agent x against agent y and writes the episode log

    :param config: The RunConfig
    :param stream: Where the summary is printed
    :returns: The EpisodeLog
    """
    check_agent_spec('x', config.x_spec)
    check_agent_spec('y', config.y_spec)
    _prepare(config)
    game = create_game(config.game, seat_extended=True)
    profile = agent_profile(
        load_agent(config.x_spec, Player.X, game.game_id),
        load_agent(config.y_spec, Player.Y, game.game_id))
    records = simulate(game, profile, config.games, config.seed,
                       config.workers)
    log = EpisodeLog(config.game, config.seed, config.x_spec,
                     config.y_spec, records)
    log.write(config.path(Defaults.EpisodeFile))
    summary = RunningSummary(Estimator.Chips).extend(
        r.outcome for r in records)
    stream.write('{0} games, x wins {1:.5f} chips/game\n'.format(
        len(log), summary.mean))
    return log


def _estimator_configs(config, strategies, functions):
    configs = []
    for kind in config.estimators:
        codes = config.pa_codes if kind == Estimator.Aivat else (None,)
        for code in codes:
            value_function = None
            if kind in (Estimator.Mivat, Estimator.MivatIo):
                value_function = functions.get('c')
            elif kind == Estimator.Aivat:
                value_function = functions.get(code)
            if value_function is None and kind in (
                    Estimator.Mivat, Estimator.MivatIo, Estimator.Aivat):
                raise ParameterException(
                    '{0} needs values for pa={1}, pass --values'.format(
                        kind, code or 'c'))
            configs.append(EstimatorConfig(
                kind, code, strategies, value_function, Player.X))
    return configs


def cmd_estimate(config, log_path=None, stream=sys.stdout):
    """ Runs every requested estimator over a logged match

    :param config: The RunConfig
    :param log_path: The episode log, ``episodes.txt`` when None
    :param stream: Where the report table is printed
    :returns: A (SummaryRows, ReductionRows, true value) tuple
    """
    _prepare(config)
    log = EpisodeLog.read(log_path or config.path(Defaults.EpisodeFile))
    game = log.game()
    strategies = agent_profile(
        load_agent(log.x_spec, Player.X, game.game_id),
        load_agent(log.y_spec, Player.Y, game.game_id))
    value_file = config.value_file()
    functions = read_value_functions(value_file) if value_file else {}
    cache = PartitionCache(game)
    estimators = [build_estimator(game, c, cache) for c in
                  _estimator_configs(config, strategies, functions)]
    if config.dump_partitions:
        for code in config.pa_codes:
            h_partition, w_partition = cache(code)
            write_partition(config.path('h-partition-{0}.txt'.format(code)),
                            h_partition)
            write_partition(config.path('w-partition-{0}.txt'.format(code)),
                            w_partition)
    samples = estimate_episodes(estimators, log, config.workers)
    write_samples(config.path(Defaults.SampleFile), samples,
                  config.decompose)
    summaries = [RunningSummary(e.name) for e in estimators]
    for row in samples:
        for summary, sample in zip(summaries, row):
            summary.add(sample.estimate)
    true_value = expected_value(game, strategies, Player.X)
    return _report(config, [s.summary() for s in summaries], true_value,
                   stream)


def _report(config, rows, true_value, stream):
    baseline = [r for r in rows if r.label == Estimator.Chips]
    reductions = []
    if baseline and baseline[0].sd > 0.0:
        reductions = compare(baseline[0], rows)
    write_report(config.path(Defaults.ReportFile),
                 config.path(Defaults.TableFile), rows, reductions,
                 true_value)
    stream.write(report_table(rows, reductions, true_value))
    return rows, reductions, true_value


def cmd_oracle(config, stream=sys.stdout):
    """ Runs the unbiasedness oracle on random profiles and values

    :param config: The RunConfig
    :param stream: Where the check summary is printed
    :returns: The OracleReport
    """
    game = create_game(config.game, seat_extended=True)
    report = run_oracle(game, config.trials, config.seed)
    for line in report.lines():
        stream.write(line + '\n')
    check_unbiased(report)
    return report


def cmd_report(config, samples_path=None, stream=sys.stdout):
    """ Summarizes a sample file

    :param config: The RunConfig
    :param samples_path: The samples, ``samples.txt`` when None
    :param stream: Where the report table is printed
    :returns: A (SummaryRows, ReductionRows, None) tuple
    """
    _prepare(config)
    values = read_samples(samples_path or config.path(Defaults.SampleFile))
    if not values:
        raise DataCorruptionException('no samples to report')
    rows = [RunningSummary(label).extend(values[label]).summary()
            for label in values]
    return _report(config, rows, None, stream)

# endregion


# region Parser

class _Parser(argparse.ArgumentParser):
    """ An argument parser exiting with the usage code
    """

    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(ExitCode.Usage, '{0}: error: {1}\n'.format(
            self.prog, message))


def _add_common(parser, *names):
    options = {
        'game': (('--game',), dict(choices=game_names(), default='kuhn')),
        'seed': (('--seed',), dict(type=int, default=Defaults.Seed)),
        'out': (('--out',), dict(default='.', help='output directory')),
        'workers': (('--workers',), dict(type=int, default=Defaults.Workers)),
    }
    for name in names:
        flags, keywords = options[name]
        parser.add_argument(*flags, **keywords)


def _run_solve(options):
    cmd_solve(RunConfig.from_options(options))


def _run_simulate(options):
    cmd_simulate(RunConfig.from_options(options))


def _run_estimate(options):
    cmd_estimate(RunConfig.from_options(options), options.log)


def _run_oracle(options):
    cmd_oracle(RunConfig.from_options(options))


def _run_report(options):
    cmd_report(RunConfig.from_options(options), options.samples)


def build_parser():
    """ Builds the command line parser

    :returns: The ArgumentParser
    """
    parser = _Parser(prog='pyaivat', description='AIVAT agent evaluation')
    parser.add_argument('--version', action='version',
                        version=Version.get_current_version().short())
    verbosity = parser.add_mutually_exclusive_group()
    verbosity.add_argument('-v', '--verbose', action='store_true')
    verbosity.add_argument('-q', '--quiet', action='store_true')
    commands = parser.add_subparsers(dest='command', parser_class=_Parser)
    commands.required = True

    command = commands.add_parser('solve', help='solve a game with MCCFR')
    _add_common(command, 'game', 'seed', 'out')
    command.add_argument('--iterations', type=int,
                         default=Defaults.Iterations)
    command.set_defaults(func=_run_solve)

    command = commands.add_parser('simulate', help='play agent x against y')
    _add_common(command, 'game', 'seed', 'out', 'workers')
    command.add_argument('--games', type=int, default=Defaults.Games)
    command.add_argument('--x', help='strategy file or built in agent')
    command.add_argument('--y', help='strategy file or built in agent')
    command.set_defaults(func=_run_simulate)

    command = commands.add_parser('estimate', help='estimate a logged match')
    _add_common(command, 'out', 'workers')
    command.add_argument('--log', help='episode log to read')
    command.add_argument('--values', help='value function file')
    command.add_argument('--estimators',
                         help='comma separated list of ' +
                         ','.join(Estimator.All))
    command.add_argument('--pa', default='cx',
                         help='comma separated known player codes')
    command.add_argument('--decompose', action='store_true')
    command.add_argument('--dump-partitions', action='store_true')
    command.set_defaults(func=_run_estimate)

    command = commands.add_parser('oracle', help='check unbiasedness')
    _add_common(command, 'game', 'seed')
    command.add_argument('--trials', type=int, default=10)
    command.set_defaults(func=_run_oracle)

    command = commands.add_parser('report', help='summarize a sample file')
    _add_common(command, 'out')
    command.add_argument('--samples', help='sample file to read')
    command.set_defaults(func=_run_report)
    return parser

# endregion


__codes = [
    (OracleFailureException, ExitCode.OracleFailure),
    (DataCorruptionException, ExitCode.DataCorruption),
    (ParameterException, ExitCode.Usage),
    (UsageException, ExitCode.Usage),
    (EnvironmentError, ExitCode.Usage),
]


def main(argv=None):
    """ Runs the command line

    :param argv: The arguments, ``sys.argv[1:]`` when None
    :returns: The exit code
    """
    options = build_parser().parse_args(argv)
    level = logging.INFO
    if options.verbose:
        level = logging.DEBUG
    elif options.quiet:
        level = logging.WARNING
    logging.basicConfig(
        level=level, format='%(asctime)s %(levelname)s %(name)s %(message)s')
    try:
        options.func(options)
    except Exception as ex:
        for kind, code in __codes:
            if isinstance(ex, kind):
                _logger.error(str(ex))
                return code
        raise
    return ExitCode.Success


if __name__ == '__main__':
    sys.exit(main())
