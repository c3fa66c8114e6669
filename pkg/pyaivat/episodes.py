# -*- coding: utf-8 -*-

"""
Episode Logs
------------

Simulated matches are stored as self describing text logs::

    # pyaivat episodes version=1
    # game=leduc seed=7 x=strategy.txt y=callraise games=3
    0 x2 Qh.Ks.r.c.Js.k.k 3.0
    1 x1 Jh.Qs.k.r.f -1.0
    ...

Every record holds the episode id, the seat assignment of agent x, the
chance outcomes and actions after the seat draw joined by ``.``, and the
chips agent x won. Records replay to a terminal with the logged outcome.

Each episode draws from its own generator, seeded by the master seed and
the episode index, so a log does not depend on how the episodes were
split between worker processes.
"""
from concurrent.futures import ProcessPoolExecutor
import numpy as np
from pyaivat.constants import Defaults
from pyaivat.exceptions import DataCorruptionException
from pyaivat.exceptions import ParameterException
from pyaivat.games import create_game
from pyaivat.games.tree import policy
from pyaivat.estimators import EpisodeRecord, record_episode
from pyaivat.estimators import replay_episode
from pyaivat.payload import TextPayloadBuilder, TextPayloadDecoder
from pyaivat.utilities import format_probability, format_sample
from pyaivat.utilities import sample_index

# Logging
import logging
_logger = logging.getLogger(__name__)

_NONE = '-'


def check_agent_spec(name, spec):
    """ Rejects agent specs a log header cannot hold

    Header fields are split on whitespace when a log is read back.

    :param name: The agent, x or y
    :param spec: The strategy file or agent name
    """
    if str(spec).split() != [str(spec)]:
        raise ParameterException(
            'agent {0} spec {1!r} must not hold whitespace'.format(
                name, spec))


# region Logs

class EpisodeLog(object):
    """ The header and records of a simulated match

    .. attribute:: game_name

       The name of the inner game (``kuhn`` or ``leduc``)

    .. attribute:: seed

       The master seed of the simulation

    .. attribute:: x_spec

       The agent spec of x (strategy file or agent name)

    .. attribute:: y_spec

       The agent spec of y
    """

    def __init__(self, game_name, seed, x_spec, y_spec, records=None,
                 version=Defaults.LogVersion):
        self.game_name = game_name
        self.seed = seed
        self.x_spec = x_spec
        self.y_spec = y_spec
        self.version = version
        self.records = list(records or [])

    def game(self):
        """ Builds the seat extended game the episodes were played in
        """
        return create_game(self.game_name, seat_extended=True)

    def append(self, record):
        self.records.append(record)

    def extend(self, records):
        self.records.extend(records)

    def __iter__(self):
        return iter(self.records)

    def __len__(self):
        return len(self.records)

    def validate(self, game=None):
        """ Replays every record, raising on the first mismatch

        :param game: The game, built from the header when None
        """
        game = game or self.game()
        for record in self.records:
            replay_episode(game, record)

    # region Text

    def to_payload(self):
        """ Renders the log

        :returns: The TextPayloadBuilder holding the log
        """
        check_agent_spec('x', self.x_spec)
        check_agent_spec('y', self.y_spec)
        builder = TextPayloadBuilder()
        builder.add_comment('pyaivat episodes version={0}'.format(
            self.version))
        builder.add_header(('game', self.game_name), ('seed', self.seed),
                           ('x', self.x_spec), ('y', self.y_spec),
                           ('games', len(self.records)))
        for record in self.records:
            builder.add_record(
                record.episode_id, record.seat or _NONE,
                '.'.join(record.actions) or _NONE,
                format_probability(record.outcome))
        return builder

    def write(self, path):
        """ Writes the log to a file

        :param path: The destination
        """
        self.to_payload().write(path)
        _logger.info('wrote {0} episodes to {1}'.format(len(self), path))

    @classmethod
    def read(cls, path):
        """ Reads a log file

        :param path: The log to read
        :returns: The EpisodeLog
        """
        decoder = TextPayloadDecoder.from_file(path)
        header = decoder.decode_header()
        version = header.get('version')
        if version != str(Defaults.LogVersion):
            raise DataCorruptionException(
                '{0}: unsupported log version {1!r}'.format(path, version))
        missing = [f for f in ('game', 'seed', 'x', 'y') if f not in header]
        if missing:
            raise DataCorruptionException(
                '{0}: header lacks {1}'.format(path, missing))
        log = cls(header['game'], header['seed'], header['x'], header['y'],
                  version=int(version))
        game_id = log.game().game_id
        for number, fields in decoder.decode_records():
            if len(fields) != 4:
                raise DataCorruptionException(
                    '{0}:{1}: expected 4 fields, got {2}'.format(
                        path, number, len(fields)))
            episode_id, seat, tokens, outcome = fields
            try:
                record = EpisodeRecord(
                    int(episode_id), game_id,
                    None if seat == _NONE else seat,
                    () if tokens == _NONE else tuple(tokens.split('.')),
                    float(outcome))
            except ValueError:
                raise DataCorruptionException(
                    '{0}:{1}: malformed record'.format(path, number))
            log.append(record)
        expected = header.get('games')
        if expected is not None and expected != str(len(log)):
            raise DataCorruptionException(
                '{0}: header announces {1} games, found {2}'.format(
                    path, expected, len(log)))
        return log

    # endregion

    def __repr__(self):
        return '<EpisodeLog {0} ({1} episodes)>'.format(
            self.game_name, len(self))

# endregion


# region Workers

_worker = {}


def _initialize(payload):
    _worker.clear()
    _worker.update(payload)


def _run(function, payload, chunks, workers):
    """ Maps a worker function over chunks, keeping their order

    The payload is installed once per process; with one worker the
    chunks run in this process.
    """
    if workers <= 1:
        _initialize(payload)
        try:
            for chunk in chunks:
                yield function(chunk)
        finally:
            _worker.clear()
        return
    with ProcessPoolExecutor(max_workers=workers, initializer=_initialize,
                             initargs=(payload,)) as pool:
        for result in pool.map(function, chunks):
            yield result


def chunked(items, size):
    """ Splits a sequence into consecutive chunks

    :param items: The sequence
    :param size: The chunk size
    :returns: A list of lists
    """
    items = list(items)
    return [items[i:i + size] for i in range(0, len(items), size)]

# endregion


# region Simulation

def episode_rng(master_seed, index):
    """ Returns the generator of one episode

    :param master_seed: The master seed
    :param index: The episode index
    :returns: A numpy Generator
    """
    sequence = np.random.SeedSequence(
        entropy=int(master_seed), spawn_key=(int(index),))
    return np.random.default_rng(sequence)


def simulate_episode(game, profile, master_seed, index):
    """ Plays one episode

    :param game: The game to play
    :param profile: Mapping of player to strategy
    :param master_seed: The master seed
    :param index: The episode index, also its id
    :returns: The EpisodeRecord
    """
    rng = episode_rng(master_seed, index)
    state = game.initial_state()
    while not state.is_terminal:
        actions = game.legal_actions(state)
        distribution = policy(game, state, profile)
        draw = rng.random()
        action = actions[sample_index([distribution[a] for a in actions],
                                      draw)]
        state = game.apply_action(state, action)
    return record_episode(game, index, state)


def _simulate_chunk(indices):
    return [simulate_episode(_worker['game'], _worker['profile'],
                             _worker['seed'], index) for index in indices]


def simulate(game, profile, games, master_seed, workers=1,
             chunk_size=Defaults.ChunkSize):
    """ Simulates a number of episodes

    :param game: The game to play
    :param profile: Mapping of player to strategy
    :param games: The number of episodes
    :param master_seed: The master seed
    :param workers: The number of worker processes
    :param chunk_size: Episodes handed to a worker at a time
    :returns: A list of EpisodeRecords in episode order
    """
    if games < 1:
        raise ParameterException('at least one game must be simulated')
    payload = {'game': game, 'profile': profile, 'seed': master_seed}
    records = []
    for batch in _run(_simulate_chunk, payload,
                      chunked(range(games), chunk_size), workers):
        records.extend(batch)
        _logger.info('simulated {0}/{1} episodes'.format(
            len(records), games))
    return records

# endregion


# region Estimation

def _estimate_chunk(episodes):
    return [tuple(e.estimate(episode) for e in _worker['estimators'])
            for episode in episodes]


def estimate_episodes(estimators, episodes, workers=1,
                      chunk_size=Defaults.ChunkSize):
    """ Runs every estimator on every episode

    :param estimators: The estimators, applied to identical episodes
    :param episodes: The EpisodeRecords
    :param workers: The number of worker processes
    :param chunk_size: Episodes handed to a worker at a time
    :returns: A list, per episode, of a tuple of EstimateSamples
    """
    episodes = list(episodes)
    payload = {'estimators': list(estimators)}
    samples = []
    for batch in _run(_estimate_chunk, payload,
                      chunked(episodes, chunk_size), workers):
        samples.extend(batch)
        _logger.info('estimated {0}/{1} episodes'.format(
            len(samples), len(episodes)))
    return samples


def write_samples(path, samples, decompose=False):
    """ Writes estimate samples as ``<episode_id> <estimator> <value>``

    With ``decompose`` every AIVAT sample is followed by its base value
    and correction terms.

    :param path: The destination
    :param samples: Per episode tuples of EstimateSamples
    :param decompose: Also write the decomposition lines
    """
    builder = TextPayloadBuilder()
    builder.add_comment('pyaivat samples')
    for row in samples:
        for sample in row:
            builder.add_record(sample.episode_id, sample.estimator,
                               format_sample(sample.estimate))
            if decompose and sample.base is not None:
                builder.add_record(sample.episode_id, sample.estimator,
                                   'base', format_sample(sample.base))
                for key, term in sample.terms:
                    builder.add_record(sample.episode_id, sample.estimator,
                                       key, format_sample(term))
    builder.write(path)


def read_samples(path):
    """ Reads the estimates of a sample file, skipping decompositions

    :param path: The sample file
    :returns: A dict of estimator label to list of values, in file order
    """
    decoder = TextPayloadDecoder.from_file(path)
    values = {}
    for number, fields in decoder.decode_records():
        if len(fields) == 4:
            continue
        if len(fields) != 3:
            raise DataCorruptionException(
                '{0}:{1}: malformed sample'.format(path, number))
        try:
            values.setdefault(fields[1], []).append(float(fields[2]))
        except ValueError:
            raise DataCorruptionException(
                '{0}:{1}: malformed value {2!r}'.format(
                    path, number, fields[2]))
    return values

# endregion


# Exported symbols
__all__ = [
    'EpisodeLog', 'check_agent_spec', 'chunked', 'episode_rng',
    'simulate_episode', 'simulate',
    'estimate_episodes', 'write_samples', 'read_samples',
]
