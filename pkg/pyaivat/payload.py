# -*- coding: utf-8 -*-

"""
Text Payload Builders
---------------------

A collection of utilities for building and decoding the line oriented
text files the library reads and writes: strategies, value functions,
episode logs and estimate samples.

Every file is made of three kinds of lines::

    # key=value key=value        header / comment line
    [key=value key=value]        section line
    <key> <field> <field> ...    entry line

Blank lines are ignored.
"""
import io
from pyaivat.interfaces import IPayloadBuilder
from pyaivat.exceptions import DataCorruptionException
from pyaivat.utilities import format_probability, parse_pairs


def _encode_fields(fields):
    return ' '.join('{0}={1}'.format(k, v) for k, v in fields)


def _decode_fields(text):
    fields = {}
    for token in text.split():
        name, sep, value = token.partition('=')
        if sep:
            fields[name] = value
    return fields


class TextPayloadBuilder(IPayloadBuilder):
    """
    A utility that helps build text payloads. What follows is a simple
    example::

        builder = TextPayloadBuilder()
        builder.add_header(game='kuhn')
        builder.add_pairs('1|Js||', {'k': 0.75, 'r': 0.25})
        builder.write('strategy.txt')
    """

    def __init__(self, payload=None):
        """ Initialize a new instance of the payload builder

        :param payload: Raw lines to initialize with
        """
        self._payload = list(payload or [])

    def to_string(self):
        """ Return the payload buffer as a string

        :returns: The payload buffer as a string
        """
        return ''.join(line + '\n' for line in self._payload)

    def __str__(self):
        return self.to_string()

    def reset(self):
        """ Reset the payload buffer
        """
        self._payload = []

    def build(self):
        """ Return the payload buffer as a list of lines

        :returns: The payload buffer as a list
        """
        return list(self._payload)

    def add_comment(self, text):
        """ Adds a free text comment line

        :param text: The comment text
        """
        self._payload.append('# ' + str(text))

    def add_header(self, *ordered, **fields):
        """ Adds a ``# key=value`` header line

        :param ordered: (name, value) pairs written first, in order
        :param fields: Further fields, written sorted by name
        """
        pairs = list(ordered) + sorted(fields.items())
        self._payload.append('# ' + _encode_fields(pairs))

    def add_section(self, *ordered, **fields):
        """ Adds a ``[key=value]`` section line

        :param ordered: (name, value) pairs written first, in order
        :param fields: Further fields, written sorted by name
        """
        pairs = list(ordered) + sorted(fields.items())
        self._payload.append('[' + _encode_fields(pairs) + ']')

    def add_pairs(self, key, pairs, formatter=format_probability):
        """ Adds a ``<key> <action>:<number> ...`` entry line

        :param key: The entry key
        :param pairs: An ordered mapping of action to number
        :param formatter: How numbers are written
        """
        tokens = ['{0}:{1}'.format(a, formatter(v)) for a, v in pairs.items()]
        self._payload.append(' '.join([key] + tokens))

    def add_record(self, *fields):
        """ Adds a whitespace separated record line

        :param fields: The fields of the record
        """
        self._payload.append(' '.join(str(f) for f in fields))

    def write(self, path):
        """ Writes the payload to a file

        :param path: The destination path
        """
        with io.open(path, 'w', encoding='utf-8', newline='\n') as handle:
            handle.write(self.to_string())


class TextPayloadDecoder(object):
    """
    A utility that helps decode text payloads. What follows is a simple
    example::

        decoder = TextPayloadDecoder.from_file('strategy.txt')
        header = decoder.decode_header()
        for section, key, pairs in decoder.decode_pairs():
            ...
    """

    def __init__(self, payload, source='<payload>'):
        """ Initialize a new payload decoder

        :param payload: The text to decode
        :param source: A name used in error messages
        """
        self._lines = payload.splitlines()
        self._source = source

    @classmethod
    def from_file(cls, path):
        """ Initialize a payload decoder from a file

        :param path: The file to read
        :returns: An initialized TextPayloadDecoder
        """
        try:
            with io.open(path, 'r', encoding='utf-8') as handle:
                return cls(handle.read(), str(path))
        except (IOError, OSError) as ex:
            raise DataCorruptionException(
                'cannot read {0}: {1}'.format(path, ex))

    def decode_header(self):
        """ Collects the ``key=value`` fields of all header lines

        :returns: A dict of header fields
        """
        fields = {}
        for line in self._lines:
            if line.startswith('#'):
                fields.update(_decode_fields(line[1:]))
        return fields

    def decode_records(self):
        """ Iterates over the entry lines split into fields

        :returns: A generator of (line number, fields)
        """
        for number, line in enumerate(self._lines, 1):
            line = line.strip()
            if not line or line.startswith('#') or line.startswith('['):
                continue
            yield number, line.split()

    def decode_pairs(self):
        """ Iterates over ``<key> <action>:<number>`` entry lines

        :returns: A generator of (section fields, key, dict of pairs)
        """
        section = {}
        for number, line in enumerate(self._lines, 1):
            line = line.strip()
            if not line or line.startswith('#'):
                continue
            if line.startswith('['):
                if not line.endswith(']'):
                    raise DataCorruptionException(
                        '{0}:{1}: unterminated section'.format(
                            self._source, number))
                section = _decode_fields(line[1:-1])
                continue
            fields = line.split()
            try:
                pairs = parse_pairs(fields[1:])
            except DataCorruptionException as ex:
                raise DataCorruptionException(
                    '{0}:{1}: {2}'.format(self._source, number, ex.string))
            yield section, fields[0], pairs


# Exported Identifiers
__all__ = ['TextPayloadBuilder', 'TextPayloadDecoder']
