# -*- coding: utf-8 -*-

"""
Sample Statistics
-----------------

Single pass summaries of estimate streams and the variance reduction of
every estimator against a baseline (usually the chip count).

Running summaries keep an exact sum of the samples (as non-overlapping
partial sums) next to Welford's squared deviations, so two summaries of
disjoint samples merge into the summary of the whole stream: the mean
exactly, the standard deviation up to rounding.
"""
from collections import namedtuple
import csv
import io
import math
from pyaivat.constants import Defaults
from pyaivat.exceptions import DataCorruptionException
from pyaivat.exceptions import ParameterException

# Logging
import logging
_logger = logging.getLogger(__name__)


#: Mean, sample standard deviation, standard error and 95% interval of
#: one estimator's samples.
SummaryRow = namedtuple('SummaryRow', [
    'label', 'n', 'mean', 'sd', 'stderr', 'ci_lo', 'ci_hi'])

#: Standard deviation of one estimator relative to the baseline, and the
#: factor of games the baseline needs to match it.
ReductionRow = namedtuple('ReductionRow', [
    'label', 'sd_ratio', 'data_factor', 'sd_reduction_percent'])

REPORT_FIELDS = ('estimator', 'n', 'mean', 'sd', 'stderr', 'ci_lo', 'ci_hi',
                 'sd_ratio', 'data_factor')


def _add_partial(partials, value):
    index = 0
    for other in partials:
        if abs(value) < abs(other):
            value, other = other, value
        high = value + other
        low = other - (high - value)
        if low:
            partials[index] = low
            index += 1
        value = high
    partials[index:] = [value]


class RunningSummary(object):
    """ A mergeable single pass summary of a sample stream
    """

    def __init__(self, label=None):
        """ Initialize an empty summary

        :param label: The estimator label
        """
        self.label = label
        self.count = 0
        self._partials = []
        self._mean = 0.0
        self._squares = 0.0

    def add(self, value):
        """ Adds one sample

        :param value: The sample
        """
        value = float(value)
        self.count += 1
        _add_partial(self._partials, value)
        delta = value - self._mean
        self._mean += delta / self.count
        self._squares += delta * (value - self._mean)

    def extend(self, values):
        """ Adds every sample of an iterable

        :param values: The samples
        """
        for value in values:
            self.add(value)
        return self

    def merge(self, other):
        """ Combines the summaries of two disjoint streams

        :param other: The other RunningSummary
        :returns: A new RunningSummary
        """
        result = RunningSummary(self.label or other.label)
        result.count = self.count + other.count
        if not result.count:
            return result
        result._partials = list(self._partials)
        for partial in other._partials:
            _add_partial(result._partials, partial)
        delta = other._mean - self._mean
        result._mean = self._mean + delta * other.count / result.count
        result._squares = self._squares + other._squares + \
            delta * delta * self.count * other.count / result.count
        return result

    @property
    def mean(self):
        if not self.count:
            return 0.0
        return math.fsum(self._partials) / self.count

    @property
    def variance(self):
        if self.count < 2:
            return 0.0
        return max(self._squares, 0.0) / (self.count - 1)

    def summary(self):
        """ Returns the SummaryRow of the stream

        :returns: The SummaryRow
        """
        if self.count < 2:
            raise ParameterException(
                '{0}: at least two samples are needed, got {1}'.format(
                    self.label, self.count))
        sd = math.sqrt(self.variance)
        stderr = sd / math.sqrt(self.count)
        half = Defaults.ConfidenceZ * stderr
        mean = self.mean
        return SummaryRow(self.label, self.count, mean, sd, stderr,
                          mean - half, mean + half)

    def __repr__(self):
        return '<RunningSummary {0} n={1}>'.format(self.label, self.count)


def summarize(samples, label=None):
    """ Summarizes a stream of samples

    :param samples: An iterable of floats
    :param label: The estimator label
    :returns: The SummaryRow
    """
    return RunningSummary(label).extend(samples).summary()


def compare(baseline, rows):
    """ Computes the variance reduction of every row against a baseline

    :param baseline: The baseline SummaryRow
    :param rows: The SummaryRows to compare, from the same episodes
    :returns: A list of ReductionRows
    """
    if baseline.sd == 0.0:
        raise ParameterException(
            'baseline {0} has zero deviation'.format(baseline.label))
    result = []
    for row in rows:
        if row.n != baseline.n:
            raise ParameterException(
                '{0} has {1} samples, baseline {2} has {3}'.format(
                    row.label, row.n, baseline.label, baseline.n))
        ratio = row.sd / baseline.sd
        factor = (baseline.sd / row.sd) ** 2 if row.sd else float('inf')
        result.append(ReductionRow(
            row.label, ratio, factor, 100.0 * (1.0 - ratio)))
    return result


# region Reports

def _report_rows(rows, reductions):
    reduced = dict((r.label, r) for r in reductions or ())
    for row in rows:
        reduction = reduced.get(row.label)
        yield row, reduction


def report_csv(rows, reductions=None):
    """ Renders the report as CSV

    :param rows: The SummaryRows
    :param reductions: The ReductionRows, matched by label
    :returns: The CSV text
    """
    handle = io.StringIO()
    writer = csv.writer(handle, lineterminator='\n')
    writer.writerow(REPORT_FIELDS)
    for row, reduction in _report_rows(rows, reductions):
        writer.writerow([
            row.label, row.n, repr(row.mean), repr(row.sd),
            repr(row.stderr), repr(row.ci_lo), repr(row.ci_hi),
            repr(reduction.sd_ratio) if reduction else '',
            repr(reduction.data_factor) if reduction else ''])
    return handle.getvalue()


def report_table(rows, reductions=None, true_value=None):
    """ Renders the report as an aligned text table

    :param rows: The SummaryRows
    :param reductions: The ReductionRows, matched by label
    :param true_value: The exact expected value, when known
    :returns: The table text
    """
    header = ('estimator', 'n', 'mean', 'sd', '95% ci', 'sd ratio',
              'reduction', 'data x')
    lines = [header]
    for row, reduction in _report_rows(rows, reductions):
        lines.append((
            row.label, str(row.n), '{0:.5f}'.format(row.mean),
            '{0:.5f}'.format(row.sd),
            '[{0:.5f}, {1:.5f}]'.format(row.ci_lo, row.ci_hi),
            '{0:.4f}'.format(reduction.sd_ratio) if reduction else '-',
            '{0:.1f}%'.format(reduction.sd_reduction_percent)
            if reduction else '-',
            '{0:.1f}'.format(reduction.data_factor) if reduction else '-'))
    widths = [max(len(line[i]) for line in lines) for i in range(len(header))]
    text = [' '.join(cell.rjust(width) if i else cell.ljust(width)
                     for i, (cell, width) in enumerate(zip(line, widths)))
            .rstrip() for line in lines]
    if true_value is not None:
        text.append('true value {0:.5f}'.format(true_value))
    return '\n'.join(text) + '\n'


def write_report(csv_path, table_path, rows, reductions=None,
                 true_value=None):
    """ Writes the CSV report and the text table

    :param csv_path: The CSV destination
    :param table_path: The table destination, skipped when None
    :param rows: The SummaryRows
    :param reductions: The ReductionRows
    :param true_value: The exact expected value, when known
    """
    with io.open(csv_path, 'w', encoding='utf-8', newline='') as handle:
        handle.write(report_csv(rows, reductions))
    if table_path is not None:
        with io.open(table_path, 'w', encoding='utf-8') as handle:
            handle.write(report_table(rows, reductions, true_value))
    _logger.debug('wrote report of {0} rows to {1}'.format(
        len(rows), csv_path))


def read_report(path):
    """ Reads the summary rows of a CSV report

    :param path: The CSV report
    :returns: A list of SummaryRows
    """
    with io.open(path, 'r', encoding='utf-8', newline='') as handle:
        reader = csv.DictReader(handle)
        missing = set(REPORT_FIELDS) - set(reader.fieldnames or ())
        if missing:
            raise DataCorruptionException('{0} lacks columns {1}'.format(
                path, sorted(missing)))
        try:
            return [SummaryRow(
                record['estimator'], int(record['n']),
                float(record['mean']), float(record['sd']),
                float(record['stderr']), float(record['ci_lo']),
                float(record['ci_hi'])) for record in reader]
        except (TypeError, ValueError) as ex:
            raise DataCorruptionException('{0}: {1}'.format(path, ex))

# endregion


# Exported symbols
__all__ = [
    'SummaryRow', 'ReductionRow', 'REPORT_FIELDS', 'RunningSummary',
    'summarize', 'compare', 'report_csv', 'report_table', 'write_report',
    'read_report',
]
