from .utils import *

import csv
import io
import json
from dataclasses import dataclass
from fractions import Fraction

recordKinds = ('stirling', 'coeff', 'bernoulli2', 'verify-report')
recordStatuses = ('ok', 'mismatch', 'error')
outputFormats = ('plain', 'csv', 'json')


def formatValue(value) -> str:
    """Exact value as text: integers bare, rationals as "p/q" in lowest
    terms with the sign on the numerator.

    >>> formatValue(Fraction(-2, 24))
    '-1/12'
    >>> formatValue(Fraction(6, 3))
    '2'
    """
    if isinstance(value, bool):
        raise TypeError("A boolean is not an exact number.")
    if isinstance(value, int):
        return str(value)
    if isinstance(value, Fraction):
        if value.denominator == 1:
            return str(value.numerator)
        return "{0}/{1}".format(value.numerator, value.denominator)
    raise TypeError("Cannot format '{0}' as an exact value.".format(value))


def parseValue(text: str):
    """ Inverse of formatValue(): an int, or a Fraction when the text has a denominator """
    text = text.strip()
    if '/' in text:
        value = Fraction(text)
        if value.denominator == 1:
            return value.numerator
        return value
    return int(text)


@dataclass(frozen=True)
class OutputRecord:
    """One line of machine-readable output.

    Attributes
    ----------
    kind : str
        'stirling', 'coeff', 'bernoulli2' or 'verify-report'.
    indices : tuple of int
        (n, k) for a Stirling number, (n, i) for a coefficient, (n,) for b_n.
    value : str
        Exact value as formatted by formatValue(), or a residual for reports.
    status : str
        'ok', 'mismatch' or 'error'.
    method : str
        Computation route that produced the value, empty when irrelevant.
    """
    kind: str
    indices: tuple
    value: str
    status: str = 'ok'
    method: str = ''

    def __post_init__(self):
        if self.kind not in recordKinds:
            raise ValueError("Unknown record kind '{0}'.".format(self.kind))
        if self.status not in recordStatuses:
            raise ValueError("Unknown record status '{0}'.".format(self.status))
        object.__setattr__(self, 'indices', tuple(int(index) for index in self.indices))

    @classmethod
    def fromValue(cls, kind: str, indices, value, status: str = 'ok', method: str = '') -> 'OutputRecord':
        return cls(kind=kind, indices=indices, value=formatValue(value), status=status, method=method)

    @property
    def exactValue(self):
        return parseValue(self.value)

    def asDict(self) -> dict:
        description = {'kind': self.kind, 'indices': list(self.indices), 'value': self.value, 'status': self.status}
        if self.method:
            description['method'] = self.method
        return description

    @classmethod
    def fromDict(cls, description: dict) -> 'OutputRecord':
        return cls(kind=description['kind'], indices=description['indices'], value=description['value'],
                   status=description.get('status', 'ok'), method=description.get('method', ''))

    def __str__(self):
        label = "{0}({1})".format(self.kind, ",".join(str(index) for index in self.indices))
        if self.method:
            label += " [{0}]".format(self.method)
        return "{0} = {1} {2}".format(label, self.value, self.status)


def checkOutputFormat(format: str):
    if format not in outputFormats:
        raise ValueError("Unknown output format '{0}': use one of {1}.".format(format, ", ".join(outputFormats)))


def renderRecords(records, format: str = 'plain') -> str:
    """Renders records as text, one per line ('plain' or 'csv'), or as a JSON list.

    The output ends with a newline and depends only on the records.
    """
    checkOutputFormat(format)
    records = list(records)
    if format == 'json':
        return json.dumps([record.asDict() for record in records], indent=2) + "\n"
    elif format == 'csv':
        stream = io.StringIO()
        writer = csv.writer(stream, lineterminator="\n")
        writer.writerow(['kind', 'indices', 'method', 'value', 'status'])
        for record in records:
            writer.writerow([record.kind, " ".join(str(index) for index in record.indices),
                             record.method, record.value, record.status])
        return stream.getvalue()
    return "".join(str(record) + "\n" for record in records)


def parseJsonRecords(text: str) -> list:
    return [OutputRecord.fromDict(description) for description in json.loads(text)]
