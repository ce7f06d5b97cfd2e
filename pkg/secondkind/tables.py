from .utils import *
from .stirling import *
from .coefficients import *
from .bernoulli import *
from .powerseries import *
from .records import *

import csv
import io

tableKinds = ('stirling', 'coeffs')
bernoulli2Methods = ('coefficients', 'stirling', 'series', 'qi', 'nemes', 'all')
bernoulli2Aliases = {'qi': 'coefficients', 'nemes': 'stirling'}


def tableRecords(kind: str, nMax: int) -> list:
    """ All entries of the Stirling triangle (rows 0..nMax) or of the coefficient table (rows 1..nMax) """
    checkNonNegativeInteger(nMax, 'nMax')
    if nMax < 1:
        raise ValueError("Tables need nMax >= 1 (got {0}).".format(nMax))

    if kind == 'stirling':
        triangle = StirlingTriangle(nMax)
        return [OutputRecord.fromValue('stirling', (n, k), triangle.value(n, k))
                for n in range(nMax + 1) for k in range(n + 1)]
    elif kind == 'coeffs':
        table = CoeffTable(nMax)
        return [OutputRecord.fromValue('coeff', (n, i), table.value(n, i))
                for n in range(1, nMax + 1) for i in range(2, n + 2)]
    raise ValueError("Unknown table '{0}': use one of {1}.".format(kind, ", ".join(tableKinds)))


def renderTable(kind: str, nMax: int, format: str = 'plain') -> str:
    """Renders a table as text.

    Parameters
    ----------
    kind : str
        'stirling' for s(n,k) or 'coeffs' for a(n,i).
    nMax : int
        Last row (>= 1).
    format : str
        'plain': one row per line, "n: v v v".
        'csv': a header then one "n,k,value" (or "n,i,value") line per entry.
        'json': a list of records.

    Examples
    --------
    >>> from secondkind import *
    >>> print(renderTable('coeffs', 3), end='')
    1: 1
    2: 1 2
    3: 2 6 6
    """
    checkOutputFormat(format)
    records = tableRecords(kind, nMax)

    if format == 'json':
        return renderRecords(records, 'json')
    elif format == 'csv':
        stream = io.StringIO()
        writer = csv.writer(stream, lineterminator="\n")
        writer.writerow(['n', 'k' if kind == 'stirling' else 'i', 'value'])
        for record in records:
            writer.writerow(list(record.indices) + [record.value])
        return stream.getvalue()

    lines = []
    rows = {}
    for record in records:
        rows.setdefault(record.indices[0], []).append(record.value)
    for n, values in rows.items():
        lines.append("{0}: {1}".format(n, " ".join(values)))
    return "\n".join(lines) + "\n"


def bernoulli2Records(n: int, method: str = 'all') -> list:
    """b_n by one or all of the computation routes, as output records.

    With method='all' the three routes are computed and every record gets
    status 'ok' if they agree exactly, 'mismatch' otherwise. 'qi' is another
    name for 'coefficients' and 'nemes' for 'stirling'; records keep the
    name that was asked for.
    """
    checkNonNegativeInteger(n, 'n')
    routes = {'coefficients': lambda: bernoulli2FromCoefficients(n),
              'stirling': lambda: bernoulli2FromStirling(n),
              'series': lambda: bernoulli2FromSeries(n)[n]}
    if method not in bernoulli2Methods:
        raise ValueError("Unknown method '{0}': use one of {1}.".format(method, ", ".join(bernoulli2Methods)))

    names = list(routes) if method == 'all' else [method]
    values = {name: routes[bernoulli2Aliases.get(name, name)]() for name in names}
    status = 'ok' if len(set(values.values())) == 1 else 'mismatch'
    return [OutputRecord.fromValue('bernoulli2', (n,), value, status=status, method=name)
            for name, value in values.items()]
