"""Serialization of experiment reports: json, csv and a text summary table.

Output is deterministic: reports are sorted by (experiment, field, modulus), dictionary keys
are sorted and floats are rounded to ``FLOAT_DIGITS`` significant digits.  Runtimes are
blanked unless ``timing`` is requested.
"""
from __future__ import absolute_import, division, print_function, unicode_literals

import copy
import csv
import io
import json
import logging
import os

import zcode.inout as zio

from ..AuxFuncs import round_floats
from .VerifyConstants import REPORT, VERDICT

log = logging.getLogger(__name__)

FORMATS = ('json', 'csv', 'text')

_TEXT_COLUMNS = [REPORT.EXPERIMENT, REPORT.FIELD, REPORT.MODULUS, REPORT.VERDICT,
                 REPORT.BOUND_LOG, REPORT.RUNTIME]


def _sort_key(rep):
    return (rep[REPORT.EXPERIMENT], rep[REPORT.FIELD] or "", rep[REPORT.MODULUS] or "",
            json.dumps(rep[REPORT.PARAMS], sort_keys=True, default=str))


def sort_reports(reports):
    return sorted(reports, key=_sort_key)


def finalize(reports, timing=False, seed=None):
    """Sorted, rounded copies; runtimes kept only with ``timing``, seed stamped if given."""
    res = []
    for rep in sort_reports(reports):
        rep = copy.deepcopy(rep)
        if not timing:
            rep[REPORT.RUNTIME] = None
        if seed is not None and rep.get(REPORT.SEED) is None:
            rep[REPORT.SEED] = seed
        res.append(round_floats(rep))
    return res


def any_violated(reports):
    return any(rep[REPORT.VERDICT] == VERDICT.VIOLATED for rep in reports)


def to_json(reports):
    return json.dumps(reports, sort_keys=True, indent=2, default=str) + "\n"


def _cell(val):
    if isinstance(val, (dict, list)):
        return json.dumps(val, sort_keys=True, default=str)
    return "" if val is None else val


def to_csv(reports):
    """One row per per-class entry (or one row for reports without per-class entries)."""
    rows = []
    for rep in reports:
        base = {kk: rep[kk] for kk in (REPORT.EXPERIMENT, REPORT.FIELD, REPORT.MODULUS,
                                       REPORT.VERDICT)}
        entries = rep[REPORT.PER_CLASS] or [{}]
        for entry in entries:
            row = dict(base)
            row.update(entry)
            rows.append(row)
    columns = [REPORT.EXPERIMENT, REPORT.FIELD, REPORT.MODULUS, REPORT.VERDICT]
    columns += sorted(set(kk for row in rows for kk in row) - set(columns))
    buf = io.StringIO()
    writer = csv.DictWriter(buf, fieldnames=columns, lineterminator="\n")
    writer.writeheader()
    for row in rows:
        writer.writerow({kk: _cell(row.get(kk)) for kk in columns})
    return buf.getvalue()


def to_text(reports):
    table = [[str(cc) for cc in _TEXT_COLUMNS]]
    for rep in reports:
        table.append(["-" if rep[cc] is None else str(rep[cc]) for cc in _TEXT_COLUMNS])
    widths = [max(len(row[ii]) for row in table) for ii in range(len(_TEXT_COLUMNS))]
    lines = ["  ".join(val.ljust(ww) for val, ww in zip(row, widths)).rstrip()
             for row in table]
    lines.insert(1, "  ".join("-"*ww for ww in widths))
    return "\n".join(lines) + "\n"


def render(reports, fmt='json'):
    if fmt == 'json':
        return to_json(reports)
    if fmt == 'csv':
        return to_csv(reports)
    if fmt == 'text':
        return to_text(reports)
    raise ValueError("unknown format '{}', choose from {}".format(fmt, FORMATS))


def write_reports(reports, fmt='json', out=None, stream=None):
    """Render ``reports`` (already finalized) to ``out`` or to ``stream``."""
    text = render(reports, fmt)
    if out is None:
        stream.write(text)
        return text
    if os.path.dirname(out):
        zio.checkPath(out)
    with open(out, 'w') as fout:
        fout.write(text)
    log.info(" - Wrote {} report(s) to '{}'".format(len(reports), out))
    return text
