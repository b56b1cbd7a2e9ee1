"""Shared rendering of command results."""
import json
import sys

from well_pressure.units import format_number

human_digits = 9


def format_value(value):
    if value is None:
        return '-'
    if isinstance(value, bool) or isinstance(value, str):
        return str(value)
    if isinstance(value, int):
        return str(value)
    return format_number(value, human_digits)


def print_table(pairs, stream=None):
    """Print aligned `label value` lines."""
    stream = stream if stream is not None else sys.stdout
    width = max(len(label) for (label, _) in pairs)
    for (label, value) in pairs:
        stream.write('{:<{}}  {}\n'.format(label, width, format_value(value)))


def print_json(document, stream=None):
    stream = stream if stream is not None else sys.stdout
    stream.write(json.dumps(document, indent=2) + '\n')
