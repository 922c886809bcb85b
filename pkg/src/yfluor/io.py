"""CSV and gnuplot-script writers shared by the sweep, spectrum and CLI code.

CSV files start with ``#``-prefixed metadata lines, then a header row, then
one record per sample.  Numbers are written with 17 significant digits so
that files round-trip exactly; NaN values (failed sweep points) become
empty fields.
"""
import csv
import math
from pathlib import Path


def format_number(x):
    if isinstance(x, str):
        return x
    x = float(x)
    if math.isnan(x):
        return ""
    return format(x, ".17g")


def write_csv(path, columns, metadata=None):
    """Write equally long columns to ``path``.

    Parameters
    ----------
    path : str or Path
    columns : dict
        Column name -> sequence of numbers, in output order.
    metadata : dict, optional
        Written as ``# key = value`` lines before the header.
    """
    path = Path(path)
    names = list(columns)
    data = [list(columns[name]) for name in names]
    lengths = {len(col) for col in data}
    if len(lengths) > 1:
        raise ValueError(f"columns have different lengths: {sorted(lengths)}")
    path.parent.mkdir(parents=True, exist_ok=True)
    with open(path, "w", newline="") as fh:
        for key, value in (metadata or {}).items():
            fh.write(f"# {key} = {value}\n")
        writer = csv.writer(fh, lineterminator="\n")
        writer.writerow(names)
        for row in zip(*data):
            writer.writerow([format_number(v) for v in row])
    return path


def read_csv(path):
    """Read a file written by :func:`write_csv`; returns ``(metadata, columns)``."""
    metadata = {}
    rows = []
    with open(path, newline="") as fh:
        for line in fh:
            if line.startswith("#"):
                key, _, value = line[1:].partition("=")
                metadata[key.strip()] = value.strip()
            else:
                rows.append(line)
    reader = csv.reader(rows)
    header = next(reader)
    columns = {name: [] for name in header}
    for record in reader:
        for name, field in zip(header, record):
            columns[name].append(_parse_field(field))
    return metadata, columns


def _parse_field(field):
    if not field:
        return math.nan
    try:
        return float(field)
    except ValueError:
        return field


def gnuplot_script(csv_path, curves, xlabel, ylabel, title="", output=None):
    """Plain-text gnuplot script plotting columns of a CSV file.

    Parameters
    ----------
    csv_path : str or Path
        Data file, referenced by name relative to the script.
    curves : list of (str, str)
        ``(using_expression, title)`` pairs, e.g. ``("1:2", "p = 1")`` or
        ``("1:($4/3)", "rho33 / 3")``.
    output : str, optional
        PNG file name; when given the script sets a pngcairo terminal.
    """
    lines = ["set datafile separator ','",
             "set datafile commentschars '#'",
             "set key top right",
             f"set xlabel '{xlabel}'",
             f"set ylabel '{ylabel}'"]
    if title:
        lines.append(f"set title '{title}'")
    if output:
        lines.insert(0, f"set output '{output}'")
        lines.insert(0, "set terminal pngcairo size 800,600")
    name = Path(csv_path).name
    parts = [f"'{name}' using {using} with lines title '{label}'"
             for using, label in curves]
    lines.append("plot " + ", \\\n     ".join(parts))
    return "\n".join(lines) + "\n"
