"""Command-line front end.

Usage::

    yfluor steady --omega1 3 --gamma1 1 ...
    yfluor sweep --config run.cfg --points 301
    yfluor spectrum --channel both --out results/fig5
    yfluor dressed ...
    yfluor figures 2b --out results/fig

A configuration file holds ``key = value`` lines with ``#`` comments; flags
with the same names override it.  Exit status is 0 on success, 2 when the
Liouvillian is singular and 3 for configuration errors.
"""
import argparse
import sys
from dataclasses import dataclass, fields
from pathlib import Path

import numpy as np

from . import io, presets
from .dressed import LABELS, dressed_populations, dressed_states, sym_antisym, transition_rates
from .dynamics import AXES, params_at, steady_state, sweep
from .errors import ConfigError, DegenerateSpectrum, InvalidParams, MissingExperiment, ParseError, SingularLiouvillian, UnknownKey
from .liouvillian import build
from .params import AtomParams
from .spectrum import spectrum

EXPERIMENTS = ("steady", "sweep", "spectrum", "dressed", "figures")
PARAM_KEYS = tuple(f.name for f in fields(AtomParams))

EXIT_OK = 0
EXIT_FAILURE = 1
EXIT_SINGULAR = 2
EXIT_CONFIG = 3


@dataclass(frozen=True)
class ExperimentConfig:
    experiment: str
    params: AtomParams
    figure: str = ""
    axis: str = "delta_a"
    start: float = -15.0
    stop: float = 15.0
    points: int = 601
    channel: str = "a"
    offset_min: float = -30.0
    offset_max: float = 30.0
    offset_points: int = 2001
    out: str = "yfluor"
    dump_liouvillian: bool = False

    def metadata(self):
        meta = {"experiment": self.experiment}
        if self.figure:
            meta["figure"] = self.figure
        meta.update({k: v for k, v in self.params.as_dict().items()})
        return meta


def _to_bool(text):
    value = str(text).strip().lower()
    if value in ("1", "true", "yes", "on"):
        return True
    if value in ("0", "false", "no", "off"):
        return False
    raise ValueError(f"not a boolean: {text!r}")


def _to_int(text):
    value = float(text)
    if value != int(value):
        raise ValueError(f"not an integer: {text!r}")
    return int(value)


# key -> converter
CONVERTERS = {key: float for key in PARAM_KEYS}
CONVERTERS.update({
    "experiment": str,
    "figure": str,
    "axis": str,
    "start": float,
    "stop": float,
    "points": _to_int,
    "channel": str,
    "offset_min": float,
    "offset_max": float,
    "offset_points": _to_int,
    "out": str,
    "dump_liouvillian": _to_bool,
})


def _read_lines(text):
    raw = {}
    for lineno, line in enumerate(text.splitlines(), start=1):
        line = line.split("#", 1)[0].strip()
        if not line:
            continue
        key, sep, value = line.partition("=")
        key, value = key.strip(), value.strip()
        if not sep or not key:
            raise ParseError(f"expected 'key = value', got {line!r}", lineno)
        if key not in CONVERTERS:
            raise UnknownKey(f"line {lineno}: unknown key {key!r}")
        raw[key] = (value, lineno)
    return raw


def parse_config(text, overrides=None):
    """Resolve configuration text plus flag overrides into an ExperimentConfig.

    Parameters
    ----------
    text : str
        ``key = value`` lines; ``#`` starts a comment.
    overrides : dict, optional
        Key -> string value, applied on top of ``text``.

    Raises
    ------
    UnknownKey, ParseError, MissingExperiment
        For malformed input.
    InvalidParams
        If the resolved atom parameters are unphysical.
    """
    raw = _read_lines(text)
    for key, value in (overrides or {}).items():
        if key not in CONVERTERS:
            raise UnknownKey(f"unknown key {key!r}")
        raw[key] = (str(value), None)

    values = {}
    for key, (value, lineno) in raw.items():
        try:
            values[key] = CONVERTERS[key](value)
        except ValueError as exc:
            raise ParseError(f"bad value for {key}: {exc}", lineno) from None

    experiment = values.pop("experiment", "")
    if not experiment:
        raise MissingExperiment("no experiment given (steady, sweep, spectrum, dressed, figures)")
    if experiment not in EXPERIMENTS:
        raise ConfigError(f"unknown experiment {experiment!r}; choose from {', '.join(EXPERIMENTS)}")

    param_values = {"p": 1.0}
    figure = values.pop("figure", "")
    if experiment == "figures":
        if not figure:
            raise ConfigError("experiment 'figures' needs a figure id, e.g. 'figure = 2b'")
        try:
            preset = presets.get(figure)
        except KeyError as exc:
            raise ConfigError(str(exc.args[0])) from None
        figure = preset.id
        param_values = preset.params.as_dict()
        if preset.kind == "spectrum":
            values.setdefault("offset_min", preset.start)
            values.setdefault("offset_max", preset.stop)
        else:
            values.setdefault("axis", preset.axis)
            values.setdefault("start", preset.start)
            values.setdefault("stop", preset.stop)
    for key in PARAM_KEYS:
        if key in values:
            param_values[key] = values.pop(key)
    params = AtomParams(**param_values)

    config = ExperimentConfig(experiment=experiment, params=params, figure=figure, **values)
    if config.axis not in AXES:
        raise ConfigError(f"unknown sweep axis {config.axis!r}; choose from {', '.join(AXES)}")
    if config.channel not in ("a", "b", "both"):
        raise ConfigError(f"channel must be a, b or both, got {config.channel!r}")
    if config.points < 2 or config.offset_points < 2:
        raise ConfigError("points and offset_points must be at least 2")
    return config


def _out(config, suffix):
    return Path(f"{config.out}_{suffix}")


def _write_script(path, text, written):
    path.parent.mkdir(parents=True, exist_ok=True)
    path.write_text(text)
    written.append(path)


def _sym_antisym_columns(series, params):
    ss, aa = np.full(series.grid.size, np.nan), np.full(series.grid.size, np.nan)
    for i, ok in enumerate(series.ok):
        if ok:
            rec = sym_antisym(series.rho[i], params)
            ss[i], aa[i] = rec.rho_ss, rec.rho_aa
    return {"rho_ss": ss, "rho_aa": aa}


def _dressed_sweep(params, grid):
    """Eigenvalues and steady dressed populations along Omega1 = Omega2."""
    lam = {label: np.full(grid.size, np.nan) for label in LABELS}
    pops = {label: np.full(grid.size, np.nan) for label in LABELS}
    for i, omega in enumerate(grid):
        point = params_at(params, "omega12", omega)
        try:
            states = dressed_states(point)
        except DegenerateSpectrum:
            continue
        try:
            rho = steady_state(point)
        except SingularLiouvillian:
            rho = None
        values = dressed_populations(rho, states) if rho is not None else [np.nan] * 4
        for state, pop in zip(states, values):
            if state.label in lam:
                lam[state.label][i] = state.eigenvalue
                pops[state.label][i] = pop
    return lam, pops


def _run_steady(config, stdout, written):
    rho = steady_state(config.params)
    for k in range(4):
        print(f"rho{k + 1}{k + 1} = {io.format_number(rho[k, k].real)}", file=stdout)


def _run_sweep(config, stdout, written):
    grid = np.linspace(config.start, config.stop, config.points)
    series = sweep(config.params, config.axis, grid)
    extra = {}
    if config.params.gamma1 + config.params.gamma2 > 0:
        extra = _sym_antisym_columns(series, config.params)
    path = series.to_csv(_out(config, "sweep.csv"), config.metadata(), extra)
    written.append(path)
    for i, message in sorted(series.errors.items()):
        print(f"point {i + 1} ({config.axis} = {grid[i]:g}): {message}", file=sys.stderr)


def _channels(config):
    return ("a", "b") if config.channel == "both" else (config.channel,)


def _run_spectrum(config, stdout, written):
    offsets = np.linspace(config.offset_min, config.offset_max, config.offset_points)
    for ch in _channels(config):
        series = spectrum(config.params, ch, offsets)
        path = series.to_csv(_out(config, f"spectrum_{ch}.csv"), config.metadata())
        written.append(path)
        script = io.gnuplot_script(path, [("1:2", f"S_{ch}")], "offset / gamma3", f"S_{ch}")
        _write_script(_out(config, f"spectrum_{ch}.gp"), script, written)


def _run_dressed(config, stdout, written):
    states = dressed_states(config.params)
    try:
        pops = dressed_populations(steady_state(config.params), states)
    except SingularLiouvillian:
        pops = np.full(4, np.nan)
    cols = {
        "label": [s.label for s in states],
        "eigenvalue": [s.eigenvalue for s in states],
    }
    for i in range(4):
        cols[f"c{i + 1}"] = [s.coeffs[i] for s in states]
    cols["population"] = list(pops)
    written.append(io.write_csv(_out(config, "dressed.csv"), cols, config.metadata()))

    Ra, Rb = transition_rates(states, config.params)
    rate_cols = {"from": [], "to": [], "R_a": [], "R_b": []}
    for i, si in enumerate(states):
        for j, sj in enumerate(states):
            rate_cols["from"].append(f"{si.label}{i + 1}" if si.label == "generic" else si.label)
            rate_cols["to"].append(f"{sj.label}{j + 1}" if sj.label == "generic" else sj.label)
            rate_cols["R_a"].append(Ra[i, j])
            rate_cols["R_b"].append(Rb[i, j])
    written.append(io.write_csv(_out(config, "rates.csv"), rate_cols, config.metadata()))


def _p_tag(p):
    return f"p{p:g}"


def _run_figure(config, stdout, written):
    preset = presets.get(config.figure)
    fig = f"fig{preset.id}"
    base = config.params
    meta = config.metadata()

    if preset.kind in ("populations", "sym_antisym"):
        grid = np.linspace(config.start, config.stop, config.points)
        curves = []
        for p in preset.p_values:
            params = base.replace(p=p)
            series = sweep(params, config.axis, grid)
            name = f"{fig}_{_p_tag(p)}.csv"
            extra = _sym_antisym_columns(series, params) if preset.kind == "sym_antisym" else None
            if preset.kind == "sym_antisym":
                cols = {config.axis: grid, **extra}
                path = io.write_csv(_out(config, name), cols, {**meta, "p": p})
                curves += [(f"'{path.name}' using 1:2", f"rho_ss p={p:g}"),
                           (f"'{path.name}' using 1:3", f"rho_aa p={p:g}")]
            else:
                path = series.to_csv(_out(config, name), {**meta, "p": p})
                f33 = preset.rho33_display_factor
                curves += [(f"'{path.name}' using 1:2", f"rho11 p={p:g}"),
                           (f"'{path.name}' using 1:($4/{f33:g})",
                            f"rho33/{f33:g} p={p:g} (display scale)")]
            written.append(path)
        _write_figure_script(config, fig, curves, config.axis, "population", written)

    elif preset.kind == "spectrum":
        offsets = np.linspace(config.offset_min, config.offset_max, config.offset_points)
        cols = {"offset": offsets}
        for p in preset.p_values:
            cols[f"S_{preset.channel}_{_p_tag(p)}"] = spectrum(base.replace(p=p), preset.channel,
                                                              offsets).values
        path = io.write_csv(_out(config, f"{fig}.csv"), cols, meta)
        written.append(path)
        curves = [(f"'{path.name}' using 1:{k + 2}", name) for k, name in enumerate(list(cols)[1:])]
        _write_figure_script(config, fig, curves, "offset / gamma3", f"S_{preset.channel}", written)

    elif preset.kind == "eigenvalues":
        grid = np.linspace(config.start, config.stop, config.points)
        lam = {label: np.full(grid.size, np.nan) for label in LABELS}
        for i, omega in enumerate(grid):
            try:
                states = dressed_states(params_at(base, "omega12", omega))
            except DegenerateSpectrum:
                states = []
            for state in states:
                if state.label in lam:
                    lam[state.label][i] = state.eigenvalue
        cols = {"omega": grid, **{f"lambda_{label}": lam[label] for label in LABELS}}
        path = io.write_csv(_out(config, f"{fig}.csv"), cols, meta)
        written.append(path)
        curves = [(f"'{path.name}' using 1:{k + 2}", f"lambda_{label}")
                  for k, label in enumerate(LABELS)]
        _write_figure_script(config, fig, curves, "Omega / gamma3", "eigenvalue / gamma3", written)

    elif preset.kind == "dressed_populations":
        grid = np.linspace(config.start, config.stop, config.points)
        curves = []
        for p in preset.p_values:
            _, pops = _dressed_sweep(base.replace(p=p), grid)
            cols = {"omega": grid, **{f"rho_{label}": pops[label] for label in LABELS}}
            path = io.write_csv(_out(config, f"{fig}_{_p_tag(p)}.csv"), cols, {**meta, "p": p})
            written.append(path)
            for label in preset.columns:
                k = LABELS.index(label) + 2
                curves.append((f"'{path.name}' using 1:{k}", f"rho_{label} p={p:g}"))
        _write_figure_script(config, fig, curves, "Omega / gamma3", "population", written)


def _write_figure_script(config, fig, curves, xlabel, ylabel, written):
    # curves carry their own file reference
    lines = ["set datafile separator ','",
             "set datafile commentschars '#'",
             f"set xlabel '{xlabel}'",
             f"set ylabel '{ylabel}'",
             "plot " + ", \\\n     ".join(f"{using} with lines title '{title}'"
                                          for using, title in curves)]
    _write_script(_out(config, f"{fig}.gp"), "\n".join(lines) + "\n", written)


RUNNERS = {
    "steady": _run_steady,
    "sweep": _run_sweep,
    "spectrum": _run_spectrum,
    "dressed": _run_dressed,
    "figures": _run_figure,
}


def run(config, stdout=None, stderr=None):
    """Execute ``config``; returns the process exit status."""
    stdout = sys.stdout if stdout is None else stdout
    stderr = sys.stderr if stderr is None else stderr
    written = []
    try:
        if config.dump_liouvillian:
            system = build(config.params)
            L_path, I_path = _out(config, "L.csv"), _out(config, "I.csv")
            L_path.parent.mkdir(parents=True, exist_ok=True)
            system.to_csv(L_path, I_path)
            written += [L_path, I_path]
        RUNNERS[config.experiment](config, stdout, written)
    except SingularLiouvillian as exc:
        print(f"error: {exc}", file=stderr)
        return EXIT_SINGULAR
    except (ConfigError, InvalidParams) as exc:
        print(f"error: {exc}", file=stderr)
        return EXIT_CONFIG
    except DegenerateSpectrum as exc:
        print(f"error: {exc}", file=stderr)
        return EXIT_FAILURE
    for path in written:
        print(f"wrote {path}", file=stdout)
    return EXIT_OK


class _ArgumentParser(argparse.ArgumentParser):
    def error(self, message):
        raise ConfigError(message)


def build_parser():
    parser = _ArgumentParser(prog="yfluor", description=__doc__.split("\n\n")[0])
    parser.add_argument("experiment", nargs="?", help="steady, sweep, spectrum, dressed or figures")
    parser.add_argument("figure", nargs="?", help="figure id for 'figures' (2a 2b 3a 3b 4 5a 5b 6 7a 7b)")
    parser.add_argument("--config", help="configuration file of 'key = value' lines")
    for key in CONVERTERS:
        if key in ("experiment", "figure"):
            continue
        flag = "--" + key.replace("_", "-")
        if key == "dump_liouvillian":
            parser.add_argument(flag, dest=key, action="store_const", const="true",
                                help="also write L and I as CSV (row, col, re, im)")
        else:
            parser.add_argument(flag, dest=key, metavar=key.upper())
    return parser


def main(argv=None):
    try:
        args = build_parser().parse_args(argv)
        text = Path(args.config).read_text() if args.config else ""
        overrides = {k: v for k, v in vars(args).items()
                     if k not in ("config",) and v is not None}
        config = parse_config(text, overrides)
    except (ConfigError, InvalidParams, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_CONFIG
    return run(config)


if __name__ == "__main__":
    sys.exit(main())
