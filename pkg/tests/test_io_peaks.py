import math

import numpy as np
import pytest

from yfluor import io
from yfluor.peaks import band_integral, fwhm, local_maxima, nearest_peak, smooth3


def test_csv_round_trip(tmp_path):
    path = io.write_csv(tmp_path / "out.csv", {"x": [0.1, 2.0], "y": [1 / 3, math.nan],
                                               "label": ["d", "m"]},
                        {"gamma3": 1.0, "figure": "2b"})
    meta, cols = io.read_csv(path)
    assert meta == {"gamma3": "1.0", "figure": "2b"}
    assert cols["x"] == [0.1, 2.0] and cols["y"][0] == 1 / 3 and math.isnan(cols["y"][1])
    assert cols["label"] == ["d", "m"]


def test_number_format_is_exact():
    x = 0.1 + 0.2
    assert float(io.format_number(x)) == x
    assert io.format_number(math.nan) == ""


def test_gnuplot_script_mentions_data_file():
    text = io.gnuplot_script("data.csv", [("1:2", "rho11")], "x", "y")
    assert "'data.csv'" in text and "rho11" in text


def test_smoothing_keeps_ends():
    y = np.array([0.0, 3.0, 0.0, 3.0])
    assert np.allclose(smooth3(y), [0.0, 1.0, 2.0, 3.0])


def test_local_maxima_are_strict():
    y = np.array([0, 1, 1, 0, 2, 0], dtype=float)
    assert local_maxima(y, smooth=False).tolist() == [4]


def test_nearest_peak_and_width_of_lorentzian():
    x = np.linspace(-20, 20, 4001)
    y = 1 / (1 + (x - 2) ** 2)
    assert x[nearest_peak(x, y, 0.0)] == pytest.approx(2.0, abs=0.01)
    assert fwhm(x, y, 2.0) == pytest.approx(2.0, abs=1e-3)


def test_band_integral_covers_both_sides():
    x = np.linspace(-10, 10, 2001)
    y = np.ones_like(x)
    assert band_integral(x, y, 2.0, 4.0) == pytest.approx(4.0, abs=1e-9)
