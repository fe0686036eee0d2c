"""Validated input vectors: construction rules and invariants."""

import math

import numpy as np
import pytest

from cyclicpoly.domain import TWO_PI, CentralAngles, SideLengths
from cyclicpoly.errors import DomainError


class TestSideLengths:
    def test_accepts_valid(self):
        s = SideLengths([3, 4, 5])
        assert s.n == 3 and len(s) == 3
        assert list(s) == [3.0, 4.0, 5.0]
        assert s[1] == 4.0

    def test_values_are_read_only(self):
        s = SideLengths([3, 4, 5])
        with pytest.raises(ValueError):
            s.values[0] = 9.0

    def test_coerce_passes_through(self):
        s = SideLengths([3, 4, 5])
        assert SideLengths.coerce(s) is s

    @pytest.mark.parametrize(
        "bad",
        [[1, 1], [1, 0, 1], [1, -1, 1], [1, math.inf, 1], [1, math.nan, 1], [[1, 2, 3]]],
    )
    def test_rejects_invalid(self, bad):
        with pytest.raises(DomainError):
            SideLengths(bad)


class TestCentralAngles:
    def test_interior_point(self):
        a = CentralAngles([TWO_PI / 3] * 3)
        assert a.is_interior

    def test_boundary_point(self):
        a = CentralAngles([TWO_PI, 0.0, 0.0])
        assert not a.is_interior

    def test_sum_tolerance(self):
        CentralAngles([TWO_PI / 3] * 3)  # exact
        CentralAngles([TWO_PI / 3 + 3e-13, TWO_PI / 3, TWO_PI / 3])  # within 1e-12
        with pytest.raises(DomainError):
            CentralAngles([TWO_PI / 3 + 1e-11, TWO_PI / 3, TWO_PI / 3])
        with pytest.raises(DomainError):
            CentralAngles([2.0, 2.0, 2.0])  # sums to 6, not 2*pi

    @pytest.mark.parametrize(
        "bad",
        [
            [math.pi, math.pi],  # a 2-gon is rejected upstream of any solver
            [TWO_PI / 3, TWO_PI / 3, -1e-3],
            [math.nan, math.pi, math.pi],
        ],
    )
    def test_rejects_invalid(self, bad):
        with pytest.raises(DomainError):
            CentralAngles(bad)
