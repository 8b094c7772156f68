import pytest
from hypothesis import given, settings, strategies as st

from databus.layout import (
    LayoutModel,
    nisq_counts,
    qc_with_bus,
    qc_without_bus,
    rotated_bus_path,
    worstcase_total,
)


class TestPatchModels:
    def test_standard_model_tile(self):
        m = LayoutModel()
        assert m.patch_tile(23) == 2 * 23 * 23
        assert m.patch_tile(31) == 1922

    def test_worstcase_tile(self):
        assert LayoutModel("worstcase").patch_tile(5) == 100

    def test_unknown_variant_rejected(self):
        with pytest.raises(ValueError):
            LayoutModel("compact")


class TestQubitCounts:
    @pytest.mark.parametrize(
        "q,a,d,expected",
        [
            (100, 50, 29, 252300),
            (341, 171, 29, 861184),
            (12298, 6149, 35, 45195150),
        ],
    )
    def test_without_bus_reference_rows(self, q, a, d, expected):
        assert qc_without_bus(q, a, d) == expected

    @pytest.mark.parametrize(
        "q,d,expected",
        [
            (100, 31, 204800),
            (3082, 35, 7988544),
            (12298, 39, 39353600),
        ],
    )
    def test_with_bus_reference_rows(self, q, d, expected):
        assert qc_with_bus(q, d) == expected

    def test_bus_term(self):
        m = LayoutModel()
        assert m.bus_per_data_patch(100, 31) == 2 * 100 * 63

    def test_invalid_counts_rejected(self):
        with pytest.raises(ValueError):
            qc_without_bus(0, 1, 3)
        with pytest.raises(ValueError):
            qc_with_bus(10, 0)

    @settings(max_examples=25, deadline=None)
    @given(st.integers(1, 10**4), st.integers(1, 10**4), st.integers(2, 99))
    def test_bus_beats_baseline_for_large_distance(self, q, a, d):
        """The bus wins whenever the ancilla tile area exceeds the corridor."""
        wo = qc_without_bus(q, a, d)
        w = qc_with_bus(q, d)
        assert (w < wo) == (a * 2 * d * d > 2 * q * (2 * d + 1))


class TestWorstCase:
    @pytest.mark.parametrize("q,d,expected", [(1, 3, (14, 50)), (2, 5, (44, 244))])
    def test_small_examples(self, q, d, expected):
        assert worstcase_total(q, d) == expected

    def test_large_bus_count(self):
        b, _ = worstcase_total(100, 31)
        assert b == 12600


class TestNisqCounts:
    def test_demonstrator_counts(self):
        assert nisq_counts(2, with_bus=True) == 28
        assert nisq_counts(3, with_bus=True) == 55
        assert nisq_counts(2, with_bus=False) == 77
        assert nisq_counts(3, with_bus=False) == 151

    def test_bus_demonstrator_is_smaller(self):
        for d in (2, 3):
            assert nisq_counts(d, True) < nisq_counts(d, False)

    def test_unsupported_distance(self):
        with pytest.raises(ValueError):
            nisq_counts(5, True)


class TestBusPath:
    def test_path_is_connected_and_simple(self):
        path = rotated_bus_path(2, 3, d=3)
        assert len(path) == len(set(path))
        for (y1, x1), (y2, x2) in zip(path, path[1:]):
            assert abs(y1 - y2) + abs(x1 - x2) == 1

    def test_path_stays_in_corridors(self):
        d = 3
        for y, x in rotated_bus_path(2, 2, d):
            assert x % (d + 1) == 0 or y % (d + 1) == 0

    def test_every_patch_touches_the_path(self):
        d, rows, cols = 2, 2, 3
        on_path = set(rotated_bus_path(rows, cols, d))
        for r in range(rows):
            for c in range(cols):
                y0, x0 = 1 + r * (d + 1), 1 + c * (d + 1)
                border = {(y0 - 1, x0 + dx) for dx in range(d)}
                border |= {(y0 + dy, x0 - 1) for dy in range(d)}
                assert on_path & border

    def test_bad_arguments(self):
        with pytest.raises(ValueError):
            rotated_bus_path(0, 1, 3)
        with pytest.raises(ValueError):
            rotated_bus_path(1, 1, 1)
