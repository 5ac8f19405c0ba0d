"""State-file serialization round trips and schema rejection."""

import io
import json

import numpy as np
import pytest

import geomcoh as gc
from geomcoh.statefile import read_state, write_state


def roundtrip(matrix, label=None):
    buffer = io.StringIO()
    write_state(buffer, matrix, label)
    buffer.seek(0)
    return read_state(buffer)


class TestRoundTrip:
    def test_exact_entries(self):
        rho = gc.random_density(4, 4, seed=13)
        back, _ = roundtrip(rho)
        assert (back == rho).all()

    def test_label_preserved(self):
        _, label = roundtrip(gc.mcms(3, 0.5), label="a state")
        assert label == "a state"

    def test_no_label(self):
        _, label = roundtrip(np.eye(2, dtype=complex) / 2)
        assert label is None

    def test_document_shape(self):
        buffer = io.StringIO()
        write_state(buffer, gc.mcms(2, 0.5), "x")
        doc = json.loads(buffer.getvalue())
        assert doc["dim"] == 2
        assert doc["matrix"][0][1] == [0.25, 0.0]


class TestParseErrors:
    def test_invalid_json(self):
        with pytest.raises(gc.StateFileParseError, match="ParseError"):
            read_state(io.StringIO("not json at all ["))

    def test_non_object_top_level(self):
        with pytest.raises(gc.StateFileParseError):
            read_state(io.StringIO("[1, 2, 3]"))

    def test_missing_dim(self):
        with pytest.raises(gc.StateFileParseError):
            read_state(io.StringIO('{"matrix": []}'))

    def test_row_count_mismatch(self):
        with pytest.raises(gc.StateFileParseError):
            read_state(io.StringIO('{"dim": 2, "matrix": [[[1.0, 0.0], [0.0, 0.0]]]}'))

    def test_bad_entry_shape(self):
        doc = '{"dim": 2, "matrix": [[[1.0], [0.0, 0.0]], [[0.0, 0.0], [0.0, 0.0]]]}'
        with pytest.raises(gc.StateFileParseError):
            read_state(io.StringIO(doc))

    def test_non_numeric_entry(self):
        doc = '{"dim": 2, "matrix": [[["a", 0.0], [0.0, 0.0]], [[0.0, 0.0], [0.0, 0.0]]]}'
        with pytest.raises(gc.StateFileParseError):
            read_state(io.StringIO(doc))

    def test_non_finite_entry(self):
        doc = '{"dim": 2, "matrix": [[[NaN, 0.0], [0.0, 0.0]], [[0.0, 0.0], [1.0, 0.0]]]}'
        with pytest.raises(gc.StateFileParseError):
            read_state(io.StringIO(doc))
