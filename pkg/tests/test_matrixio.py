import json

import numpy as np
import pytest

from cbmult.errors import DomainError
from cbmult.matrixio import load_matrix, save_matrix_json


def test_json_round_trip_complex(tmp_path):
    m = np.array([[1.0 + 2.0j, -0.5], [0.0, 3.0 - 1.0j]])
    path = tmp_path / "m.json"
    save_matrix_json(path, m)
    assert np.array_equal(load_matrix(path), m)


def test_json_real_matrix_without_im_field(tmp_path):
    path = tmp_path / "m.json"
    path.write_text(json.dumps({"rows": 2, "cols": 2,
                                "re": [1.0, 0.0, 0.0, 1.0]}))
    m = load_matrix(path)
    assert np.array_equal(m, np.eye(2))
    assert m.dtype == complex


def test_csv_parsing(tmp_path):
    path = tmp_path / "m.csv"
    path.write_text("1.5+2j, -1\n0, 2.5-1i\n")
    m = load_matrix(path)
    assert m[0, 0] == 1.5 + 2j
    assert m[1, 1] == 2.5 - 1j
    assert m.shape == (2, 2)


def test_csv_rejects_ragged_or_empty(tmp_path):
    bad = tmp_path / "bad.csv"
    bad.write_text("1, 2\n3\n")
    with pytest.raises(DomainError):
        load_matrix(bad)
    empty = tmp_path / "empty.csv"
    empty.write_text("\n")
    with pytest.raises(DomainError):
        load_matrix(empty)
    garbled = tmp_path / "garbled.csv"
    garbled.write_text("1, spam\n")
    with pytest.raises(DomainError):
        load_matrix(garbled)


def test_json_rejects_malformed_documents(tmp_path):
    missing = tmp_path / "missing.json"
    missing.write_text(json.dumps({"rows": 2, "cols": 2}))
    with pytest.raises(DomainError):
        load_matrix(missing)
    short = tmp_path / "short.json"
    short.write_text(json.dumps({"rows": 2, "cols": 2, "re": [1.0]}))
    with pytest.raises(DomainError):
        load_matrix(short)
