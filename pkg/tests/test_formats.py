import numpy as np
import pytest

from tensorperm import (
    DimList,
    IndexPerm,
    Sigma,
    TensorPermSpec,
    build_delta,
    decompose_swap,
    induced_index_perm,
    tcm_spec,
)
from tensorperm.formats import (
    parse_matrix_market,
    parse_perm,
    write_blocks,
    write_decomposition,
    write_dense,
    write_matrix_market,
    write_perm,
)

from oracles import all_specs


def test_matrix_market_exact_text():
    text = write_matrix_market(build_delta(tcm_spec(3, 2)))
    assert text == (
        "%%MatrixMarket matrix coordinate integer general\n"
        "6 6 6\n"
        "1 1 1\n"
        "2 3 1\n"
        "3 5 1\n"
        "4 2 1\n"
        "5 4 1\n"
        "6 6 1\n"
    )


def test_matrix_market_round_trip_sweep():
    for dims, mapping in all_specs(36):
        m = build_delta(TensorPermSpec(dims, mapping))
        assert np.array_equal(parse_matrix_market(write_matrix_market(m)), m)


def test_matrix_market_round_trip_general_integers():
    m = np.array([[0, -3, 0], [7, 0, 2]], dtype=np.int64)
    assert np.array_equal(parse_matrix_market(write_matrix_market(m)), m)


def test_matrix_market_parser_tolerates_comments():
    text = (
        "%%MatrixMarket matrix coordinate integer general\n"
        "% a comment line\n"
        "2 2 1\n"
        "2 1 1\n"
    )
    assert parse_matrix_market(text).tolist() == [[0, 0], [1, 0]]


def test_matrix_market_parser_errors():
    with pytest.raises(ValueError, match="header"):
        parse_matrix_market("2 2 1\n2 1 1\n")
    with pytest.raises(ValueError, match="flavor"):
        parse_matrix_market("%%MatrixMarket matrix coordinate real general\n1 1 1\n1 1 1.5\n")
    with pytest.raises(ValueError, match="coordinate lines"):
        parse_matrix_market("%%MatrixMarket matrix coordinate integer general\n2 2 2\n1 1 1\n")
    with pytest.raises(ValueError, match="out of range"):
        parse_matrix_market("%%MatrixMarket matrix coordinate integer general\n2 2 1\n3 1 1\n")


def test_perm_format_round_trip():
    perm = induced_index_perm(DimList((3, 2)), Sigma((2, 1)))
    text = write_perm(perm)
    assert text == "6\n1 3 5 2 4 6\n"
    assert parse_perm(text) == perm


def test_perm_parser_errors():
    with pytest.raises(ValueError, match="expected 3 entries"):
        parse_perm("3\n1 2\n")
    with pytest.raises(ValueError, match="empty"):
        parse_perm("")


def test_dense_format():
    text = write_dense(build_delta(tcm_spec(2, 2)))
    assert text == "1 0 0 0\n0 0 1 0\n0 1 0 0\n0 0 0 1\n"


def test_blocks_format_structure():
    text = write_blocks(build_delta(tcm_spec(3, 2)), block=2)
    groups = text.split("\n\n")
    assert len(groups) == 3
    assert groups[0].splitlines() == ["1 0  0 0  0 0", "0 0  1 0  0 0"]


def test_blocks_format_divisibility():
    with pytest.raises(ValueError, match="divide"):
        write_blocks(build_delta(tcm_spec(3, 2)), block=4)


def test_decomposition_format_n2():
    text = write_decomposition(decompose_swap(2), tol=1e-10)
    assert text == "n 2\nc00 0.5\n1 1 0.5 0\n2 2 0.5 0\n3 3 0.5 0\n"


def test_decomposition_format_n3_values():
    lines = write_decomposition(decompose_swap(3), tol=1e-10).splitlines()
    assert lines[0] == "n 3"
    assert lines[1] == "c00 0.3333333333"
    assert lines[2:] == [f"{i} {i} 0.5 0" for i in range(1, 9)]


def test_writers_are_deterministic():
    m = build_delta(tcm_spec(4, 3))
    assert write_matrix_market(m) == write_matrix_market(m)
    assert write_dense(m) == write_dense(m)
    dec = decompose_swap(3)
    assert write_decomposition(dec, 1e-10) == write_decomposition(dec, 1e-10)


def test_perm_round_trip_via_index_perm():
    perm = IndexPerm((2, 3, 1))
    assert parse_perm(write_perm(perm)) == perm
