import itertools

import pytest
from hypothesis import given, settings, strategies as st

from qschur.compositions import compositions_of, underlying_partition
from qschur.tableaux import (
    COMPOSITION,
    PARTITION,
    SkewShape,
    canonical_sct,
    canonical_srt,
    column_word,
    descents,
    descent_composition,
    enumerate_semistandard,
    enumerate_standard,
    from_rows,
    straight,
    validate,
)
from qschur.transforms import (
    c_class,
    c_equivalent,
    c_shape,
    insert_ssct,
    insert_ssrt,
    insertion_tableau,
    is_rigid_row_pair,
    p_move,
    pack_columns,
    pack_columns_skew,
    q_move,
    rect,
    restricted_move_components,
    rsk,
    standard_words_of_shape,
    unpack_columns,
    unpack_columns_skew,
    word_c_shape,
)

from oracles import insert_word


def comps_upto(d):
    return [a for n in range(d + 1) for a in compositions_of(n)]


def test_unpack_columns_golden():
    srt = from_rows(PARTITION, [[8, 6, 5, 4, 3], [7, 5, 4, 2], [4, 3, 2], [2, 2]])
    image = unpack_columns(srt)
    assert image.rows == ((2, 2, 2, 2), (4, 3), (7, 6, 5, 4, 3), (8, 5, 4))
    assert pack_columns(image) == srt


def test_pack_columns_sorts_each_column():
    t = from_rows(COMPOSITION, [[2, 2, 2, 2], [4, 3], [7, 6, 5, 4, 3], [8, 5, 4]])
    packed = pack_columns(t)
    for c in range(1, 6):
        ours = [row[c - 1] for row in packed.rows if len(row) >= c]
        reference = sorted(
            (row[c - 1] for row in t.rows if len(row) >= c), reverse=True
        )
        assert ours == reference


@given(st.lists(st.integers(1, 3), min_size=1, max_size=3).map(tuple), st.integers(2, 3))
@settings(deadline=None)
def test_pack_unpack_inverse(alpha, m):
    for t in enumerate_semistandard(straight(COMPOSITION, alpha), m):
        assert unpack_columns(pack_columns(t)) == t


def test_insert_ssrt_agrees_with_reference():
    for word in itertools.permutations((1, 2, 3, 4)):
        assert insertion_tableau(word).rows == tuple(insert_word(word))
    for word in [(2, 3, 1), (1, 1, 2, 1), (4, 2, 4, 3, 1)]:
        assert insertion_tableau(word).rows == tuple(insert_word(word))


def test_rsk_recording_is_standard():
    for word in [(3, 4, 2, 1), (1, 2, 3), (2, 2, 1)]:
        p, q = rsk(word)
        assert p.shape == q.shape
        cells = [x for row in q.rows for x in row if x is not None]
        assert sorted(cells) == list(range(1, len(word) + 1))
        assert insertion_tableau(word) == p


def test_rsk_golden():
    p, _ = rsk((3, 4, 2, 1))
    assert p.rows == ((4, 2, 1), (3,))
    assert word_c_shape((3, 4, 2, 1)) == (3, 1)
    assert rsk((3, 4, 2, 1))[1] == rsk((2, 4, 3, 1))[1]


def test_column_word_inserts_to_itself():
    for lam in [(3, 2), (2, 2, 1), (4,)]:
        for t in enumerate_semistandard(straight(PARTITION, lam), 3):
            assert insertion_tableau(column_word(t)) == t


def test_insert_ssct_golden_append():
    t = from_rows(COMPOSITION, [[1], [4, 4], [6, 3]])
    assert insert_ssct(t, 2).rows == ((1,), (4, 4, 2), (6, 3))


def test_insert_ssct_golden_bump_chain():
    t = from_rows(COMPOSITION, [[1], [2, 2, 2, 1], [5, 5, 4], [7, 3]])
    assert insert_ssct(t, 5).rows == (
        (1,),
        (2, 2, 2, 1),
        (3,),
        (5, 5, 5),
        (7, 4),
    )


def test_insert_ssct_commutes_with_column_packing():
    for alpha in comps_upto(4):
        for t in enumerate_semistandard(straight(COMPOSITION, alpha), 3):
            for k in range(1, 5):
                packed, _ = insert_ssrt(pack_columns(t), k)
                assert insert_ssct(t, k) == unpack_columns(packed)


def test_rect_golden():
    t = from_rows(
        COMPOSITION,
        [[4, 3, 1], [8, 6], [None, None, 7, 5, 2], [None, None, None], [None, 9]],
    )
    assert t.shape.outer == (3, 2, 5, 3, 2)
    assert t.shape.inner == (2, 3, 1)
    r = rect(t, cross_check=True)
    assert r.rows == ((4, 3, 1), (8, 7, 5, 2), (9, 6))
    assert c_shape(t) == (3, 4, 2)
    assert descent_composition(t) == (1, 3, 2, 2, 1)
    assert descent_composition(r) == (1, 3, 2, 2, 1)


def test_rect_fixes_straight_tableaux():
    for alpha in comps_upto(5):
        for t in enumerate_standard(straight(COMPOSITION, alpha)):
            assert rect(t, cross_check=True) == t


def test_rect_preserves_descents():
    shape = SkewShape(COMPOSITION, (1, 4, 3), (1, 2))
    for t in enumerate_standard(shape):
        assert descents(rect(t, cross_check=True)) == descents(t)


def test_skew_pack_round_trip():
    shape = SkewShape(COMPOSITION, (1, 4, 3), (1, 2))
    for t in enumerate_semistandard(shape, 3):
        image = pack_columns_skew(t)
        assert image.shape.kind == PARTITION
        assert image.shape.outer == underlying_partition(t.shape.outer)
        assert image.shape.inner == underlying_partition(t.shape.inner)
        assert unpack_columns_skew(image, t.shape.inner) == t


def test_p_move_changes_word_not_insertion():
    word = (3, 4, 2, 1)
    moved = p_move(word, 1)
    assert moved == (3, 2, 4, 1)
    assert insertion_tableau(moved) == insertion_tableau(word)
    with pytest.raises(ValueError):
        p_move(word, 2)


def test_q_move_golden():
    # exchanging 1 and 2 in 3421 requires 2 to sit between them; it does not
    with pytest.raises(ValueError):
        q_move((3, 4, 2, 1), 1)
    moved = q_move((2, 4, 3, 1), 2)
    assert sorted(moved) == [1, 2, 3, 4]
    assert rsk(moved)[1] == rsk((2, 4, 3, 1))[1]


def test_c_equivalence_golden():
    assert not c_equivalent((3, 4, 2, 1), (2, 4, 3, 1))
    assert c_equivalent((2, 4, 3, 1), (1, 4, 3, 2))


def test_c_class_members_share_shape_and_q():
    word = (2, 4, 3, 1)
    cls = c_class(word)
    assert word in cls
    for other in cls:
        assert word_c_shape(other) == word_c_shape(word)
        assert rsk(other)[1] == rsk(word)[1]


def test_standard_words_of_shape():
    words = standard_words_of_shape((1, 2))
    assert words == {column_word(t) for t in enumerate_standard(straight(COMPOSITION, (1, 2)))}


def test_restricted_moves_connect_small_graphs():
    for alpha in comps_upto(6):
        connected, count = restricted_move_components(alpha)
        assert connected
        assert count == 1


def test_rigid_row_pair_golden():
    loose = from_rows(
        COMPOSITION,
        [[1], [8, 7, 4, 3], [9, 5, 2], [None, None, 10, 6]],
    )
    tight = from_rows(
        COMPOSITION,
        [[3], [8, 7, 5, 2], [9, 4, 1], [None, None, 10, 6]],
    )
    assert validate(loose) == "SCT"
    assert validate(tight) == "SCT"
    assert not is_rigid_row_pair(loose, 2)
    assert is_rigid_row_pair(tight, 2)


