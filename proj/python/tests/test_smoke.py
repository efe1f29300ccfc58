from fractions import Fraction

import pytest

import qssep


def test_three_cycle():
    q = qssep.loop_polynomial([1, 2, 3])
    assert q == {(1,): 1, (1, 2): -2, (1, 3): -1, (1, 2, 3): 2}
    assert qssep.format_loop_polynomial([1, 2, 3]) == "x_1 - 2 x_1 x_2 - x_1 x_3 + 2 x_1 x_2 x_3"


@pytest.mark.parametrize("algo", ["trees", "cumulants", "exchange"])
def test_algorithms_agree(algo):
    assert qssep.loop_polynomial([1, 3, 2, 4], algo=algo) == qssep.loop_polynomial([1, 3, 2, 4])


def test_starting_index():
    assert qssep.loop_polynomial([1, 3, 2, 4], k=3) == qssep.loop_polynomial([1, 3, 2, 4])


def test_cycle_helpers():
    assert qssep.canonicalize_cycle([3, 2, 4, 1]) == [1, 3, 2, 4]
    assert qssep.conjugate_by_adjacent([1, 2, 3, 4], 2) == [1, 3, 2, 4]
    assert qssep.split_by_transposition([1, 2, 3, 4], 2) == ([2], [1, 3, 4])


def test_counting():
    assert [qssep.catalan(n) for n in range(6)] == [1, 1, 2, 5, 14, 42]
    assert [qssep.small_schroeder(n) for n in range(1, 8)] == [1, 1, 3, 11, 45, 197, 903]
    assert len(qssep.enumerate_nc(5)) == 42
    assert len(qssep.enumerate_trees(6, prime=True)) == 90


def test_kreweras_and_mobius():
    blocks = [[1, 3, 4], [2], [5, 6], [7], [8]]
    assert qssep.kreweras(8, blocks) == [[1, 5, 7, 8], [2, 3], [4], [6]]
    assert qssep.mobius(4, [[1], [2], [3], [4]]) == -5


def test_trees_and_dissections():
    tree = "((* (* * (* * *))) *)"
    assert qssep.tree_to_dissection(tree) == [(1, 6), (3, 6), (6, 8)]
    assert qssep.dissection_to_tree(8, [(1, 6), (3, 6), (6, 8)]) == tree
    assert qssep.tree_partition("((* *) *)") == [[1], [2]]


def test_classes_and_verify():
    assert len(qssep.equivalence_classes(5)) == 4
    checks, failures = qssep.verify(4)
    assert checks > 0 and failures == 0


def test_cumulant_bridge():
    value = qssep.free_cumulant_min([Fraction(1, 3), Fraction(1, 2)])
    assert value == Fraction(1, 6)


def test_cli_and_errors():
    code, out, _ = qssep.run_cli(["compute", "--sigma", "1,2"])
    assert code == 0 and out == "x_1 - x_1 x_2\n"
    assert qssep.run_cli(["compute", "--sigma", "1,1"])[0] == 2
    with pytest.raises(ValueError):
        qssep.loop_polynomial([1, 1])
    with pytest.raises((ValueError, IndexError)):
        qssep.loop_polynomial(list(range(1, 10)))
