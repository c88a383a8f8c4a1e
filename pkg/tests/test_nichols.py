import itertools

import numpy as np
import pytest

from hopfbench import nichols
from hopfbench.errors import BraidEquationError, BudgetExceeded, ParseError, YdCompatibilityError
from hopfbench.gf import _ints, block_rank, make_field
from hopfbench.nichols import (
    BraidedSpace,
    BraidingType,
    apply_word,
    bashev,
    classify_bashev,
    cyclic_module,
    diagonal,
    direct_sum,
    jordan,
    lehmer_code,
    make_braided,
    nichols_dims,
    onedim,
    quantum_symmetrizer,
    reduced_word,
    symmetrizer_by_permutations,
    trivial,
)


@pytest.mark.parametrize("m,total", [(1, 2), (2, 4), (3, 8)])
def test_trivial_braiding_in_characteristic_two(F2, m, total):
    dims = nichols_dims(trivial(F2, m))
    assert dims.closed
    assert dims.total == total


def test_trivial_braiding_in_characteristic_three(F3):
    assert nichols_dims(trivial(F3, 1)).graded[:4] == (1, 1, 1, 0)
    assert nichols_dims(trivial(F3, 2)).total == 9


def test_jordan_plane_in_characteristic_two(F2):
    dims = nichols_dims(jordan(F2, 1, 2))
    assert dims.closed
    assert dims.graded[:8] == (1, 2, 3, 4, 3, 2, 1, 0)
    assert dims.total == 16
    assert dims.describe().endswith("total=16")


def test_minus_one_braiding(F3):
    assert nichols_dims(make_braided("diagonal:2", F3)).total == 2


def test_open_computation_is_a_lower_bound(F3):
    dims = nichols_dims(trivial(F3, 2), n_max=2)
    assert not dims.closed
    assert dims.graded == (1, 2, 3)
    assert dims.describe() == "graded=[1, 2, 3] total=>= 6"


def test_symmetrizer_recursion_matches_permutation_sum(F2, F3):
    for V in (jordan(F2, 1, 2), trivial(F3, 2), make_braided("diagonal:1,2;2,1", F3)):
        for n in (2, 3):
            assert np.array_equal(_ints(quantum_symmetrizer(V, n)), _ints(symmetrizer_by_permutations(V, n)))


def test_symmetrizer_budget(F2):
    with pytest.raises(BudgetExceeded):
        nichols_dims(jordan(F2, 1, 2), n_max=6, budget=10)


def test_every_degree_is_computed(monkeypatch, F2):
    calls = []

    def counting_rank(M):
        calls.append(M.shape)
        return block_rank(M)

    monkeypatch.setattr(nichols, "block_rank", counting_rank)
    dims = nichols_dims(trivial(F2, 1), n_max=5)
    assert len(calls) == 5
    assert dims.graded == (1, 1, 0, 0, 0, 0)
    assert dims.closed


def test_vanishing_degree_below_a_nonzero_one_stays_open(monkeypatch, F2):
    ranks = iter([1, 0, 2])
    monkeypatch.setattr(nichols, "block_rank", lambda M: next(ranks))
    dims = nichols_dims(trivial(F2, 1), n_max=3)
    assert dims.graded == (1, 1, 0, 2)
    assert not dims.closed
    assert dims.describe() == "graded=[1, 1, 0, 2] total=>= 4"


@pytest.mark.parametrize(
    "text,p,n",
    [
        ("trivial:2", 2, 3),
        ("trivial:3", 2, 3),
        ("jordan:1,2", 2, 4),
        ("yd-cyclic:1,2,2;0,1,2", 2, 3),
        ("trivial:2", 3, 3),
        ("yd-cyclic:1,2,3", 3, 3),
    ],
)
def test_symmetrizer_on_suite_targets(text, p, n):
    V = make_braided(text, make_field(p))
    assert np.array_equal(_ints(quantum_symmetrizer(V, n)), _ints(symmetrizer_by_permutations(V, n)))


@pytest.mark.parametrize("method", ["insertion", "bubble"])
def test_reduced_words(method):
    for n in range(1, 6):
        for perm in itertools.permutations(range(n)):
            word = reduced_word(perm, method)
            assert len(word) == sum(lehmer_code(perm))
            assert apply_word(word, n) == perm


def test_reduced_word_rejects_unknown_method():
    with pytest.raises(ValueError):
        reduced_word((1, 0), "greedy")


def test_braid_equation_is_checked(F2):
    flip_second = F2.array([[0, 1, 0, 0], [1, 0, 0, 0], [0, 0, 0, 1], [0, 0, 1, 0]])
    with pytest.raises(BraidEquationError):
        BraidedSpace(F2, 2, flip_second)
    with pytest.raises(BraidEquationError):
        BraidedSpace(F2, 2, F2.zeros((4, 4)))
    with pytest.raises(BraidEquationError):
        BraidedSpace(F2, 2, F2.identity(2))


def test_yd_module_checks(F2, F3):
    with pytest.raises(YdCompatibilityError):
        cyclic_module(F3, 1, 2, 2)
    with pytest.raises(YdCompatibilityError):
        direct_sum(cyclic_module(F2, 1, 2, 2), onedim(F2, (2, 2), (0, 1)))


def test_cyclic_modules_build_braidings(F2):
    V = make_braided("yd-cyclic:1,2,2", F2)
    assert V.dim == 2
    assert nichols_dims(V).total == 16
    W = make_braided("yd-cyclic:0,1,2;1,1,2", F2)
    assert W.dim == 2


@pytest.mark.parametrize("k,l,lam", list(itertools.product((0, 1), (0, 1), (0, 1))))
def test_bashev_classification_predicts_dimension(F2, k, l, lam):
    if (k, l) == (0, 0):
        pytest.skip("trivial degree")
    kind = classify_bashev(F2, k, l, lam)
    V = make_braided(f"bashev:{k},{l},{lam}", F2)
    assert V.dim == 2
    total = nichols_dims(V).total
    assert total == (4 if kind is BraidingType.DIAGONAL else 16)


def test_bashev_examples(F2):
    assert classify_bashev(F2, 1, 1, 1) is BraidingType.DIAGONAL
    assert classify_bashev(F2, 1, 0, 0) is BraidingType.JORDAN
    assert bashev(F2, 1, 0, 0).dim == 2


def test_make_braided_errors(F3):
    for text in ("trivial", "foo:1", "diagonal:1,2;1", "diagonal:5", "jordan:1,2,3", "yd-cyclic:1,2", "bashev:1"):
        with pytest.raises(ParseError):
            make_braided(text, F3)


def test_diagonal_labels(F3):
    assert diagonal(F3, [[1]]).label == "diagonal"
    assert trivial(F3, 2).label == "trivial:2"
