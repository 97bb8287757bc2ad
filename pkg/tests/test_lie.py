import random

from assoclab.lie import bracketing, lie_basis, lie_bracket, lyndon_words
from assoclab.series import is_lie
from assoclab.words import X_ALPHABET

from support import random_lie

# necklace counts: dimensions of the free Lie algebra on two generators
WITT_2 = {1: 2, 2: 1, 3: 2, 4: 3, 5: 6, 6: 9}


def test_lyndon_counts():
    for n, dim in WITT_2.items():
        assert len(lyndon_words(2, n)) == dim


def test_lyndon_words_are_strictly_smallest_rotations():
    for n in range(1, 7):
        for w in lyndon_words(2, n):
            assert all(w < w[i:] + w[:i] for i in range(1, len(w)))


def test_basis_elements_are_lie_and_independent():
    for d in range(1, 6):
        basis = lie_basis(X_ALPHABET, d, d)
        assert len(basis) == WITT_2[d]
        for word, e in basis:
            assert is_lie(e)
            # triangularity: the Lyndon word itself has coefficient 1
            assert e.coefficient(word) == 1


def test_bracketing_of_a_lyndon_word():
    # [0, [0, 1]] = 001 - 2*010 + 100
    table = bracketing((0, 0, 1))
    assert table == {(0, 0, 1): 1, (0, 1, 0): -2, (1, 0, 0): 1}


def test_bracket_closure_and_jacobi():
    rng = random.Random(5)
    trunc = 5
    a = random_lie(rng, 2, trunc)
    b = random_lie(rng, 2, trunc)
    c = random_lie(rng, 1, trunc)
    ab = lie_bracket(a, b)
    assert is_lie(ab)
    jac = (
        lie_bracket(a, lie_bracket(b, c))
        .add(lie_bracket(b, lie_bracket(c, a)))
        .add(lie_bracket(c, lie_bracket(a, b)))
    )
    assert jac.is_zero()
