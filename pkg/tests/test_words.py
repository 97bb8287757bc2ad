import random

from assoclab.words import Alphabet, X_ALPHABET, shuffle_words, y_alphabet


def test_x_alphabet_counts():
    for d in range(6):
        assert sum(1 for _ in X_ALPHABET.words_of_degree(d)) == 2 ** d


def test_y_alphabet_weighted_counts():
    ya = y_alphabet(6)
    # words of total weight w over Y1, Y2, ... are the compositions of w
    for w in range(1, 7):
        assert sum(1 for _ in ya.words_of_degree(w)) == 2 ** (w - 1)


def test_word_format_roundtrip():
    ya = y_alphabet(4)
    for w in ya.words_of_degree(4):
        assert ya.parse_word(ya.format_word(w)) == w
    assert X_ALPHABET.format_word(()) == "1"
    assert X_ALPHABET.parse_word("1") == ()


def test_alphabet_weight_mismatch():
    try:
        Alphabet(("a", "b"), (1,))
    except ValueError:
        pass
    else:
        raise AssertionError("expected a ValueError")


def test_shuffle_small_example():
    assert shuffle_words((0,), (1,)) == {(0, 1): 1, (1, 0): 1}
    assert shuffle_words((0,), (0,)) == {(0, 0): 2}
    got = shuffle_words((0, 1), (0,))
    assert got == {(0, 0, 1): 2, (0, 1, 0): 1}


def test_shuffle_counts_and_commutativity():
    rng = random.Random(1)
    for _ in range(30):
        u = tuple(rng.randint(0, 1) for _ in range(rng.randint(0, 4)))
        v = tuple(rng.randint(0, 1) for _ in range(rng.randint(0, 4)))
        table = shuffle_words(u, v)
        # total multiplicity is the binomial coefficient
        total = sum(table.values())
        n, k = len(u) + len(v), len(u)
        binom = 1
        for i in range(k):
            binom = binom * (n - i) // (i + 1)
        assert total == binom
        assert table == shuffle_words(v, u)
