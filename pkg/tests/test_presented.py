import pytest

from assoclab.models import a4_model, p5_model
from assoclab.presented import Presentation, PresentationError
from assoclab.rationals import qq
from assoclab.rings import RATIONALS
from assoclab.series import Series


def p5_dim(d):
    return 3 ** (d + 1) - 2 ** (d + 1)


def a4_dim(d):
    # the four-strand braid Lie algebra splits off a one-dimensional
    # center, so the graded dimensions gain a polynomial factor
    return (3 ** (d + 2) - 2 ** (d + 3) + 1) // 2


def test_p5_generic_dimensions():
    pres = Presentation.builtin("p5")
    for d in range(7):
        assert pres.dimension(d) == p5_dim(d)


def test_a4_generic_dimensions():
    pres = Presentation.builtin("a4")
    for d in range(5):
        assert pres.dimension(d) == a4_dim(d)


def test_p5_model_counts_match_generic():
    model = p5_model(6)
    for d in range(7):
        count = sum(1 for w in model.alphabet.words_of_degree(d) if model.is_normal(w))
        assert count == p5_dim(d)


def test_a4_model_counts_match_generic():
    model = a4_model(5)
    for d in range(6):
        count = sum(1 for w in model.alphabet.words_of_degree(d) if model.is_normal(w))
        assert count == a4_dim(d)


def relation_series(pres, row, trunc):
    return Series(pres.alphabet, trunc, RATIONALS, dict(row))


def test_relations_reduce_to_zero():
    for name in ("a4", "p5"):
        pres = Presentation.builtin(name)
        for row in pres.quadratic:
            assert pres.normal_form(relation_series(pres, row, 2)).is_zero()


def test_two_sided_ideal_elements_reduce_to_zero():
    pres = Presentation.builtin("p5")
    n = len(pres.letters)
    for row in pres.quadratic:
        for letter in range(n):
            left = {(letter,) + w: c for w, c in row.items()}
            right = {w + (letter,): c for w, c in row.items()}
            for terms in (left, right):
                s = Series(pres.alphabet, 3, RATIONALS, terms)
                assert pres.normal_form(s).is_zero()


def test_degree_four_ideal_elements_reduce_to_zero():
    pres = Presentation.builtin("p5")
    n = len(pres.letters)
    row = pres.quadratic[0]
    for a in range(n):
        for b in range(n):
            terms = {(a,) + w + (b,): c for w, c in row.items()}
            s = Series(pres.alphabet, 4, RATIONALS, terms)
            assert pres.normal_form(s).is_zero()


def test_normal_form_is_idempotent_and_linear():
    pres = Presentation.builtin("p5")
    s = Series(
        pres.alphabet,
        3,
        RATIONALS,
        {(0, 1, 2): qq(2), (4, 3, 0): qq(-1), (1,): qq(5)},
    )
    nf = pres.normal_form(s)
    assert pres.normal_form(nf) == nf
    assert pres.normal_form(s.scale(qq(2))) == nf.scale(qq(2))


def test_normal_form_respects_products():
    # NF(u . v) = NF(NF(u) . v) on a handful of words
    pres = Presentation.builtin("p5")
    words = [(0, 3), (3, 0), (4, 2), (2, 4, 1)]
    for u in words:
        for v in words:
            direct = pres.normal_form_word(u + v)
            nfu = pres.normal_form_word(u)
            recombined = {}
            for w1, c1 in nfu.items():
                for w2, c2 in pres.normal_form_word(w1 + v).items():
                    recombined[w2] = recombined.get(w2, qq(0)) + c1 * c2
            recombined = {w: c for w, c in recombined.items() if c != 0}
            assert direct == recombined


def test_parse_roundtrip_and_errors():
    pres = Presentation.parse(
        "generators: a b\nrelation: a.b - b.a\n", name="abelian2"
    )
    for d in range(5):
        assert pres.dimension(d) == d + 1
    with pytest.raises(PresentationError):
        Presentation.parse("relation: a.b\n")
    with pytest.raises((PresentationError, KeyError)):
        Presentation.parse("generators: a b\nrelation: a.nosuch\n")
    with pytest.raises(PresentationError):
        Presentation.parse("generators: a b\nrelation: a.b.a\n")
