import numpy as np
import pytest

from kneadck.intlinalg import AbelianGroup, eye_int, is_irreducible
from kneadck.ktheory import bf_group, closed_form_a, k_groups
from kneadck.markov import build_orbit, transition_matrix
from kneadck.symbolic import (
    DomainError,
    KneadingWord,
    Symbol,
    enumerate_admissible,
    is_admissible,
    parse_word,
)

TRIVIAL = AbelianGroup(0, ())
Z = AbelianGroup(1, ())


def all_words(max_n):
    out = []
    for n in range(2, max_n + 1):
        out.extend(enumerate_admissible(n))
    return out


def star(a: KneadingWord, b: KneadingWord) -> KneadingWord:
    """Renormalization product of two kneading words.

    Each symbol of ``b`` is appended to a copy of the head of ``a``,
    orientation-reversed when the head contains an odd number of R's.
    """
    head = a.symbols[:-1]
    flip = sum(1 for s in head if s is Symbol.R) % 2 == 1
    conj = {Symbol.R: Symbol.L, Symbol.L: Symbol.R, Symbol.C: Symbol.C}
    out = []
    for s in b.symbols:
        out.extend(head)
        out.append(conj[s] if flip else s)
    return KneadingWord(tuple(out))


def star_words(max_n):
    """All admissible words of period <= max_n that factor as a product."""
    found = set()
    words = {n: list(enumerate_admissible(n)) for n in range(2, max_n + 1)}
    for m in range(2, max_n // 2 + 1):
        for p in range(2, max_n // m + 1):
            for a in words[m]:
                for b in words[p]:
                    found.add(str(star(a, b)))
    return found


class TestClosedForm:
    @pytest.mark.parametrize(
        "text,expected",
        [
            ("RC", 0),
            ("RLC", 1),
            ("RLLC", 2),
            ("RLRC", 0),
            ("RLLRRC", 2),
            ("RLLRLC", 0),
        ],
    )
    def test_fixtures(self, text, expected):
        assert closed_form_a(parse_word(text)) == expected

    def test_rejects_fixed_point(self):
        with pytest.raises(DomainError):
            closed_form_a(parse_word("C"))

    @pytest.mark.parametrize("word", all_words(8), ids=str)
    def test_alternating_sum_form(self, word):
        # a = |1 + sum over l of the product of the first l symbol values|.
        eps = word.values()[:-1]
        total = 1
        prod = 1
        for e in eps:
            prod *= e
            total += prod
        assert closed_form_a(word) == abs(total)


class TestKGroups:
    def test_period_six_fixture(self):
        rep = k_groups(parse_word("RLLRRC"))
        assert rep.a_closed_form == 2
        assert rep.K0 == AbelianGroup(0, (2,))
        assert str(rep.K0) == "Z_2"
        assert rep.K1 == TRIVIAL
        assert rep.BF == AbelianGroup(0, (2,))
        assert rep.irreducible
        assert rep.admissible

    def test_period_two(self):
        rep = k_groups(parse_word("RC"))
        assert rep.a_closed_form == 0
        assert rep.K0 == Z
        assert rep.K1 == Z
        assert rep.irreducible

    def test_trivial_group(self):
        rep = k_groups(parse_word("RLC"))
        assert rep.a_closed_form == 1
        assert rep.K0 == TRIVIAL
        assert rep.K0.is_trivial
        assert rep.K1 == TRIVIAL

    def test_reducible_zero_a(self):
        rep = k_groups(parse_word("RLRC"))
        assert rep.a_closed_form == 0
        assert rep.K0 == Z
        assert rep.K1 == Z
        assert not rep.irreducible

    def test_inadmissible_reported_not_rejected(self):
        with pytest.warns(UserWarning):
            rep = k_groups(parse_word("LLC"))
        assert not rep.admissible

    @pytest.mark.parametrize("word", all_words(10), ids=str)
    def test_closed_form_matches_snf(self, word):
        rep = k_groups(word)
        a = rep.a_closed_form
        assert rep.K0 == AbelianGroup.cyclic(a)
        if a == 0:
            assert rep.K1 == Z
        else:
            assert rep.K1 == TRIVIAL

    @pytest.mark.parametrize("word", all_words(8), ids=str)
    def test_bf_equals_k0(self, word):
        rep = k_groups(word)
        assert rep.BF == rep.K0


class TestBowenFranks:
    def test_period_six_matrix(self):
        A = [
            [0, 1, 1, 0, 0],
            [0, 0, 0, 1, 1],
            [0, 0, 0, 0, 1],
            [0, 0, 1, 1, 0],
            [1, 1, 0, 0, 0],
        ]
        assert bf_group(A) == AbelianGroup(0, (2,))

    def test_identity(self):
        assert bf_group(eye_int(2)) == AbelianGroup(2, ())

    def test_swap(self):
        assert bf_group([[0, 1], [1, 0]]) == Z

    def test_input_validation(self):
        with pytest.raises(ValueError):
            bf_group([[0, 2], [1, 0]])
        with pytest.raises(ValueError):
            bf_group([[0, 1, 1], [1, 0, 0]])


class TestRenormalization:
    """How vanishing torsion order relates to reducibility.

    Products of shorter words are always reducible, and among a = 0 words
    the reducible ones are exactly the products.  But a = 0 alone does not
    force reducibility, and products do not force a = 0: both implications
    fail on concrete small words, pinned below.
    """

    def test_star_fixture(self):
        a = star(parse_word("RLC"), parse_word("RC"))
        assert str(a) == "RLLRLC"
        b = star(parse_word("RC"), parse_word("RLC"))
        assert str(b) == "RLRRRC"

    @pytest.mark.parametrize("text", sorted(star_words(10)))
    def test_products_admissible(self, text):
        assert is_admissible(parse_word(text))

    @pytest.mark.parametrize("text", sorted(star_words(12)))
    def test_products_reducible(self, text):
        A = transition_matrix(build_orbit(parse_word(text)))
        assert not is_irreducible(A)

    def test_zero_a_reducible_words_are_exactly_products(self):
        stars = star_words(12)
        for word in all_words(12):
            rep = k_groups(word)
            if rep.a_closed_form != 0:
                continue
            assert (not rep.irreducible) == (str(word) in stars)

    def test_zero_a_does_not_force_reducible(self):
        # Smallest witnesses: the period-2 word and two period-8 words.
        for text in ("RC", "RLLRLRRC", "RLLRRRLC"):
            rep = k_groups(parse_word(text))
            assert rep.a_closed_form == 0
            assert rep.irreducible

    def test_product_does_not_force_zero_a(self):
        w = star(parse_word("RLC"), parse_word("RLC"))
        assert str(w) == "RLLRLRRLC"
        rep = k_groups(w)
        assert rep.a_closed_form == 1
        assert rep.K0.is_trivial
        assert not rep.irreducible

    def test_zero_a_census(self):
        # 63 words with a = 0 up to period 12: 21 reducible, 42 not.
        reducible = irreducible = 0
        for word in all_words(12):
            rep = k_groups(word)
            if rep.a_closed_form != 0:
                continue
            if rep.irreducible:
                irreducible += 1
            else:
                reducible += 1
        assert reducible == 21
        assert irreducible == 42
