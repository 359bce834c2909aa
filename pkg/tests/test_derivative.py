from hypothesis import given, settings
from hypothesis import strategies as st

from derivmon.derivative import accepts, derive, derive_word
from derivmon.oracle import is_member, lang_up_to
from derivmon.syntax import Regex, parse, size
from strategies import regexes, symbols, words


class TestDerive:
    def test_union_of_products_under_a(self):
        assert derive(parse("a b + a c"), "a") == parse("(eps b + 0 0) + (eps c + 0 0)")

    def test_union_of_products_under_b(self):
        assert derive(parse("a b + a c"), "b") == parse("(0 b + 0 eps) + (0 c + 0 0)")

    def test_shuffle_on_foreign_symbol(self):
        assert derive(parse("a0 || a1"), "a2") == parse("(0 || a1) + (a0 || 0)")

    @given(regexes(), symbols())
    def test_total_on_every_shape(self, e, a):
        assert isinstance(derive(e, a), Regex)

    @given(regexes(max_leaves=5), symbols(), st.integers(min_value=0, max_value=3))
    @settings(max_examples=60)
    def test_derivative_language(self, e, a, k):
        derived = lang_up_to(derive(e, a), k)
        quotient = {v[1:] for v in lang_up_to(e, k + 1) if v[:1] == (a,)}
        assert derived == quotient


class TestDeriveWord:
    def test_empty_word_is_identity(self):
        e = parse("a* || b c")
        assert derive_word(e, ()) is e

    def test_symbol_match(self):
        assert derive_word(parse("a"), ("a",)) == parse("eps")

    def test_symbol_mismatch(self):
        assert derive_word(parse("a"), ("b",)) == parse("0")


class TestAccepts:
    def test_examples(self):
        assert accepts(parse("a* b*"), ("a", "b"))
        assert not accepts(parse("a"), ())
        assert accepts(parse("a0 || a1"), ("a1", "a0"))

    @given(regexes(max_leaves=6), words(max_len=4))
    @settings(max_examples=80)
    def test_agrees_with_oracle(self, e, w):
        assert accepts(e, w) == is_member(e, w)


def test_iterated_derivatives_grow_without_simplification():
    # Brzozowski derivatives are intentionally unnormalized, so repeated
    # steps on this needle-in-haystack shape never shrink.
    e = parse("(a + b)* a (a + b)*")
    sizes = [size(e)]
    for _ in range(5):
        e = derive(e, "a")
        sizes.append(size(e))
    assert sizes == sorted(sizes)
