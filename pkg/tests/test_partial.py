import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from derivmon import derivative
from derivmon.errors import CapacityError
from derivmon.oracle import is_member, lang_up_to
from derivmon.partial import (
    accepts,
    closure,
    partial_derivatives,
    partial_derivatives_word,
)
from derivmon.syntax import parse, size
from strategies import regexes, symbols, words


class TestPartialDerivatives:
    def test_union_of_products(self):
        assert partial_derivatives(parse("a b + a c"), "a") == {
            parse("eps b"),
            parse("eps c"),
        }

    def test_shuffle_on_foreign_symbol_is_stuck(self):
        assert partial_derivatives(parse("a0 || a1"), "a2") == frozenset()

    def test_nullable_left_factor_steps_into_right(self):
        assert partial_derivatives(parse("a* b*"), "b") == {parse("eps b*")}

    def test_constants_have_no_derivatives(self):
        assert partial_derivatives(parse("0"), "a") == frozenset()
        assert partial_derivatives(parse("eps"), "a") == frozenset()

    @given(regexes(max_leaves=5), symbols(), st.integers(min_value=0, max_value=3))
    @settings(max_examples=60)
    def test_members_jointly_decompose_the_derivative(self, e, a, k):
        union = frozenset().union(
            *(lang_up_to(d, k) for d in partial_derivatives(e, a))
        )
        assert union == lang_up_to(derivative.derive(e, a), k)


class TestPartialDerivativesWord:
    def test_two_steps(self):
        assert partial_derivatives_word(parse("a* b*"), ("a", "b")) == {parse("eps b*")}

    def test_empty_word(self):
        e = parse("a + b*")
        assert partial_derivatives_word(e, ()) == {e}

    def test_shuffled_stars_reach_the_recurring_state(self):
        frontier = partial_derivatives_word(parse("(eps || a*) (b || a*)"), ("a", "b", "a"))
        assert parse("eps || eps a*") in frontier

    @given(regexes(max_leaves=6), symbols(), words(max_len=3))
    @settings(max_examples=80)
    def test_step_then_word_decomposition(self, e, a, w):
        direct = partial_derivatives_word(e, (a,) + w)
        unioned = frozenset().union(
            *(partial_derivatives_word(d, w) for d in partial_derivatives(e, a))
        )
        assert direct == unioned


class TestAccepts:
    def test_examples(self):
        assert not accepts(parse("a* b*"), ("b", "a"))
        assert accepts(parse("a* b*"), ("b", "b"))
        assert not accepts(parse("a0 || a1"), ("a2",))

    @given(regexes(max_leaves=6), words(max_len=4))
    @settings(max_examples=80)
    def test_three_way_agreement(self, e, w):
        member = is_member(e, w)
        assert accepts(e, w) == member
        assert derivative.accepts(e, w) == member


class TestClosure:
    def test_single_symbol(self):
        assert closure(parse("a")) == {parse("a"), parse("eps")}

    def test_star(self):
        assert closure(parse("a*")) == {parse("a*"), parse("eps a*")}

    def test_empty_expression(self):
        assert closure(parse("0")) == {parse("0")}

    def test_cap_is_enforced(self):
        with pytest.raises(CapacityError):
            closure(parse("(a b c)* || (a b c)*"), cap=3)

    @given(regexes(max_leaves=8))
    @settings(max_examples=80)
    def test_terminates_below_default_cap(self, e):
        reachable = closure(e)
        assert e in reachable

    @given(regexes(max_leaves=8, shuffle=False))
    @settings(max_examples=100)
    def test_shuffle_free_closure_is_linear(self, e):
        assert len(closure(e)) <= size(e) + 1

    @given(regexes(max_leaves=6), words(max_len=3))
    @settings(max_examples=60)
    def test_contains_every_reachable_frontier(self, e, w):
        reachable = closure(e)
        assert partial_derivatives_word(e, w) <= reachable
