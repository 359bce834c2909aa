"""Hypothesis strategies shared by the property suites."""

from hypothesis import strategies as st

from derivmon.syntax import Cat, Empty, Eps, Or, Shuffle, Star, Sym

DEFAULT_ALPHABET = ("a", "b", "c")


def symbols(alphabet=DEFAULT_ALPHABET):
    return st.sampled_from(alphabet)


def regexes(alphabet=DEFAULT_ALPHABET, max_leaves=8, shuffle=True):
    leaves = st.one_of(
        st.just(Empty()),
        st.just(Eps()),
        symbols(alphabet).map(Sym),
    )

    def compound(children):
        binary = st.tuples(children, children)
        options = [
            binary.map(lambda pair: Cat(*pair)),
            binary.map(lambda pair: Or(*pair)),
            children.map(Star),
        ]
        if shuffle:
            options.append(binary.map(lambda pair: Shuffle(*pair)))
        return st.one_of(options)

    return st.recursive(leaves, compound, max_leaves=max_leaves)


def words(alphabet=DEFAULT_ALPHABET, max_len=5):
    return st.lists(symbols(alphabet), max_size=max_len).map(tuple)
