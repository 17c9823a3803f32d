"""Tests for the network model and the text format."""

import pytest

from crnmss.network import (
    Complex,
    ParseError,
    Reaction,
    ReactionNetwork,
    Species,
    make_network,
    parse_network,
    render_complex,
    render_network,
)


def test_complex_of_merges_and_drops_zeros():
    c = Complex.of({0: 1, 2: 3})
    assert c.items == ((0, 1), (2, 3))
    assert Complex.of([(1, 2), (1, 1)]).items == ((1, 3),)
    assert Complex.of({0: 0, 1: 2}).items == ((1, 2),)
    assert Complex.of({}).is_zero


def test_complex_accessors():
    c = Complex.of({0: 2, 3: 1})
    assert c.coeff(0) == 2
    assert c.coeff(1) == 0
    assert c.total() == 3
    assert c.support == (0, 3)
    assert c.vector(4) == [2, 0, 0, 1]
    assert not c.is_single_molecule
    assert Complex.of({2: 1}).is_single_molecule
    assert not Complex.of({2: 2}).is_single_molecule


def test_complex_restrict_and_rename():
    c = Complex.of({0: 2, 1: 1, 3: 4})
    assert c.restrict([0, 3]).items == ((0, 2), (3, 4))
    assert c.restrict([]).is_zero
    assert c.rename({0: 5, 1: 0, 3: 1}).items == ((0, 1), (1, 4), (5, 2))


def test_complex_validation():
    with pytest.raises(ValueError):
        Complex(((1, 1), (0, 1)))  # unsorted
    with pytest.raises(ValueError):
        Complex(((0, 0),))  # zero coefficient
    with pytest.raises(ValueError):
        Complex(((0, -1),))


def test_reaction_basics():
    a = Complex.of({0: 1})
    b = Complex.of({1: 1})
    zero = Complex(())
    r = Reaction(a, b)
    assert r.reversed_() == Reaction(b, a)
    assert not r.is_flow
    assert Reaction(zero, a).is_flow
    assert Reaction(a, zero).is_flow
    assert not Reaction(zero, Complex.of({0: 2})).is_flow
    with pytest.raises(ValueError):
        Reaction(a, a)


def test_make_network_and_accessors():
    net = parse_network("A -> B\nB -> A\nA + B -> 2 A")
    assert net.num_species == 2
    assert net.num_reactions == 3
    assert net.species_names() == ("A", "B")
    assert len(net.complexes()) == 4
    assert net.max_coefficient() == 2
    assert net.has_reaction(Reaction(Complex.of({0: 1}), Complex.of({1: 1})))
    assert not net.has_reaction(Reaction(Complex.of({1: 1}), Complex.of({0: 2})))


def test_network_validation():
    a = Complex.of({0: 1})
    b = Complex.of({1: 1})
    with pytest.raises(ValueError):
        make_network(["A", "A"], [Reaction(a, b)])
    with pytest.raises(ValueError):
        make_network(["A", "2B"], [Reaction(a, b)])
    with pytest.raises(ValueError):
        make_network(["A", "B"], [Reaction(a, b), Reaction(a, b)])
    with pytest.raises(ValueError):
        # reaction mentions species index 2, only 2 species declared
        make_network(["A", "B"], [Reaction(a, Complex.of({2: 1}))])
    # 0 species, 0 reactions is a valid (empty) network
    empty = make_network([], [])
    assert empty.num_species == 0 and empty.num_reactions == 0


def test_parse_species_numbered_by_first_appearance():
    net = parse_network("C -> A\nA -> B")
    assert net.species_names() == ("C", "A", "B")


def test_parse_reversible_order_and_comments():
    net = parse_network("# header\nA <-> B  # inline\n\n0 -> A")
    assert net.num_reactions == 3
    r0, r1, r2 = net.reactions
    assert r0.reactant == Complex.of({0: 1}) and r0.product == Complex.of({1: 1})
    assert r1 == r0.reversed_()
    assert r2.reactant.is_zero


def test_parse_coefficients_with_and_without_space():
    net = parse_network("2A + B -> 3 B")
    assert net.reactions[0].reactant == Complex.of({0: 2, 1: 1})
    assert net.reactions[0].product == Complex.of({1: 3})


def test_parse_errors_carry_line_numbers():
    with pytest.raises(ParseError, match="line 2"):
        parse_network("A -> B\nA -> -> B")
    with pytest.raises(ParseError, match="line 1"):
        parse_network("A -> A")
    with pytest.raises(ParseError, match="line 3"):
        parse_network("A -> B\n\nA -> B")
    with pytest.raises(ParseError):
        parse_network("A B")
    with pytest.raises(ParseError):
        parse_network("A + 0 -> B")
    with pytest.raises(ParseError):
        parse_network("0A -> B")


def test_parse_rejects_huge_coefficients():
    with pytest.raises(ParseError, match="coefficient"):
        parse_network("1000000001 A -> B")


def test_render_roundtrip():
    text = "2 A + B -> 3 C\n0 -> A\nC -> 0"
    net = parse_network(text)
    assert render_network(net) == text
    again = parse_network(render_network(net))
    assert again.species_names() == net.species_names()
    assert again.reactions == net.reactions


def test_render_complex():
    names = ("A", "B")
    assert render_complex(Complex(()), names) == "0"
    assert render_complex(Complex.of({0: 1, 1: 2}), names) == "A + 2 B"
