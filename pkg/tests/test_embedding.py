"""Tests for embedded networks, open extensions, and square subnetworks."""

import random

import pytest

from crnmss.embedding import (
    EmbeddingWitness,
    RemovalSpec,
    embedded_network,
    enumerate_sens,
    find_embedding,
    fully_open_extension,
    is_cfstr,
    is_fully_open,
    is_relevant,
    non_flow_subnetwork,
    orientation,
    remove_intermediates,
    restrict_reaction,
    restrict_reactions,
    sen_is_relevant,
    total_molecularity,
    verify_embedding,
)
from crnmss.network import Complex, Reaction, parse_network, render_network
from helpers import random_network


def rxn(text):
    return parse_network(text).reactions[0]


def test_restrict_reaction():
    net = parse_network("A + B -> 2 A + C")
    r = net.reactions[0]
    out = restrict_reaction(r, {0, 1})
    assert out == Reaction(Complex.of({0: 1, 1: 1}), Complex.of({0: 2}))
    # restriction to {C} leaves 0 -> C
    out = restrict_reaction(r, {2})
    assert out == Reaction(Complex(()), Complex.of({2: 1}))
    # restricting A + B -> A + C to {A} collapses to A -> A
    assert restrict_reaction(rxn("A + B -> A + C"), {0}) is None


def test_restrict_reactions_drops_duplicates():
    net = parse_network("A + B -> 2 A\nA + C -> 2 A")
    out = restrict_reactions(net.reactions, {0})
    assert out == [Reaction(Complex.of({0: 1}), Complex.of({0: 2}))]


def test_embedded_network_keeps_names():
    net = parse_network("A + B -> 2 A\nB -> C\nC -> 0")
    sub = embedded_network(net, RemovalSpec.of(reactions=[2], species=[0]))
    assert sub.species_names() == ("B", "C")
    assert render_network(sub) == "B -> 0\nB -> C"
    with pytest.raises(ValueError):
        embedded_network(net, RemovalSpec.of(reactions=[3]))
    with pytest.raises(ValueError):
        embedded_network(net, RemovalSpec.of(species=[9]))


def test_non_flow_subnetwork_and_open_maps():
    net = parse_network("0 -> A\nA -> 0\nA + B -> 2 A\nB -> 0")
    sub = non_flow_subnetwork(net)
    assert render_network(sub) == "A + B -> 2 A"
    open_net = fully_open_extension(sub)
    assert is_fully_open(open_net)
    assert is_cfstr(open_net)
    assert open_net.num_reactions == 1 + 4
    # idempotent
    assert fully_open_extension(open_net).reactions == open_net.reactions


def test_fully_open_extension_keeps_species_indexing():
    net = parse_network("A + B -> 2 A")
    open_net = fully_open_extension(net)
    assert open_net.species_names() == net.species_names()
    assert open_net.reactions[0] == net.reactions[0]


def test_cfstr_vs_fully_open():
    cfstr = parse_network("A -> 0\nB -> 0\nA + B -> 2 A")
    assert is_cfstr(cfstr)
    assert not is_fully_open(cfstr)
    # 0 -> 2A is not an inflow in the flow sense
    weird = parse_network("0 -> 2 A\nA -> 0")
    assert is_cfstr(weird)
    assert not is_fully_open(weird)
    assert not weird.reactions[0].is_flow


def test_remove_intermediates():
    net = parse_network("A -> X\nX -> B\nA -> B")
    out = remove_intermediates(net, [1])  # X has index 1
    assert out.species_names() == ("A", "B")
    # the contracted A -> B duplicates the existing one
    assert render_network(out) == "A -> B"
    with pytest.raises(ValueError):
        remove_intermediates(parse_network("A -> X\n2 X -> B"), [1])
    # chain A -> X -> Y -> B contracts through
    chain = parse_network("A -> X\nX -> Y\nY -> B")
    out = remove_intermediates(chain, [1, 2])
    assert render_network(out) == "A -> B"


def test_orientation_one_by_one():
    net = parse_network("A -> 2 A")
    sens = list(enumerate_sens(net, 1))
    assert len(sens) == 1
    assert orientation(sens[0]) == -1
    net2 = parse_network("2 A -> A")
    assert orientation(next(enumerate_sens(net2, 1))) == 2


def test_enumerate_sens_skips_trivial_restrictions():
    net = parse_network("A + B -> 2 A\nA + C -> 2 A")
    # reaction 1 restricted to {B} and reaction 0 restricted to {C} are 0 -> 0
    ones = list(enumerate_sens(net, 1))
    assert [(s.reaction_indices, s.species_indices) for s in ones] == [
        ((0,), (0,)),
        ((0,), (1,)),
        ((1,), (0,)),
        ((1,), (2,)),
    ]


def test_enumerate_sens_requires_distinct_restrictions():
    # both reactions restrict to A + B -> 2A on species {A, B}
    net = parse_network("A + B + C -> 2 A\nA + B + D -> 2 A")
    two = list(enumerate_sens(net, 2))
    pairs = {sen.species_indices for sen in two}
    assert (0, 1) not in pairs
    assert len(two) == 5


def test_enumerate_sens_size_bounds():
    net = parse_network("A -> B")
    assert list(enumerate_sens(net, 0)) == []
    assert list(enumerate_sens(net, 2)) == []
    assert len(list(enumerate_sens(net, 1))) == 2


def test_total_molecularity_counts_reversible_pair_once():
    net = parse_network("A <-> B\n0 -> A\nA -> 0")
    assert total_molecularity(net, 0) == 1
    assert total_molecularity(net, 1) == 1
    net2 = parse_network("2 A <-> A + B\nA + B -> C")
    assert total_molecularity(net2, 0) == 3 + 1
    assert total_molecularity(net2, 1) == 1 + 1
    assert total_molecularity(net2, 2) == 1


def test_relevance_conditions():
    ok, why = is_relevant(parse_network("A -> 2 A"))
    assert ok and why is None
    checks = [
        ("0 -> A\nA -> 2 A", "inflow"),
        ("2 A -> A", "outflow"),
        ("A + B -> 2 A\n2 A -> A + B", "reversible"),
        ("A + B -> 2 A", "fewer than two complexes"),
        ("A -> 2 B\n2 A -> A + B", "no reactant complex"),
        ("A + B -> C + D\nC -> A\nD -> B", "molecularity"),
    ]
    for text, fragment in checks:
        ok, why = is_relevant(parse_network(text))
        assert not ok and fragment in why


def test_sen_relevance_uses_sen_species():
    # on the host the SEN {A + B -> 2A} over species {A} is A -> 2A
    net = parse_network("A + B -> 2 A\nB -> 0")
    sen = next(
        s
        for s in enumerate_sens(net, 1)
        if s.reaction_indices == (0,) and s.species_indices == (0,)
    )
    ok, why = sen_is_relevant(sen)
    assert ok and why is None
    assert orientation(sen) == -1
    assert sen.species_names() == ("A",)


def test_verify_and_find_embedding():
    pattern = parse_network("A -> 2 A")
    host = parse_network("X + Y -> 2 X\nY -> 0\nX -> 0")
    w = find_embedding(pattern, host)
    assert w is not None
    assert verify_embedding(pattern, host, w)
    assert w.species_map == (0,)
    assert w.reaction_map == (0,)
    # name-preserving search fails (host has no species A)
    assert find_embedding(pattern, host, match_names=True) is None
    # pattern bigger than host
    assert find_embedding(host, pattern) is None


def test_verify_embedding_rejects_bad_witnesses():
    pattern = parse_network("A -> 2 A")
    host = parse_network("X + Y -> 2 X\nY -> 0")
    assert not verify_embedding(pattern, host, EmbeddingWitness((1,), (0,)))
    assert not verify_embedding(pattern, host, EmbeddingWitness((0,), (1,)))
    assert not verify_embedding(pattern, host, EmbeddingWitness((0, 1), (0,)))
    assert not verify_embedding(pattern, host, EmbeddingWitness((0,), (5,)))


def test_find_embedding_recovers_random_embeddings():
    rng = random.Random(31)
    hits = 0
    for _ in range(60):
        host = random_network(rng, max_species=4, max_reactions=4)
        spec = RemovalSpec.of(
            reactions=[
                i for i in range(host.num_reactions) if rng.random() < 0.4
            ],
            species=[i for i in range(host.num_species) if rng.random() < 0.3],
        )
        pattern = embedded_network(host, spec)
        if pattern.num_reactions == 0:
            continue
        w = find_embedding(pattern, host)
        assert w is not None
        assert verify_embedding(pattern, host, w)
        hits += 1
    assert hits > 30
