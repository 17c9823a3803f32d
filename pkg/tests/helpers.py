"""Seeded random generators shared by the property and acceptance suites."""

from __future__ import annotations

import random

from crnmss.network import Complex, Reaction, ReactionNetwork, make_network


def random_network(
    rng: random.Random,
    max_species: int = 4,
    max_reactions: int = 4,
    max_coeff: int = 2,
) -> ReactionNetwork:
    """Random network with every species used; sizes are upper bounds."""
    while True:
        ns = rng.randint(1, max_species)
        nr = rng.randint(1, max_reactions)
        reactions: list[Reaction] = []
        seen: set[Reaction] = set()
        for _ in range(nr):
            for _attempt in range(60):
                reactant = {i: c for i in range(ns) if (c := rng.randint(0, max_coeff))}
                product = {i: c for i in range(ns) if (c := rng.randint(0, max_coeff))}
                if reactant == product:
                    continue
                rxn = Reaction(Complex.of(reactant), Complex.of(product))
                if rxn in seen:
                    continue
                seen.add(rxn)
                reactions.append(rxn)
                break
        if not reactions:
            continue
        used = sorted(
            {i for rxn in reactions for i, _ in rxn.reactant.items}
            | {i for rxn in reactions for i, _ in rxn.product.items}
        )
        remap = {old: new for new, old in enumerate(used)}
        names = [f"S{old + 1}" for old in used]
        remapped = [
            Reaction(rxn.reactant.rename(remap), rxn.product.rename(remap))
            for rxn in reactions
        ]
        return make_network(names, remapped)


def random_cfstr(
    rng: random.Random,
    max_species: int = 4,
    max_nonflow: int = 4,
    max_coeff: int = 2,
) -> ReactionNetwork:
    """Random network completed with an outflow for every species."""
    base = random_network(rng, max_species, max_nonflow, max_coeff)
    zero = Complex(())
    reactions = list(base.reactions)
    for i in range(base.num_species):
        outflow = Reaction(Complex.of({i: 1}), zero)
        if outflow not in reactions:
            reactions.append(outflow)
    return make_network(base.species_names(), reactions)


def random_open_monomolecular(
    rng: random.Random, max_species: int = 3, max_pairs: int = 3
) -> ReactionNetwork:
    """Fully open network plus reversible single-molecule conversions.

    Every complex is the zero complex or a single species, so the result
    is weakly reversible with deficiency zero.
    """
    ns = rng.randint(1, max_species)
    names = [f"S{i + 1}" for i in range(ns)]
    zero = Complex(())
    reactions: list[Reaction] = []
    for i in range(ns):
        species = Complex.of({i: 1})
        reactions.append(Reaction(zero, species))
        reactions.append(Reaction(species, zero))
    pairs: set[tuple[int, int]] = set()
    for _ in range(rng.randint(0, max_pairs)):
        if ns < 2:
            break
        i, j = rng.sample(range(ns), 2)
        if (i, j) in pairs or (j, i) in pairs:
            continue
        pairs.add((i, j))
        reactions.append(Reaction(Complex.of({i: 1}), Complex.of({j: 1})))
        reactions.append(Reaction(Complex.of({j: 1}), Complex.of({i: 1})))
    return make_network(names, reactions)
