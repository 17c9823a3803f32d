"""Embedded networks: restriction, flows, square embedded networks, matching.

Restricting a reaction to a species subset zeroes the coefficients of all
other species; coefficients of kept species are unchanged.  An embedded
network is produced by removing reactions, restricting what is left to
the kept species, discarding trivial and duplicate reactions, and then
dropping species that no longer appear anywhere.

A square embedded network (SEN) pairs k reactions with k species such
that the restrictions are k pairwise distinct nontrivial reactions.  Its
orientation is the product of two k x k determinants: reactant columns,
and reactant-minus-product columns.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Iterable, Iterator, Sequence

from .linalg import det_int
from .network import Complex, Reaction, ReactionNetwork, Species, make_network


@dataclass(frozen=True)
class RemovalSpec:
    reactions_removed: frozenset[int]
    species_removed: frozenset[int]

    @classmethod
    def of(cls, reactions: Iterable[int] = (), species: Iterable[int] = ()) -> "RemovalSpec":
        return cls(frozenset(reactions), frozenset(species))


def restrict_reaction(rxn: Reaction, kept: Iterable[int]) -> Reaction | None:
    """Restriction to kept species, or None when it collapses to triviality."""
    keep = set(kept)
    reactant = rxn.reactant.restrict(keep)
    product = rxn.product.restrict(keep)
    if reactant == product:
        return None
    return Reaction(reactant, product)


def restrict_reactions(reactions: Sequence[Reaction], kept: Iterable[int]) -> list[Reaction]:
    """Restrict each reaction; drop trivial results and duplicates (keep first)."""
    keep = set(kept)
    out: list[Reaction] = []
    seen: set[Reaction] = set()
    for rxn in reactions:
        res = restrict_reaction(rxn, keep)
        if res is not None and res not in seen:
            seen.add(res)
            out.append(res)
    return out


def embedded_network(net: ReactionNetwork, spec: RemovalSpec) -> ReactionNetwork:
    """The network embedded in ``net`` by the given removals.

    Species are renumbered densely but keep their names, so results from
    different removal specs compare by name.
    """
    for ridx in spec.reactions_removed:
        if not 0 <= ridx < net.num_reactions:
            raise ValueError(f"reaction index {ridx} out of range")
    for sidx in spec.species_removed:
        if not 0 <= sidx < net.num_species:
            raise ValueError(f"species index {sidx} out of range")
    kept_reactions = [
        rxn for i, rxn in enumerate(net.reactions) if i not in spec.reactions_removed
    ]
    kept_species = [i for i in range(net.num_species) if i not in spec.species_removed]
    restricted = restrict_reactions(kept_reactions, kept_species)
    used = sorted({idx for rxn in restricted for cpx in rxn.complexes() for idx, _ in cpx})
    renumber = {old: new for new, old in enumerate(used)}
    reactions = tuple(
        Reaction(r.reactant.rename(renumber), r.product.rename(renumber)) for r in restricted
    )
    names = [net.species[i].name for i in used]
    return make_network(names, reactions)


def non_flow_subnetwork(net: ReactionNetwork) -> ReactionNetwork:
    """Remove inflow and outflow reactions (and any species they orphan)."""
    flows = {i for i, rxn in enumerate(net.reactions) if rxn.is_flow}
    return embedded_network(net, RemovalSpec.of(reactions=flows))


def fully_open_extension(net: ReactionNetwork) -> ReactionNetwork:
    """Add the missing inflow 0 -> X and outflow X -> 0 for every species."""
    existing = set(net.reactions)
    reactions = list(net.reactions)
    for i in range(net.num_species):
        mono = Complex.of({i: 1})
        zero = Complex(())
        for rxn in (Reaction(zero, mono), Reaction(mono, zero)):
            if rxn not in existing:
                existing.add(rxn)
                reactions.append(rxn)
    return ReactionNetwork(net.species, tuple(reactions))


def is_cfstr(net: ReactionNetwork) -> bool:
    """True iff every species has its outflow X -> 0."""
    have = set(net.reactions)
    zero = Complex(())
    return all(
        Reaction(Complex.of({i: 1}), zero) in have for i in range(net.num_species)
    ) and net.num_species > 0


def is_fully_open(net: ReactionNetwork) -> bool:
    """True iff every species has both its inflow and its outflow."""
    have = set(net.reactions)
    zero = Complex(())
    for i in range(net.num_species):
        mono = Complex.of({i: 1})
        if Reaction(zero, mono) not in have or Reaction(mono, zero) not in have:
            return False
    return net.num_species > 0


def _intermediate_complex(net: ReactionNetwork, species_idx: int) -> Complex:
    """The complex {X} when X qualifies as an intermediate, else ValueError."""
    mono = Complex.of({species_idx: 1})
    complexes = net.complexes()
    if mono not in complexes:
        raise ValueError(
            f"species {net.species[species_idx].name} is not an intermediate: "
            "no complex consisting of it alone"
        )
    for cpx in complexes:
        if cpx != mono and cpx.coeff(species_idx) != 0:
            raise ValueError(
                f"species {net.species[species_idx].name} is not an intermediate: "
                "it appears in another complex"
            )
    return mono


def remove_intermediates(net: ReactionNetwork, species: Iterable[int]) -> ReactionNetwork:
    """Contract away intermediate species (total molecularity one).

    Each complex {X} is removed and every path C' -> {X} -> C'' is replaced
    by C' -> C''; duplicates and self-contractions are dropped.  Chains of
    intermediates contract through.
    """
    targets = sorted(set(species))
    for idx in targets:
        if not 0 <= idx < net.num_species:
            raise ValueError(f"species index {idx} out of range")
        _intermediate_complex(net, idx)
    reactions = list(net.reactions)
    for idx in targets:
        mono = Complex.of({idx: 1})
        incoming = [r for r in reactions if r.product == mono]
        outgoing = [r for r in reactions if r.reactant == mono]
        keep = [r for r in reactions if r.product != mono and r.reactant != mono]
        seen = set(keep)
        for a in incoming:
            for b in outgoing:
                if a.reactant == b.product:
                    continue
                new = Reaction(a.reactant, b.product)
                if new not in seen:
                    seen.add(new)
                    keep.append(new)
        reactions = keep
    used = sorted({i for rxn in reactions for cpx in rxn.complexes() for i, _ in cpx})
    renumber = {old: new for new, old in enumerate(used)}
    renamed = tuple(
        Reaction(r.reactant.rename(renumber), r.product.rename(renumber)) for r in reactions
    )
    return make_network([net.species[i].name for i in used], renamed)


@dataclass(frozen=True)
class SquareEmbeddedNetwork:
    """k host reactions restricted to k species, all restrictions distinct."""

    host: ReactionNetwork
    reaction_indices: tuple[int, ...]
    species_indices: tuple[int, ...]
    reactions: tuple[Reaction, ...]  # restricted, still in host species indexing

    @property
    def size(self) -> int:
        return len(self.species_indices)

    def species_names(self) -> tuple[str, ...]:
        return tuple(self.host.species[i].name for i in self.species_indices)


def orientation(sen: SquareEmbeddedNetwork) -> int:
    """det[reactant columns] * det[reactant - product columns] (exact)."""
    rows = sen.species_indices
    reactant_mat = [[rxn.reactant.coeff(i) for rxn in sen.reactions] for i in rows]
    diff_mat = [
        [rxn.reactant.coeff(i) - rxn.product.coeff(i) for rxn in sen.reactions] for i in rows
    ]
    return det_int(reactant_mat) * det_int(diff_mat)


def enumerate_sens(net: ReactionNetwork, k: int) -> Iterator[SquareEmbeddedNetwork]:
    """All size-k square embedded networks, lexicographic in (reactions, species)."""
    if k < 1 or k > min(net.num_reactions, net.num_species):
        return
    for rxn_subset in itertools.combinations(range(net.num_reactions), k):
        candidates = [net.reactions[i] for i in rxn_subset]
        for sp_subset in itertools.combinations(range(net.num_species), k):
            keep = set(sp_subset)
            restricted = []
            ok = True
            for rxn in candidates:
                res = restrict_reaction(rxn, keep)
                if res is None or res in restricted:
                    ok = False
                    break
                restricted.append(res)
            if ok:
                yield SquareEmbeddedNetwork(net, rxn_subset, sp_subset, tuple(restricted))


def _merged_nonflow(reactions: Sequence[Reaction]) -> list[Reaction]:
    """Non-flow reactions with exact reverse pairs counted once (first kept)."""
    nonflow = [r for r in reactions if not r.is_flow]
    have = set(nonflow)
    out = []
    seen_pairs: set[frozenset[Complex]] = set()
    for rxn in nonflow:
        if rxn.reversed_() in have:
            key = frozenset(rxn.complexes())
            if key in seen_pairs:
                continue
            seen_pairs.add(key)
        out.append(rxn)
    return out


def total_molecularity(net: ReactionNetwork, species_idx: int) -> int:
    """Sum of the species' coefficients over non-flow reactions.

    A reversible pair y -> y', y' -> y contributes once (the pair is one
    reaction listed with a double arrow when the network is written down).
    """
    if not 0 <= species_idx < net.num_species:
        raise ValueError(f"species index {species_idx} out of range")
    total = 0
    for rxn in _merged_nonflow(net.reactions):
        total += rxn.reactant.coeff(species_idx) + rxn.product.coeff(species_idx)
    return total


def _relevance(
    reactions: Sequence[Reaction], species_indices: Sequence[int]
) -> tuple[bool, str | None]:
    """Shared relevance check over an explicit species index list."""
    for rxn in reactions:
        if rxn.reactant.is_zero:
            return False, "contains an inflow or generalized inflow reaction"
        support = rxn.reactant.support
        if len(support) == 1:
            i = support[0]
            if all(idx == i for idx, _ in rxn.product.items) and rxn.product.coeff(
                i
            ) <= rxn.reactant.coeff(i):
                return False, "contains an outflow or generalized outflow reaction"
    have = set(reactions)
    for rxn in reactions:
        if rxn.reversed_() in have:
            return False, "contains a reversible pair of reactions"
    # Complexes are counted per occurrence: each reaction contributes its
    # reactant and its product complex, even when the same complex recurs
    # in another reaction.  Distinct-complex counting would wrongly discard
    # square embedded networks that chain through a shared complex.
    occurrences = [cpx for rxn in reactions for cpx in rxn.complexes()]
    for idx in species_indices:
        appearing = sum(1 for cpx in occurrences if cpx.coeff(idx) != 0)
        if appearing < 2:
            return False, "a species appears in fewer than two complexes"
        if not any(rxn.reactant.coeff(idx) != 0 for rxn in reactions):
            return False, "a species appears in no reactant complex"
    merged = _merged_nonflow(reactions)
    best = 0
    for idx in species_indices:
        tm = sum(r.reactant.coeff(idx) + r.product.coeff(idx) for r in merged)
        best = max(best, tm)
    if best < 3:
        return False, "maximum total molecularity is below three"
    return True, None


def is_relevant(net: ReactionNetwork) -> tuple[bool, str | None]:
    """Relevance of a network; (True, None) or (False, first failed condition)."""
    return _relevance(net.reactions, range(net.num_species))


def sen_is_relevant(sen: SquareEmbeddedNetwork) -> tuple[bool, str | None]:
    return _relevance(sen.reactions, sen.species_indices)


@dataclass(frozen=True)
class EmbeddingWitness:
    """pattern species i maps to host species species_map[i]; pattern
    reaction j is realized by host reaction reaction_map[j]."""

    species_map: tuple[int, ...]
    reaction_map: tuple[int, ...]


def verify_embedding(
    pattern: ReactionNetwork, host: ReactionNetwork, witness: EmbeddingWitness
) -> bool:
    if len(witness.species_map) != pattern.num_species:
        return False
    if len(set(witness.species_map)) != len(witness.species_map):
        return False
    if len(witness.reaction_map) != pattern.num_reactions:
        return False
    image = set(witness.species_map)
    back = {h: p for p, h in enumerate(witness.species_map)}
    for rxn_p, host_idx in zip(pattern.reactions, witness.reaction_map):
        if not 0 <= host_idx < host.num_reactions:
            return False
        restricted = restrict_reaction(host.reactions[host_idx], image)
        if restricted is None:
            return False
        renamed = Reaction(restricted.reactant.rename(back), restricted.product.rename(back))
        if renamed != rxn_p:
            return False
    return True


def _reaction_compatible(
    rxn_p: Reaction, rxn_h: Reaction, image: Sequence[int], upto: int
) -> bool:
    # pattern species < upto are assigned; their coefficients must agree exactly
    for q in range(upto):
        h = image[q]
        if rxn_p.reactant.coeff(q) != rxn_h.reactant.coeff(h):
            return False
        if rxn_p.product.coeff(q) != rxn_h.product.coeff(h):
            return False
    return True


def find_embedding(
    pattern: ReactionNetwork, host: ReactionNetwork, match_names: bool = False
) -> EmbeddingWitness | None:
    """Search for an embedding of ``pattern`` into ``host``.

    Matching is up to species renaming unless ``match_names`` forces the
    injection to preserve names.  The returned witness is the
    lexicographically least assignment (pattern species in index order,
    host candidates ascending), with each pattern reaction realized by the
    smallest-index host reaction.
    """
    ps, hs = pattern.num_species, host.num_species
    if ps > hs or pattern.num_reactions > host.num_reactions:
        return None
    if pattern.max_coefficient() > host.max_coefficient():
        return None

    image = [-1] * ps
    used = [False] * hs

    def feasible(upto: int) -> bool:
        for rxn_p in pattern.reactions:
            if not any(
                _reaction_compatible(rxn_p, rxn_h, image, upto) for rxn_h in host.reactions
            ):
                return False
        return True

    def assign(q: int) -> bool:
        if q == ps:
            return True
        for h in range(hs):
            if used[h]:
                continue
            if match_names and pattern.species[q].name != host.species[h].name:
                continue
            image[q] = h
            used[h] = True
            if feasible(q + 1) and assign(q + 1):
                return True
            used[h] = False
            image[q] = -1
        return False

    if not feasible(0) or not assign(0):
        return None
    reaction_map = []
    for rxn_p in pattern.reactions:
        for j, rxn_h in enumerate(host.reactions):
            if _reaction_compatible(rxn_p, rxn_h, image, ps):
                reaction_map.append(j)
                break
    witness = EmbeddingWitness(tuple(image), tuple(reaction_map))
    assert verify_embedding(pattern, host, witness)
    return witness
