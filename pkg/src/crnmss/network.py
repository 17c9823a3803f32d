"""Reaction network data model and the plain-text network format.

A network is a finite list of named species together with directed
reactions between complexes.  A complex is a formal non-negative integer
combination of species, stored sparsely.  All coefficients are exact
integers; no floating point enters at this layer.

Text format, one reaction per line::

    # comment
    A + B -> 3 A + C
    0 <-> A          # reversible, expands to two directed reactions

``0`` denotes the empty complex.  Species are created in order of first
appearance.  ``render_network`` emits a canonical form that parses back
to an equal network.
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field
from typing import Iterable, Iterator, Mapping

# Upper bound on a single stoichiometric coefficient; guards against
# typos like "10000000000 A" rather than any arithmetic limitation.
MAX_COEFFICIENT = 10**9

_NAME_RE = re.compile(r"[A-Za-z_][A-Za-z0-9_]*")
_TERM_RE = re.compile(r"^\s*(?:(\d+)\s*)?([A-Za-z_][A-Za-z0-9_]*)\s*$")


class ParseError(ValueError):
    """Raised for any defect in network text (syntax, duplicates, ...).

    ``kind`` is one of "syntax", "duplicate-reaction", "trivial-reaction",
    "coefficient-overflow".  ``line`` is 1-based when known.
    """

    def __init__(self, message: str, kind: str = "syntax", line: int | None = None):
        self.kind = kind
        self.line = line
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)


@dataclass(frozen=True)
class Species:
    index: int
    name: str

    def __post_init__(self) -> None:
        if self.index < 0:
            raise ValueError("species index must be non-negative")
        if not _NAME_RE.fullmatch(self.name):
            raise ValueError(
                f"invalid species name {self.name!r}: names are identifier-like "
                "(letters, digits, underscore, not starting with a digit)"
            )


@dataclass(frozen=True)
class Complex:
    """Sparse complex: sorted tuple of (species index, positive coefficient)."""

    items: tuple[tuple[int, int], ...]

    def __post_init__(self) -> None:
        prev = -1
        for idx, coeff in self.items:
            if idx <= prev:
                raise ValueError("complex items must be strictly sorted by species index")
            if coeff < 1:
                raise ValueError("complex coefficients must be positive")
            if coeff > MAX_COEFFICIENT:
                raise ValueError("stoichiometric coefficient exceeds supported bound")
            prev = idx

    @classmethod
    def of(cls, coeffs: Mapping[int, int] | Iterable[tuple[int, int]]) -> "Complex":
        if isinstance(coeffs, Mapping):
            pairs = coeffs.items()
        else:
            pairs = coeffs
        merged: dict[int, int] = {}
        for idx, coeff in pairs:
            merged[idx] = merged.get(idx, 0) + coeff
        return cls(tuple(sorted((i, c) for i, c in merged.items() if c != 0)))

    @property
    def is_zero(self) -> bool:
        return not self.items

    @property
    def support(self) -> tuple[int, ...]:
        return tuple(idx for idx, _ in self.items)

    def coeff(self, index: int) -> int:
        for idx, c in self.items:
            if idx == index:
                return c
        return 0

    def total(self) -> int:
        """Total molecularity of the complex (sum of coefficients)."""
        return sum(c for _, c in self.items)

    def vector(self, num_species: int) -> list[int]:
        dense = [0] * num_species
        for idx, c in self.items:
            dense[idx] = c
        return dense

    def restrict(self, kept: Iterable[int]) -> "Complex":
        """Zero out every species not in ``kept``."""
        keep = set(kept)
        return Complex(tuple(p for p in self.items if p[0] in keep))

    def rename(self, mapping: Mapping[int, int]) -> "Complex":
        return Complex.of({mapping[i]: c for i, c in self.items})

    @property
    def is_single_molecule(self) -> bool:
        return len(self.items) == 1 and self.items[0][1] == 1

    def __iter__(self) -> Iterator[tuple[int, int]]:
        return iter(self.items)


@dataclass(frozen=True)
class Reaction:
    reactant: Complex
    product: Complex

    def __post_init__(self) -> None:
        if self.reactant == self.product:
            raise ValueError("trivial reaction: reactant equals product")

    def reversed_(self) -> "Reaction":
        return Reaction(self.product, self.reactant)

    @property
    def is_flow(self) -> bool:
        """True for inflow 0 -> X and outflow X -> 0 (single molecule)."""
        r, p = self.reactant, self.product
        return (r.is_zero and p.is_single_molecule) or (p.is_zero and r.is_single_molecule)

    def complexes(self) -> tuple[Complex, Complex]:
        return (self.reactant, self.product)


@dataclass(frozen=True)
class ReactionNetwork:
    species: tuple[Species, ...]
    reactions: tuple[Reaction, ...]

    def __post_init__(self) -> None:
        names = [sp.name for sp in self.species]
        if len(set(names)) != len(names):
            raise ValueError("duplicate species name")
        for pos, sp in enumerate(self.species):
            if sp.index != pos:
                raise ValueError("species indices must match their list position")
        used: set[int] = set()
        seen: set[Reaction] = set()
        for rxn in self.reactions:
            if rxn in seen:
                raise ValueError("duplicate reaction")
            seen.add(rxn)
            for cpx in rxn.complexes():
                for idx, _ in cpx:
                    if idx >= len(self.species):
                        raise ValueError("complex references unknown species index")
                    used.add(idx)
        if used != set(range(len(self.species))):
            missing = sorted(set(range(len(self.species))) - used)
            raise ValueError(
                "species appearing in no reaction: "
                + ", ".join(self.species[i].name for i in missing)
            )

    @property
    def num_species(self) -> int:
        return len(self.species)

    @property
    def num_reactions(self) -> int:
        return len(self.reactions)

    def species_names(self) -> tuple[str, ...]:
        return tuple(sp.name for sp in self.species)

    def complexes(self) -> tuple[Complex, ...]:
        """Distinct complexes in order of first appearance (reactant, product)."""
        out: list[Complex] = []
        seen: set[Complex] = set()
        for rxn in self.reactions:
            for cpx in rxn.complexes():
                if cpx not in seen:
                    seen.add(cpx)
                    out.append(cpx)
        return tuple(out)

    def complex_index(self) -> dict[Complex, int]:
        return {cpx: i for i, cpx in enumerate(self.complexes())}

    def max_coefficient(self) -> int:
        best = 0
        for rxn in self.reactions:
            for cpx in rxn.complexes():
                for _, c in cpx:
                    best = max(best, c)
        return best

    def has_reaction(self, rxn: Reaction) -> bool:
        return rxn in set(self.reactions)

    def __eq__(self, other: object) -> bool:
        # Reaction order is irrelevant; species order (and names) matter.
        if not isinstance(other, ReactionNetwork):
            return NotImplemented
        return self.species == other.species and frozenset(self.reactions) == frozenset(
            other.reactions
        )

    def __hash__(self) -> int:
        return hash((self.species, frozenset(self.reactions)))


def make_network(names: Iterable[str], reactions: Iterable[Reaction]) -> ReactionNetwork:
    species = tuple(Species(i, n) for i, n in enumerate(names))
    return ReactionNetwork(species, tuple(reactions))


def _parse_complex(text: str, names: list[str], name_to_idx: dict[str, int], line: int) -> Complex:
    text = text.strip()
    if not text:
        raise ParseError("empty complex (use 0 for the zero complex)", line=line)
    if text == "0":
        return Complex(())
    coeffs: dict[int, int] = {}
    for term in text.split("+"):
        term = term.strip()
        if term == "0":
            raise ParseError("0 denotes the zero complex and cannot appear in a sum", line=line)
        m = _TERM_RE.match(term)
        if not m:
            raise ParseError(f"cannot parse term {term!r}", line=line)
        coeff = int(m.group(1)) if m.group(1) else 1
        if coeff == 0:
            raise ParseError("zero coefficient is not allowed", line=line)
        if coeff > MAX_COEFFICIENT:
            raise ParseError(
                f"coefficient {coeff} exceeds bound {MAX_COEFFICIENT}",
                kind="coefficient-overflow",
                line=line,
            )
        name = m.group(2)
        if name not in name_to_idx:
            name_to_idx[name] = len(names)
            names.append(name)
        coeffs[name_to_idx[name]] = coeffs.get(name_to_idx[name], 0) + coeff
    return Complex.of(coeffs)


def parse_network(text: str) -> ReactionNetwork:
    """Parse network text into a ReactionNetwork.

    Species are numbered by first appearance.  ``<->`` produces the two
    directed reactions in forward, backward order.
    """
    names: list[str] = []
    name_to_idx: dict[str, int] = {}
    reactions: list[Reaction] = []
    seen: set[Reaction] = set()

    def add(rxn_reactant: Complex, rxn_product: Complex, line: int) -> None:
        if rxn_reactant == rxn_product:
            raise ParseError(
                "trivial reaction: reactant equals product", kind="trivial-reaction", line=line
            )
        rxn = Reaction(rxn_reactant, rxn_product)
        if rxn in seen:
            raise ParseError("duplicate reaction", kind="duplicate-reaction", line=line)
        seen.add(rxn)
        reactions.append(rxn)

    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        if "<->" in line:
            parts = line.split("<->")
            if len(parts) != 2:
                raise ParseError("expected exactly one arrow", line=lineno)
            lhs = _parse_complex(parts[0], names, name_to_idx, lineno)
            rhs = _parse_complex(parts[1], names, name_to_idx, lineno)
            add(lhs, rhs, lineno)
            add(rhs, lhs, lineno)
        elif "->" in line:
            parts = line.split("->")
            if len(parts) != 2:
                raise ParseError("expected exactly one arrow", line=lineno)
            lhs = _parse_complex(parts[0], names, name_to_idx, lineno)
            rhs = _parse_complex(parts[1], names, name_to_idx, lineno)
            add(lhs, rhs, lineno)
        else:
            raise ParseError("missing reaction arrow '->' or '<->'", line=lineno)

    return make_network(names, reactions)


def render_complex(cpx: Complex, names: tuple[str, ...] | list[str]) -> str:
    if cpx.is_zero:
        return "0"
    parts = []
    for idx, coeff in cpx.items:
        parts.append(names[idx] if coeff == 1 else f"{coeff} {names[idx]}")
    return " + ".join(parts)


def render_network(net: ReactionNetwork) -> str:
    """Canonical text: one directed reaction per line, in stored order."""
    names = net.species_names()
    lines = [
        f"{render_complex(r.reactant, names)} -> {render_complex(r.product, names)}"
        for r in net.reactions
    ]
    return "\n".join(lines)
