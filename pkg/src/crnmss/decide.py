"""Decision procedures for multistationarity and the analyze pipeline.

Every procedure either produces a certificate that survives exact
rational re-checking or declines; absence of a certificate is never
spun into a "not multistationary" verdict.  The pipeline order puts
cheap structural preclusions first and numeric search last.
"""

from __future__ import annotations

import itertools
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Iterator, Sequence

from . import families
from .embedding import (
    EmbeddingWitness,
    SquareEmbeddedNetwork,
    enumerate_sens,
    find_embedding,
    is_cfstr,
    is_fully_open,
    non_flow_subnetwork,
    orientation,
    sen_is_relevant,
)
from .linalg import det_int, rank_int, submatrix
from .lp import LPResult, solve_feasibility
from .network import ReactionNetwork, render_complex, render_network
from .structure import StoichData, deficiency, is_weakly_reversible, stoich

MULTISTATIONARY = "MULTISTATIONARY"
NOT_MULTISTATIONARY = "NOT_MULTISTATIONARY"
NO_POSITIVE_STEADY_STATES = "NO_POSITIVE_STEADY_STATES"
INCONCLUSIVE = "INCONCLUSIVE"

SignVector = tuple[int, ...]


class LimitExceeded(RuntimeError):
    """An enumeration was refused because its size bound was exceeded."""


def to_jsonable(value):
    """Recursively turn Fractions into strings for JSON output."""
    if isinstance(value, Fraction):
        return str(value)
    if isinstance(value, dict):
        return {k: to_jsonable(v) for k, v in value.items()}
    if isinstance(value, (list, tuple)):
        return [to_jsonable(v) for v in value]
    return value


@dataclass(frozen=True)
class Verdict:
    status: str
    certificate: dict | None
    notes: tuple[str, ...] = ()

    def to_json(self) -> dict:
        return {
            "status": self.status,
            "certificate": to_jsonable(self.certificate),
            "notes": list(self.notes),
        }


def _sen_description(sen: SquareEmbeddedNetwork) -> dict:
    names = sen.host.species_names()
    return {
        "reaction_indices": list(sen.reaction_indices),
        "species": list(sen.species_names()),
        "reactions": [
            f"{render_complex(r.reactant, names)} -> {render_complex(r.product, names)}"
            for r in sen.reactions
        ],
        "orientation": orientation(sen),
    }


# ---------------------------------------------------------------------------
# deficiency theorems


def check_deficiency_zero(net: ReactionNetwork) -> Verdict | None:
    report = deficiency(net)
    if not report.applicable or report.total != 0:
        return None
    if is_weakly_reversible(net):
        return Verdict(
            NOT_MULTISTATIONARY,
            {
                "kind": "deficiency-zero",
                "deficiency": 0,
                "weakly_reversible": True,
            },
            notes=(
                "deficiency zero and weakly reversible: exactly one positive steady "
                "state per compatibility class, locally asymptotically stable",
            ),
        )
    return Verdict(
        NO_POSITIVE_STEADY_STATES,
        {
            "kind": "deficiency-zero",
            "deficiency": 0,
            "weakly_reversible": False,
        },
        notes=("deficiency zero and not weakly reversible: no positive steady state",),
    )


def check_deficiency_one(net: ReactionNetwork) -> Verdict | None:
    report = deficiency(net)
    if not report.applicable:
        return None
    assert report.per_class is not None and report.total is not None
    if any(d > 1 for d in report.per_class):
        return None
    if sum(report.per_class) != report.total:
        return None
    return Verdict(
        NOT_MULTISTATIONARY,
        {
            "kind": "deficiency-one",
            "deficiency": report.total,
            "per_class": list(report.per_class),
        },
        notes=("deficiency one conditions hold: at most one positive steady state per class",),
    )


# ---------------------------------------------------------------------------
# injectivity


@dataclass(frozen=True)
class InjectivityReport:
    method: str  # "minors" | "sign-vectors" | "cfstr-sen"
    status: str  # "injective" | "not-injective" | "degenerate"
    sign: int | None = None
    conflict: tuple | None = None
    negative_sen: SquareEmbeddedNetwork | None = None
    common_sign_vector: SignVector | None = None
    notes: tuple[str, ...] = ()

    @property
    def injective(self) -> bool:
        return self.status == "injective"


def injectivity_minors(net: ReactionNetwork) -> InjectivityReport:
    """All rank-size minor products of (Gamma, reactant matrix) share a sign.

    Scans index pairs lexicographically and stops at the first conflict.
    The all-zero outcome is reported as "degenerate" and treated as not
    injective by callers.
    """
    data = stoich(net)
    k = data.rank
    gamma = [list(row) for row in data.stoich_matrix]
    reactant = [list(row) for row in data.reactant_matrix]
    s, r = net.num_species, net.num_reactions
    first: tuple | None = None
    sign = 0
    for species_subset in itertools.combinations(range(s), k):
        for rxn_subset in itertools.combinations(range(r), k):
            d1 = det_int(submatrix(gamma, species_subset, rxn_subset))
            if d1 == 0:
                continue
            d2 = det_int(submatrix(reactant, rxn_subset, species_subset))
            if d2 == 0:
                continue
            value = d1 * d2
            cur = 1 if value > 0 else -1
            if sign == 0:
                sign = cur
                first = (species_subset, rxn_subset, value)
            elif cur != sign:
                return InjectivityReport(
                    "minors",
                    "not-injective",
                    conflict=(first, (species_subset, rxn_subset, value)),
                )
    if sign == 0:
        return InjectivityReport(
            "minors",
            "degenerate",
            notes=("every rank-size minor product vanishes",),
        )
    return InjectivityReport("minors", "injective", sign=sign)


def _sign_patterns(length: int) -> Iterator[SignVector]:
    """Nonzero sign vectors with first nonzero entry +1 (one per +- pair)."""
    for pattern in itertools.product((1, -1, 0), repeat=length):
        for v in pattern:
            if v == 1:
                yield pattern
                break
            if v == -1:
                break


def _sign_constraints(pattern: SignVector, rows: Sequence[Sequence[int]] | None = None):
    """Constraints forcing sign(x_i) = pattern_i (scale-normalized to >= 1).

    With ``rows`` given, the constraints apply to (rows . x) instead.
    """
    cons = []
    n = len(pattern) if rows is None else len(rows[0])
    for i, want in enumerate(pattern):
        coeffs = [0] * n
        if rows is None:
            coeffs[i] = 1
        else:
            coeffs = list(rows[i])
        if want > 0:
            cons.append((coeffs, ">=", 1))
        elif want < 0:
            cons.append((coeffs, "<=", -1))
        else:
            cons.append((coeffs, "==", 0))
    return cons


def injectivity_signvectors(net: ReactionNetwork, limit: int = 5) -> InjectivityReport:
    """Brute-force sign-vector form of the injectivity condition.

    The network fails injectivity exactly when some nonzero x whose sign
    pattern occurs in the stoichiometric subspace has sign(Mx) realizable
    in ker(Gamma).  The shared sign vector may be zero (x is what must be
    nonzero); that case is the counterpart of the all-minors-zero outcome
    of the determinant form.  Every sign pattern membership is decided by
    exact LP.  Exponential in species and reaction counts, hence the size
    limit.
    """
    s, r = net.num_species, net.num_reactions
    if s > limit or r > limit:
        raise LimitExceeded(
            f"sign vector enumeration limited to {limit} species and reactions"
        )
    data = stoich(net)
    gamma_rows = [list(row) for row in data.stoich_matrix]  # s x r
    reactant_rows = [list(row) for row in data.reactant_matrix]  # r x s

    gamma_eq = [(row, "==", 0) for row in gamma_rows]

    def kernel_realizable(tau: SignVector) -> bool:
        cons = list(gamma_eq) + _sign_constraints(tau)
        return solve_feasibility(r, cons, free_vars=range(r)).feasible

    def subspace_realizable(sigma_pat: SignVector) -> bool:
        cons = _sign_constraints(sigma_pat, rows=gamma_rows)
        return solve_feasibility(r, cons, free_vars=range(r)).feasible

    # sign patterns of kernel vectors; negating the witness x mirrors both
    # patterns at once, so half the tau candidates suffice provided the
    # sigma candidates below run over both halves
    kernel_taus: list[SignVector] = [(0,) * r]
    if data.rank < r:
        kernel_taus.extend(tau for tau in _sign_patterns(r) if kernel_realizable(tau))

    # nonzero sign patterns of the stoichiometric subspace, both halves
    subspace_signs: list[SignVector] = []
    for pat in _sign_patterns(s):
        if data.rank == s or subspace_realizable(pat):
            subspace_signs.append(pat)
            subspace_signs.append(tuple(-v for v in pat))

    def image_sign_possible(tau: SignVector, sigma_pat: SignVector) -> bool:
        # reactant matrix is nonnegative: a quick per-row possibility filter
        for k_row in range(r):
            pos = any(
                reactant_rows[k_row][i] > 0 and sigma_pat[i] > 0 for i in range(s)
            )
            neg = any(
                reactant_rows[k_row][i] > 0 and sigma_pat[i] < 0 for i in range(s)
            )
            if pos and neg:
                continue
            forced = 1 if pos else (-1 if neg else 0)
            if tau[k_row] != forced:
                return False
        return True

    for tau in kernel_taus:
        for sigma_pat in subspace_signs:
            if not image_sign_possible(tau, sigma_pat):
                continue
            cons = _sign_constraints(sigma_pat) + _sign_constraints(
                tau, rows=reactant_rows
            )
            if solve_feasibility(s, cons, free_vars=range(s)).feasible:
                return InjectivityReport(
                    "sign-vectors", "not-injective", common_sign_vector=tau
                )
    return InjectivityReport("sign-vectors", "injective")


def _map_maybe_parallel(fn, items: Iterable, threads: int):
    if threads and threads > 1:
        with ThreadPoolExecutor(max_workers=threads) as pool:
            yield from pool.map(fn, items)
    else:
        yield from map(fn, items)


def cfstr_injectivity(net: ReactionNetwork, threads: int = 1) -> InjectivityReport:
    """Injectivity of a CFSTR via relevant square embedded networks.

    The CFSTR is injective iff no relevant square embedded network of its
    non-flow subnetwork is negatively oriented; the first negative one in
    enumeration order is returned as the counterexample.
    """
    if not is_cfstr(net):
        raise ValueError("cfstr_injectivity requires every species to have an outflow")
    g0 = non_flow_subnetwork(net)

    def examine(sen: SquareEmbeddedNetwork):
        if not sen_is_relevant(sen)[0]:
            return None
        return sen if orientation(sen) < 0 else None

    for k in range(1, min(g0.num_species, g0.num_reactions) + 1):
        for hit in _map_maybe_parallel(examine, enumerate_sens(g0, k), threads):
            if hit is not None:
                return InjectivityReport("cfstr-sen", "not-injective", negative_sen=hit)
    return InjectivityReport("cfstr-sen", "injective")


# ---------------------------------------------------------------------------
# positive dependence and subnetwork lifting


def positive_dependence(net: ReactionNetwork) -> LPResult:
    """Is there alpha > 0 with Gamma alpha = 0?  (Normalized to alpha >= 1.)"""
    data = stoich(net)
    r = net.num_reactions
    cons = [(list(row), "==", 0) for row in data.stoich_matrix]
    for i in range(r):
        coeffs = [0] * r
        coeffs[i] = 1
        cons.append((coeffs, ">=", 1))
    return solve_feasibility(r, cons)


def subnetwork_lift_obstruction(
    host: ReactionNetwork, sub: ReactionNetwork
) -> Verdict | None:
    """Preclusion of positive steady states of ``host`` via a subnetwork.

    When the subnetwork spans a strictly smaller stoichiometric subspace
    and no positive combination of the removed reaction vectors lies in
    that subspace, the host has no positive steady state at all.
    """
    name_to_host = {sp.name: sp.index for sp in host.species}
    for sp in sub.species:
        if sp.name not in name_to_host:
            raise ValueError(f"subnetwork species {sp.name} missing from host")
    lift = {sp.index: name_to_host[sp.name] for sp in sub.species}
    host_reactions = set(host.reactions)
    sub_in_host = []
    for rxn in sub.reactions:
        mapped = type(rxn)(rxn.reactant.rename(lift), rxn.product.rename(lift))
        if mapped not in host_reactions:
            raise ValueError("sub is not a subnetwork of host (reaction mismatch)")
        sub_in_host.append(mapped)
    removed = [r for r in host.reactions if r not in set(sub_in_host)]
    if not removed:
        return None
    s = host.num_species

    def vec(rxn) -> list[int]:
        rv, pv = rxn.reactant.vector(s), rxn.product.vector(s)
        return [pv[i] - rv[i] for i in range(s)]

    sub_vectors = [vec(rxn) for rxn in sub_in_host]
    host_rank = stoich(host).rank
    sub_rank = rank_int([[v[i] for v in sub_vectors] for i in range(s)]) if sub_vectors else 0
    if sub_rank == host_rank:
        return None
    t = len(removed)
    g = len(sub_vectors)
    removed_vectors = [vec(rxn) for rxn in removed]
    cons = []
    for i in range(s):
        coeffs = [rv[i] for rv in removed_vectors] + [-sv[i] for sv in sub_vectors]
        cons.append((coeffs, "==", 0))
    for j in range(t):
        coeffs = [0] * (t + g)
        coeffs[j] = 1
        cons.append((coeffs, ">=", 1))
    result = solve_feasibility(t + g, cons, free_vars=range(t, t + g))
    if result.feasible:
        return None
    removed_idx = [i for i, rxn in enumerate(host.reactions) if rxn in set(removed)]
    return Verdict(
        NO_POSITIVE_STEADY_STATES,
        {
            "kind": "subnetwork-lift-obstruction",
            "removed_reactions": removed_idx,
            "subnetwork_rank": sub_rank,
            "host_rank": host_rank,
        },
        notes=(
            "no positive combination of the removed reaction vectors lies in the "
            "subnetwork's stoichiometric subspace",
        ),
    )


# ---------------------------------------------------------------------------
# one-reaction classification


@dataclass(frozen=True)
class OneReactionClassification:
    reactant: tuple[int, ...]
    product: tuple[int, ...]
    reversible: bool
    forward_sum: int
    backward_sum: int
    multistationary: bool

    def __bool__(self) -> bool:
        return self.multistationary


def classify_one_nonflow_fully_open(
    a: Sequence[int], b: Sequence[int], reversible: bool = False
) -> OneReactionClassification:
    """Multistationarity of the fully open network with one non-flow reaction.

    The irreversible network is multistationary iff the reactant
    coefficients of species consumed net-negatively... more precisely iff
    sum of a_i over {i : b_i > a_i} exceeds one; the reversible variant
    also accepts the mirrored sum.
    """
    av, bv = tuple(int(x) for x in a), tuple(int(x) for x in b)
    if len(av) != len(bv) or not av:
        raise ValueError("coefficient vectors must share a positive length")
    if any(x < 0 for x in av + bv):
        raise ValueError("coefficients must be non-negative")
    if av == bv:
        raise ValueError("trivial reaction: reactant equals product")
    forward = sum(ai for ai, bi in zip(av, bv) if bi > ai)
    backward = sum(bi for ai, bi in zip(av, bv) if ai > bi)
    mss = forward > 1 or (reversible and backward > 1)
    return OneReactionClassification(av, bv, reversible, forward, backward, mss)


def _single_nonflow_shape(net: ReactionNetwork):
    """(a, b, reversible) when the non-flow part is one reaction or one
    reversible pair, else None."""
    nonflow = [r for r in net.reactions if not r.is_flow]
    s = net.num_species
    if len(nonflow) == 1:
        rxn = nonflow[0]
        return tuple(rxn.reactant.vector(s)), tuple(rxn.product.vector(s)), False
    if len(nonflow) == 2 and nonflow[0] == nonflow[1].reversed_():
        rxn = nonflow[0]
        return tuple(rxn.reactant.vector(s)), tuple(rxn.product.vector(s)), True
    return None


# ---------------------------------------------------------------------------
# determinant optimization


@dataclass(frozen=True)
class DetOptCertificate:
    sen: SquareEmbeddedNetwork
    eta: tuple[Fraction, ...]
    orientation: int

    def to_json(self) -> dict:
        body = _sen_description(self.sen)
        body["kind"] = "det-opt"
        body["eta"] = to_jsonable(list(self.eta))
        return body


def det_opt_condition(
    sen: SquareEmbeddedNetwork, eta: Sequence[Fraction | int]
) -> bool:
    """Exact check: orientation < 0, eta > 0, and the eta-combination of
    reactant-minus-product vectors is componentwise positive."""
    vals = [Fraction(e) for e in eta]
    if len(vals) != len(sen.reactions):
        return False
    if any(e <= 0 for e in vals):
        return False
    if orientation(sen) >= 0:
        return False
    for i in sen.species_indices:
        total = Fraction(0)
        for e, rxn in zip(vals, sen.reactions):
            total += e * (rxn.reactant.coeff(i) - rxn.product.coeff(i))
        if total <= 0:
            return False
    return True


def determinant_optimization(
    net: ReactionNetwork, threads: int = 1
) -> DetOptCertificate | None:
    """Search for a negatively oriented full-size SEN of the non-flow
    subnetwork whose reaction vectors admit a positive combination with
    positive species totals; such a certificate makes the fully open
    extension multistationary."""
    if not is_cfstr(net):
        raise ValueError("determinant optimization requires a CFSTR")
    s = net.num_species
    g0 = non_flow_subnetwork(net)
    if g0.num_species != s or g0.num_reactions < s:
        return None

    def examine(sen: SquareEmbeddedNetwork):
        value = orientation(sen)
        if value >= 0:
            return None
        k = len(sen.reactions)
        cons = []
        for i in sen.species_indices:
            coeffs = [rxn.reactant.coeff(i) - rxn.product.coeff(i) for rxn in sen.reactions]
            cons.append((coeffs, ">=", 1))
        for j in range(k):
            coeffs = [0] * k
            coeffs[j] = 1
            cons.append((coeffs, ">=", 1))
        result = solve_feasibility(k, cons)
        if not result.feasible:
            return None
        assert result.witness is not None
        return DetOptCertificate(sen, result.witness, value)

    for cert in _map_maybe_parallel(examine, enumerate_sens(g0, s), threads):
        if cert is not None:
            assert det_opt_condition(cert.sen, cert.eta)
            return cert
    return None


# ---------------------------------------------------------------------------
# atom database search


def _atom_database(max_coeff: int) -> Iterator[tuple[str, ReactionNetwork]]:
    for idx, atom in families.load_atoms():
        yield f"2rxn-{idx}", atom
    for m in range(2, max_coeff + 1):
        for n in range(m + 1, max_coeff + 1):
            yield f"G({m},{n})", families.generate(families.FamilySpec("G", m, n))
    for m in range(2, max_coeff + 1):
        for n in range(2, max_coeff + 1):
            yield f"H({m},{n})", families.generate(families.FamilySpec("H", m, n))


@dataclass(frozen=True)
class AtomMatch:
    atom_id: str
    atom: ReactionNetwork
    witness: EmbeddingWitness

    def to_json(self) -> dict:
        return {
            "atom": self.atom_id,
            "atom_network": render_network(self.atom),
            "species_map": list(self.witness.species_map),
            "reaction_map": list(self.witness.reaction_map),
        }


def atom_db_matches(net: ReactionNetwork) -> Iterator[AtomMatch]:
    """Stream every known multistationary atom embedded in ``net``.

    The parametric families are bounded by the maximum stoichiometric
    coefficient of the query because restriction never increases
    coefficients.
    """
    max_coeff = net.max_coefficient()
    for atom_id, atom in _atom_database(max_coeff):
        witness = find_embedding(atom, net)
        if witness is not None:
            yield AtomMatch(atom_id, atom, witness)


def atom_db_search(net: ReactionNetwork) -> AtomMatch | None:
    """First embedded atom in database order, or None."""
    return next(atom_db_matches(net), None)


# ---------------------------------------------------------------------------
# the pipeline


DEFAULT_STAGES = (
    "positive-dependence",
    "deficiency-zero",
    "deficiency-one",
    "injectivity",
    "one-reaction",
    "det-opt",
    "atom-search",
    "numeric",
)


@dataclass(frozen=True)
class AnalyzeOptions:
    stages: tuple[str, ...] = DEFAULT_STAGES
    numeric: bool = False
    budget: int = 200
    seed: int = 0
    threads: int = 1


@dataclass
class AnalysisResult:
    verdict: Verdict
    witness: object | None = None  # SteadyStateWitness when numeric search concluded


def analyze(net: ReactionNetwork, options: AnalyzeOptions | None = None) -> AnalysisResult:
    """Run the decision pipeline; first conclusive stage wins."""
    opts = options or AnalyzeOptions()
    notes: list[str] = []

    for stage in opts.stages:
        if stage == "positive-dependence":
            dep = positive_dependence(net)
            if not dep.feasible:
                return AnalysisResult(
                    Verdict(
                        NO_POSITIVE_STEADY_STATES,
                        {"kind": "positive-dependence-failure"},
                        notes=tuple(
                            notes
                            + [
                                "the reaction vectors admit no strictly positive "
                                "linear dependence, so the right-hand side never vanishes "
                                "at positive concentrations"
                            ]
                        ),
                    )
                )
            notes.append("positive dependence holds")
        elif stage == "deficiency-zero":
            verdict = check_deficiency_zero(net)
            if verdict is not None:
                return AnalysisResult(
                    Verdict(verdict.status, verdict.certificate, tuple(notes) + verdict.notes)
                )
            report = deficiency(net)
            if not report.applicable:
                notes.append(f"deficiency formula not applicable: {report.reason}")
            else:
                notes.append(f"deficiency {report.total}, not zero")
        elif stage == "deficiency-one":
            verdict = check_deficiency_one(net)
            if verdict is not None:
                return AnalysisResult(
                    Verdict(verdict.status, verdict.certificate, tuple(notes) + verdict.notes)
                )
            report = deficiency(net)
            if report.applicable:
                assert report.per_class is not None
                if any(d > 1 for d in report.per_class):
                    notes.append("deficiency one theorem: some class deficiency exceeds one")
                else:
                    notes.append(
                        "deficiency one theorem: class deficiencies "
                        f"{list(report.per_class)} do not sum to {report.total}"
                    )
        elif stage == "injectivity":
            if is_cfstr(net):
                report = cfstr_injectivity(net, threads=opts.threads)
                if report.injective:
                    return AnalysisResult(
                        Verdict(
                            NOT_MULTISTATIONARY,
                            {"kind": "injectivity-cfstr"},
                            tuple(notes)
                            + (
                                "every relevant square embedded network of the non-flow "
                                "subnetwork has non-negative orientation",
                            ),
                        )
                    )
                assert report.negative_sen is not None
                notes.append(
                    "injectivity fails: negatively oriented relevant square embedded "
                    f"network {_sen_description(report.negative_sen)['reactions']}"
                )
            else:
                report = injectivity_minors(net)
                if report.injective:
                    return AnalysisResult(
                        Verdict(
                            NOT_MULTISTATIONARY,
                            {"kind": "injectivity-minors", "sign": report.sign},
                            tuple(notes)
                            + ("all rank-size minor products share one sign",),
                        )
                    )
                if report.status == "degenerate":
                    notes.append(
                        "injectivity degenerate: every rank-size minor product vanishes; "
                        "treated as not injective"
                    )
                else:
                    notes.append("injectivity fails: minor products of both signs exist")
        elif stage == "one-reaction":
            shape = _single_nonflow_shape(net)
            if shape is not None and is_fully_open(net):
                a, b, rev = shape
                cls = classify_one_nonflow_fully_open(a, b, rev)
                cert = {
                    "kind": "one-reaction-formula",
                    "reactant": list(cls.reactant),
                    "product": list(cls.product),
                    "reversible": cls.reversible,
                    "forward_sum": cls.forward_sum,
                    "backward_sum": cls.backward_sum,
                }
                status = MULTISTATIONARY if cls.multistationary else NOT_MULTISTATIONARY
                return AnalysisResult(Verdict(status, cert, tuple(notes)))
        elif stage == "det-opt":
            if is_cfstr(net):
                cert = determinant_optimization(net, threads=opts.threads)
                if cert is not None:
                    if is_fully_open(net):
                        return AnalysisResult(
                            Verdict(MULTISTATIONARY, cert.to_json(), tuple(notes))
                        )
                    notes.append(
                        "determinant optimization certifies the fully open extension "
                        "is multistationary (network itself is not fully open)"
                    )
                else:
                    notes.append("determinant optimization found no certificate")
        elif stage == "atom-search":
            if is_fully_open(net):
                match = atom_db_search(net)
                if match is not None:
                    cert = match.to_json()
                    cert["kind"] = "atom-embedding"
                    return AnalysisResult(Verdict(MULTISTATIONARY, cert, tuple(notes)))
                notes.append("no known multistationary atom embeds")
            else:
                notes.append("atom search skipped: network is not fully open")
        elif stage == "numeric":
            if not opts.numeric:
                continue
            if not is_fully_open(net):
                notes.append("numeric search skipped: network is not fully open")
                continue
            from .witness import rate_search

            found = rate_search(net, budget=opts.budget, seed=opts.seed)
            if found is not None and found.count_nondegenerate() >= 2:
                cert = {
                    "kind": "numeric-witness",
                    "states": len(found.states),
                    "nondegenerate_states": found.count_nondegenerate(),
                }
                return AnalysisResult(
                    Verdict(MULTISTATIONARY, cert, tuple(notes)), witness=found
                )
            notes.append(
                f"numeric search found no multiple steady states within budget {opts.budget}"
            )
        else:
            raise ValueError(f"unknown pipeline stage {stage!r}")

    return AnalysisResult(Verdict(INCONCLUSIVE, None, tuple(notes)))
