"""Corpus generation and counterexample mining.

The corpus is a deterministic, isomorphism-deduplicated family of small rings
crossed with strict multiplicative subsets: exhaustive subsets while the ring
is small enough, seeded random closures beyond that. The mining targets probe
the questions that exhaustive checking cannot settle; their findings are
reported as evidence, with replayable witnesses, and only a genuine refutation
of a stated implication counts as a counterexample.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from functools import lru_cache

from .bits import bit, full_mask, members
from .elements import element_sets
from .errors import DegenerateSetError, SpecSyntaxError
from .multsets import MultiplicativeSet, all_mult_subsets, closure
from .rings import (
    FiniteRing,
    classical_sets,
    direct_product,
    ideal_span,
    is_isomorphic,
    make_zn,
    quotient,
    trivial_extension,
    truncated_poly,
)

FAMILIES = ("zn", "products", "truncated_poly", "quotients", "trivial_ext")
TARGETS = ("SVNR_ADDITIVE_CLOSURE", "IDEM_NIL_DECOMP", "HYPOTHESIS_NECESSITY")

EXHAUSTIVE_LIMIT = 12
SAMPLE_DRAWS = 200
MAX_ZN = 24
MAX_PRODUCT_FACTOR = 5


@dataclass(frozen=True)
class CorpusConfig:
    """Deterministic recipe for the (ring, subset) corpus."""

    max_ring_size: int = 25
    families: tuple[str, ...] = FAMILIES
    subsets_mode: str = "exhaustive"  # or "sampled": sample even small rings
    seed: int = 0
    per_family_cap: int = 64

    def __post_init__(self) -> None:
        if self.max_ring_size < 1:
            raise SpecSyntaxError(
                f"max ring size must be positive, got {self.max_ring_size}", 0)
        unknown = set(self.families) - set(FAMILIES)
        if unknown:
            raise SpecSyntaxError(f"unknown corpus families: {sorted(unknown)}", 0)
        if self.subsets_mode not in ("exhaustive", "sampled"):
            raise SpecSyntaxError(
                f"unknown subsets mode {self.subsets_mode!r}", 0)


def std_config(seed: int = 0, max_ring_size: int = 25) -> CorpusConfig:
    return CorpusConfig(max_ring_size=max_ring_size, seed=seed)


def small_config(seed: int = 0) -> CorpusConfig:
    return CorpusConfig(max_ring_size=8, seed=seed)


def _candidate_rings(config: CorpusConfig) -> list[FiniteRing]:
    out: list[FiniteRing] = []

    def admit(family: str, rings: list[FiniteRing]) -> None:
        if family not in config.families:
            return
        kept = [r for r in rings if r.size <= config.max_ring_size]
        out.extend(kept[: config.per_family_cap])

    admit("zn", [make_zn(n) for n in range(1, MAX_ZN + 1)])
    admit("products", [
        direct_product([make_zn(a), make_zn(b)])
        for a in range(1, MAX_PRODUCT_FACTOR + 1)
        for b in range(1, MAX_PRODUCT_FACTOR + 1)
        if a * b <= config.max_ring_size
    ])

    polys: list[FiniteRing] = []
    if 4 <= config.max_ring_size:
        polys.append(truncated_poly(make_zn(2), 2))
    if 16 <= config.max_ring_size:
        polys.append(truncated_poly(direct_product([make_zn(2), make_zn(2)]), 2))
    admit("truncated_poly", polys)

    quots: list[FiniteRing] = []
    if 8 <= config.max_ring_size:
        base = truncated_poly(direct_product([make_zn(2), make_zn(2)]), 2)
        gen = base.element_index("(1,0)*x")
        ring, _ = quotient(base, ideal_span(base, [gen]))
        quots.append(ring)
    admit("quotients", quots)

    trivs: list[FiniteRing] = []
    if 4 <= config.max_ring_size:
        z2 = make_zn(2)
        trivs.append(trivial_extension(z2, ideal_span(z2, [z2.one])))
    admit("trivial_ext", trivs)
    return out


@lru_cache(maxsize=None)
def corpus_rings(config: CorpusConfig) -> tuple[FiniteRing, ...]:
    """Family rings in declaration order, keeping the first of each iso class."""
    kept: list[FiniteRing] = []
    for ring in _candidate_rings(config):
        if not any(is_isomorphic(ring, k) for k in kept):
            kept.append(ring)
    return tuple(kept)


def _sampled_subsets(ring: FiniteRing, config: CorpusConfig,
                     ordinal: int) -> tuple[MultiplicativeSet, ...]:
    rng = random.Random(config.seed * 10007 + ordinal)
    seen: set[int] = set()
    sets: list[MultiplicativeSet] = []
    nonzero = [a for a in range(ring.size) if a != ring.zero]
    if not nonzero:
        return ()
    for _ in range(SAMPLE_DRAWS):
        gens = rng.sample(nonzero, rng.randint(1, min(3, len(nonzero))))
        try:
            sset = closure(ring, gens)
        except DegenerateSetError:
            continue
        if sset.mask not in seen:
            seen.add(sset.mask)
            sets.append(sset)
    sets.sort(key=lambda s: s.mask)
    return tuple(sets)


@lru_cache(maxsize=None)
def enumerate_corpus(
    config: CorpusConfig,
) -> tuple[tuple[FiniteRing, MultiplicativeSet], ...]:
    """The corpus stream: every ring crossed with its subsets, in fixed order."""
    pairs: list[tuple[FiniteRing, MultiplicativeSet]] = []
    for ordinal, ring in enumerate(corpus_rings(config)):
        if config.subsets_mode == "exhaustive" and ring.size <= EXHAUSTIVE_LIMIT:
            subsets = all_mult_subsets(ring)
        else:
            subsets = _sampled_subsets(ring, config, ordinal)
        pairs.extend((ring, s) for s in subsets)
    return tuple(pairs)


# -- findings ----------------------------------------------------------------


@dataclass(frozen=True, eq=False)
class Finding:
    target: str
    ring_spec: str
    s_members: tuple[str, ...]
    verdict: str  # counterexample | positive-instance | none
    evidence: dict[str, str]

    def as_dict(self) -> dict:
        return {
            "target": self.target,
            "ring": self.ring_spec,
            "s_members": list(self.s_members),
            "verdict": self.verdict,
            "evidence": self.evidence,
        }


def _spec_of(ring: FiniteRing) -> str:
    return ring.spec or f"<unnamed ring of size {ring.size}>"


def _names(ring: FiniteRing, mask: int) -> tuple[str, ...]:
    return tuple(ring.names[a] for a in members(mask))


def find_instances(target: str, config: CorpusConfig) -> list[Finding]:
    if target == "SVNR_ADDITIVE_CLOSURE":
        return _svnr_additive_closure(config)
    if target == "IDEM_NIL_DECOMP":
        return _idem_nil_decomp(config)
    if target == "HYPOTHESIS_NECESSITY":
        return _hypothesis_necessity(config)
    raise SpecSyntaxError(f"unknown search target {target!r}", 0)


def _svnr_additive_closure(config: CorpusConfig) -> list[Finding]:
    """Partition pairs by whether the S-vN-regular set is closed under
    addition, with the correlates that the partial results single out."""
    findings = []
    for ring, sset in enumerate_corpus(config):
        es = element_sets(ring, sset)
        vmask = es.s_vnr
        violation = None
        for a in members(vmask):
            row = ring.add[a]
            for b in members(vmask):
                if b < a:
                    continue
                if not vmask >> row[b] & 1:
                    violation = (a, b, row[b])
                    break
            if violation:
                break

        two = ring.add[ring.one][ring.one]
        correlates = {
            "two_is_S_invertible": str(bool(es.s_u >> two & 1)).lower(),
            "weakly_S_reduced": str(
                bool(es.s_nil & ~es.s_zero == 0)).lower(),
        }
        if violation:
            a, b, c = violation
            evidence = {
                "a": ring.names[a],
                "b": ring.names[b],
                "sum": ring.names[c],
                "reason": f"{ring.names[a]}+{ring.names[b]}={ring.names[c]}"
                          " is not S-vnr",
                **correlates,
            }
            findings.append(Finding(
                "SVNR_ADDITIVE_CLOSURE", _spec_of(ring),
                _names(ring, sset.mask), "counterexample", evidence))
        else:
            findings.append(Finding(
                "SVNR_ADDITIVE_CLOSURE", _spec_of(ring),
                _names(ring, sset.mask), "positive-instance", correlates))
    return findings


def _idem_nil_decomp(config: CorpusConfig) -> list[Finding]:
    """Hunt for a ring covered by S-idempotents and S-nilpotents that is not
    S-Boolean, among sets whose only unit is 1 (the open configuration).

    A hit would settle the question negatively, so it is the one verdict
    worth shouting about; covered-and-Boolean pairs are kept as positive
    evidence.
    """
    findings = []
    for ring, sset in enumerate_corpus(config):
        cs = classical_sets(ring)
        if sset.mask & cs.units != bit(ring.one):
            continue
        es = element_sets(ring, sset)
        full = full_mask(ring.size)
        covered = (es.s_idem | es.s_nil) == full
        boolean = es.s_idem == full
        if not covered:
            continue
        if boolean:
            findings.append(Finding(
                "IDEM_NIL_DECOMP", _spec_of(ring), _names(ring, sset.mask),
                "positive-instance",
                {"note": "covered by S-idem and S-nil, and S-Boolean"}))
        else:
            stray = next(iter(members(full & ~es.s_idem)))
            findings.append(Finding(
                "IDEM_NIL_DECOMP", _spec_of(ring), _names(ring, sset.mask),
                "counterexample",
                {"not_S_idempotent": ring.names[stray],
                 "note": "covered by S-idem and S-nil but not S-Boolean"}))
    return findings


def _hypothesis_necessity(config: CorpusConfig) -> list[Finding]:
    """Drop the only-unit-is-1 hypothesis from the idempotent/nilpotent
    cover theorem and record every divergence: rings covered by S-idem and
    plain nilpotents that still fail to be S-Boolean."""
    findings = []
    for ring, sset in enumerate_corpus(config):
        cs = classical_sets(ring)
        if sset.mask & cs.units == bit(ring.one):
            continue  # hypothesis holds; nothing to demonstrate
        es = element_sets(ring, sset)
        full = full_mask(ring.size)
        if (es.s_idem | cs.nil) != full:
            continue
        if es.s_idem == full:
            continue  # still S-Boolean, no divergence
        stray = next(iter(members(full & ~es.s_idem)))
        unit = next(u for u in members(sset.mask & cs.units)
                    if u != ring.one)
        findings.append(Finding(
            "HYPOTHESIS_NECESSITY", _spec_of(ring), _names(ring, sset.mask),
            "positive-instance",
            {"dropped_hypothesis": "S contains no unit besides 1",
             "offending_unit": ring.names[unit],
             "not_S_idempotent": ring.names[stray],
             "note": "covered by S-idem and nilpotents but not S-Boolean"}))
    return findings
