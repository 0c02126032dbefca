"""Run every implemented theorem check across a corpus and tally outcomes.

Each proposition is a named entry so reports and the command line can select
them individually; scopes distinguish checks quantified over (ring, S) pairs
from checks quantified over rings alone.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

from .bits import bit, full_mask, members
from .classify import (
    boolean_decomposition_check,
    classify,
    max_relative_check,
    reduced_equivalences_check,
    s_field_equivalence_check,
    zero_divisor_idempotent_check,
)
from .elements import (
    element_sets,
    inclusion_chain_check,
    multiplicative_closure_check,
    sum_closure_status,
    torsion_intersection_check,
    vnr_characterization_check,
    weak_inverse,
    weakly_reduced_consequence_check,
)
from .errors import SpecSyntaxError
from .ideals import (
    all_ideals,
    ideal_verdict,
    primary_implies_maximal_check,
    sandwich_check,
)
from .localize import (
    artinian_conclusion_check,
    canonical_kernel_check,
    pi_regular_bridge_check,
    vnr_bridge_check,
)
from .multsets import MultiplicativeSet, one_set, units_set
from .result import CheckResult
from .rings import FiniteRing, RingHom, classical_sets, product_projection, quotient
from .search import CorpusConfig, corpus_rings, enumerate_corpus
from .transfer import hom_transfer_check, product_decomposition_check


def _vnr_five_way(ring: FiniteRing, sset: MultiplicativeSet) -> CheckResult:
    for a in range(ring.size):
        result = vnr_characterization_check(ring, sset, a)
        if not result.ok:
            return result
    return CheckResult(True)


def _weak_inverse_unique(ring: FiniteRing, sset: MultiplicativeSet) -> CheckResult:
    es = element_sets(ring, sset)
    for a in members(es.s_vnr):
        inv = weak_inverse(ring, sset, a)
        if inv is None:
            return CheckResult(False, f"no witness for S-vnr {ring.names[a]}")
        if not inv.unique_up_to_s4:
            return CheckResult(
                False, f"weak inverses of {ring.names[a]} differ after s^4")
        if inv.exactly_unique is False:
            return CheckResult(
                False,
                f"regular s but several weak inverses for {ring.names[a]}")
    return CheckResult(True)


def _two_in_su_equiv(ring: FiniteRing, sset: MultiplicativeSet) -> CheckResult:
    status = sum_closure_status(ring, sset)
    if not status.two_in_su:
        return CheckResult(True, "2 not S-invertible", applicable=False)
    if not status.two_term_decomposition.ok:
        return status.two_term_decomposition
    return status.four_term_equivalence


def _class_hierarchy(ring: FiniteRing, sset: MultiplicativeSet) -> CheckResult:
    rep = classify(ring, sset)
    edges = [
        ("uniformly S-Boolean => S-Boolean",
         not rep.uniformly_s_boolean.value or rep.s_boolean),
        ("uniformly S-Boolean => uniformly S-vNr",
         not rep.uniformly_s_boolean.value or rep.uniformly_s_vnr.value),
        ("uniformly S-vNr => uniformly S-pi-regular",
         not rep.uniformly_s_vnr.value or rep.uniformly_s_pi_regular.value),
        ("pi-regular => uniformly S-pi-regular",
         not rep.pi_regular or rep.uniformly_s_pi_regular.value),
        ("Boolean => uniformly S-Boolean",
         not rep.boolean or rep.uniformly_s_boolean.value),
    ]
    for label, holds in edges:
        if not holds:
            return CheckResult(False, f"{label} fails")
    return CheckResult(True)


def _zero_divisor_idempotent(ring: FiniteRing,
                             sset: MultiplicativeSet) -> CheckResult:
    seen_applicable = False
    for s in sset.members():
        result = zero_divisor_idempotent_check(ring, sset, s)
        if result.applicable:
            seen_applicable = True
            if not result.ok:
                return result
    if not seen_applicable:
        return CheckResult(True, "no qualifying s", applicable=False)
    return CheckResult(True)


def _s_max_implies_s_prime(ring: FiniteRing,
                           sset: MultiplicativeSet) -> CheckResult:
    for ideal in all_ideals(ring):
        verdict = ideal_verdict(ring, sset, ideal)
        if not verdict.disjoint_from_s:
            continue
        if verdict.s_maximal is not None and verdict.s_prime is None:
            names = "{" + ", ".join(ring.names[x] for x in ideal.members()) + "}"
            return CheckResult(False, f"S-maximal ideal {names} not S-prime")
    return CheckResult(True)


def _sandwich(ring: FiniteRing, sset: MultiplicativeSet) -> CheckResult:
    seen_applicable = False
    for ideal in all_ideals(ring):
        result = sandwich_check(ring, sset, ideal)
        if result.applicable:
            seen_applicable = True
            if not result.ok:
                return result
    if not seen_applicable:
        return CheckResult(True, "no qualifying (s, ideal)", applicable=False)
    return CheckResult(True)


@lru_cache(maxsize=None)
def _transfer_homs(ring: FiniteRing) -> tuple[RingHom, ...]:
    """Quotients by every proper ideal, plus factor projections."""
    full = full_mask(ring.size)
    homs = [quotient(ring, ideal)[1]
            for ideal in all_ideals(ring) if ideal.mask != full]
    if ring.factors:
        homs.extend(product_projection(ring, i)
                    for i in range(len(ring.factors)))
    return tuple(homs)


def _hom_transfer(ring: FiniteRing, sset: MultiplicativeSet) -> CheckResult:
    seen_applicable = False
    for hom in _transfer_homs(ring):
        result = hom_transfer_check(hom, sset)
        if result.applicable:
            seen_applicable = True
            if not result.ok:
                target = hom.target.spec or f"size-{hom.target.size} image"
                return CheckResult(False, f"onto {target}: {result.detail}")
    if not seen_applicable:
        return CheckResult(True, "no hom keeps S strict", applicable=False)
    return CheckResult(True)


def _classical_collapse(ring: FiniteRing) -> CheckResult:
    cs = classical_sets(ring)
    at_one = element_sets(ring, one_set(ring))
    expectations = [
        ("u", at_one.s_u, cs.units),
        ("idem", at_one.s_idem, cs.idem),
        ("vnr", at_one.s_vnr, cs.vnr),
        ("pireg", at_one.s_pireg, cs.pireg),
        ("nil", at_one.s_nil, cs.nil),
        ("zero", at_one.s_zero, bit(ring.zero)),
    ]
    for label, got, want in expectations:
        if got != want:
            return CheckResult(False, f"S={{1}} does not collapse for {label}")
    at_units = element_sets(ring, units_set(ring))
    if at_units.s_idem != cs.vnr:
        return CheckResult(False, "S=u(R) idempotent set is not vnr(R)")
    return CheckResult(True)


PROPOSITIONS: tuple[tuple[str, str, object], ...] = (
    ("inclusion_chain", "pair", inclusion_chain_check),
    ("mult_closure", "pair", multiplicative_closure_check),
    ("torsion_intersection", "pair", torsion_intersection_check),
    ("vnr_five_way", "pair", _vnr_five_way),
    ("weak_inverse_unique", "pair", _weak_inverse_unique),
    ("two_in_su_equiv", "pair", _two_in_su_equiv),
    ("weakly_reduced_consequence", "pair", weakly_reduced_consequence_check),
    ("reduced_equivalences", "pair", reduced_equivalences_check),
    ("s_field_equiv", "pair", s_field_equivalence_check),
    ("class_hierarchy", "pair", _class_hierarchy),
    ("boolean_decomposition", "pair", boolean_decomposition_check),
    ("zero_divisor_idempotent", "pair", _zero_divisor_idempotent),
    ("primary_implies_maximal", "pair", primary_implies_maximal_check),
    ("s_max_implies_s_prime", "pair", _s_max_implies_s_prime),
    ("sandwich", "pair", _sandwich),
    ("hom_transfer", "pair", _hom_transfer),
    ("product_decomposition", "pair", product_decomposition_check),
    ("localize_canonical_kernel", "pair", canonical_kernel_check),
    ("localize_vnr_bridge", "pair", vnr_bridge_check),
    ("localize_pi_bridge", "pair", pi_regular_bridge_check),
    ("artinian_conclusion", "pair", artinian_conclusion_check),
    ("max_intersections", "ring", max_relative_check),
    ("classical_collapse", "ring", _classical_collapse),
)

PROPOSITION_IDS = tuple(name for name, _, _ in PROPOSITIONS)


@dataclass(frozen=True)
class Violation:
    ring_spec: str
    s_members: tuple[str, ...] | None
    detail: str

    def as_dict(self) -> dict:
        out = {"ring": self.ring_spec}
        if self.s_members is not None:
            out["s"] = list(self.s_members)
        out["detail"] = self.detail
        return out


@dataclass(frozen=True)
class PropOutcome:
    prop: str
    scope: str
    checked: int
    not_applicable: int
    violations: tuple[Violation, ...]

    @property
    def ok(self) -> bool:
        return not self.violations

    def as_dict(self) -> dict:
        return {
            "id": self.prop,
            "scope": self.scope,
            "checked": self.checked,
            "not_applicable": self.not_applicable,
            "violations": [v.as_dict() for v in self.violations],
        }


@dataclass(frozen=True)
class VerifyReport:
    corpus: str
    ring_count: int
    pair_count: int
    outcomes: tuple[PropOutcome, ...]

    @property
    def ok(self) -> bool:
        return all(o.ok for o in self.outcomes)

    def as_dict(self) -> dict:
        return {
            "corpus": self.corpus,
            "rings": self.ring_count,
            "pairs": self.pair_count,
            "ok": self.ok,
            "propositions": [o.as_dict() for o in self.outcomes],
        }


def _spec_of(ring: FiniteRing) -> str:
    return ring.spec or f"<unnamed ring of size {ring.size}>"


def run_verification(config: CorpusConfig,
                     props: tuple[str, ...] | None = None,
                     corpus_label: str = "custom") -> VerifyReport:
    selected = PROPOSITIONS if props is None else tuple(
        entry for entry in PROPOSITIONS if entry[0] in props)
    if props is not None:
        unknown = set(props) - set(PROPOSITION_IDS)
        if unknown:
            raise SpecSyntaxError(
                f"unknown propositions: {', '.join(sorted(unknown))}", 0)

    rings = corpus_rings(config)
    pairs = enumerate_corpus(config)

    outcomes = []
    for name, scope, fn in selected:
        checked = skipped = 0
        violations: list[Violation] = []
        if scope == "ring":
            for ring in rings:
                result: CheckResult = fn(ring)
                if not result.applicable:
                    skipped += 1
                    continue
                checked += 1
                if not result.ok:
                    violations.append(
                        Violation(_spec_of(ring), None, result.detail))
        else:
            for ring, sset in pairs:
                result = fn(ring, sset)
                if not result.applicable:
                    skipped += 1
                    continue
                checked += 1
                if not result.ok:
                    snames = tuple(ring.names[x] for x in members(sset.mask))
                    violations.append(
                        Violation(_spec_of(ring), snames, result.detail))
        outcomes.append(PropOutcome(name, scope, checked, skipped,
                                    tuple(violations)))
    return VerifyReport(corpus_label, len(rings), len(pairs), tuple(outcomes))
