"""Ring-level S-classes and the ring-level theorem checks.

A uniform flag is never a bare boolean: when true it carries the witness s,
and when false it carries one failing element for every candidate s, so a
report can always be replayed against the tables.
"""

from __future__ import annotations

from dataclasses import dataclass

from .bits import bit, full_mask, members
from .elements import ElementSets, element_sets
from .ideals import all_ideals, ideal_verdict
from .multsets import MultiplicativeSet
from .result import CheckResult
from .rings import FiniteRing, Ideal, classical_sets


@dataclass(frozen=True)
class UniformFlag:
    value: bool
    witness: int | None = None
    counterexamples: tuple[tuple[int, int], ...] = ()

    def __bool__(self) -> bool:
        return self.value


@dataclass(frozen=True, eq=False)
class ClassificationReport:
    ring: FiniteRing
    sset: MultiplicativeSet
    sets: ElementSets
    boolean: bool
    vnr: bool
    pi_regular: bool
    s_boolean: bool
    uniformly_s_boolean: UniformFlag
    uniformly_s_vnr: UniformFlag
    uniformly_s_pi_regular: UniformFlag
    pi_exponents: tuple[int, ...]
    s_field: UniformFlag
    s_integral_domain: UniformFlag
    s_reduced: bool
    weakly_s_reduced: bool
    uniformly_s_reduced: UniformFlag


def _uniform(sets: ElementSets, required: int, extract) -> UniformFlag:
    """Find the least s whose extracted mask covers ``required``."""
    failures = []
    for rec in sets.per_s:
        stray = required & ~extract(rec)
        if not stray:
            return UniformFlag(True, witness=rec.s)
        failures.append((rec.s, next(iter(members(stray)))))
    return UniformFlag(False, counterexamples=tuple(failures))


def classify(ring: FiniteRing, sset: MultiplicativeSet) -> ClassificationReport:
    if not sset.strict:
        raise ValueError("classification is defined for strict sets only")
    es = element_sets(ring, sset)
    cs = classical_sets(ring)
    full = full_mask(ring.size)
    mul = ring.mul

    non_idem = full & ~cs.idem
    u_bool = _uniform(es, non_idem, lambda r: r.s_idem)
    u_vnr = _uniform(es, full, lambda r: r.s_vnr)
    u_preg = _uniform(es, full, lambda r: r.s_pireg)

    exponents: tuple[int, ...] = ()
    if u_preg.value:
        s = u_preg.witness
        exps = []
        for a in range(ring.size):
            prow = ring.power_rows[a]
            srow = mul[s]
            n = next(m for m in range(1, 2 * ring.size + 1)
                     if ring.row_masks[prow[2 * m - 1]] >> srow[prow[m - 1]] & 1)
            exps.append(n)
        exponents = tuple(exps)

    s_field = _uniform(es, full, lambda r: r.s_u | r.s_zero)

    zero_pairs = [(a, b) for a in range(ring.size) for b in range(ring.size)
                  if mul[a][b] == ring.zero]
    sid_failures = []
    s_domain = None
    for rec in es.per_s:
        bad = next(((a, b) for a, b in zero_pairs
                    if not rec.s_zero >> a & 1 and not rec.s_zero >> b & 1), None)
        if bad is None:
            s_domain = UniformFlag(True, witness=rec.s)
            break
        sid_failures.append((rec.s, bad[0]))
    if s_domain is None:
        s_domain = UniformFlag(False, counterexamples=tuple(sid_failures))

    kill_failures = []
    u_reduced = None
    for s in sset.members():
        stray = next((a for a in members(cs.nil) if mul[s][a] != ring.zero), None)
        if stray is None:
            u_reduced = UniformFlag(True, witness=s)
            break
        kill_failures.append((s, stray))
    if u_reduced is None:
        u_reduced = UniformFlag(False, counterexamples=tuple(kill_failures))

    return ClassificationReport(
        ring=ring,
        sset=sset,
        sets=es,
        boolean=cs.idem == full,
        vnr=cs.vnr == full,
        pi_regular=cs.pireg == full,
        s_boolean=es.s_idem == full,
        uniformly_s_boolean=u_bool,
        uniformly_s_vnr=u_vnr,
        uniformly_s_pi_regular=u_preg,
        pi_exponents=exponents,
        s_field=s_field,
        s_integral_domain=s_domain,
        s_reduced=es.s_nil == bit(ring.zero),
        weakly_s_reduced=cs.nil & ~es.s_zero == 0,
        uniformly_s_reduced=u_reduced,
    )


def s_field_equivalence_check(ring: FiniteRing, sset: MultiplicativeSet) -> CheckResult:
    """Zero ideal S-maximal (ideal-lattice side) iff some s makes every
    element s-invertible-or-s-zero (element side); both computed from scratch."""
    verdict = ideal_verdict(ring, sset, Ideal(ring, bit(ring.zero)))
    lattice_side = verdict.s_maximal is not None
    es = element_sets(ring, sset)
    element_side = any(
        rec.s_u | rec.s_zero == full_mask(ring.size) for rec in es.per_s
    )
    if lattice_side == element_side:
        return CheckResult(True, f"both {'true' if lattice_side else 'false'}")
    return CheckResult(
        False, f"lattice says {lattice_side}, element scan says {element_side}")


def max_relative_check(ring: FiniteRing) -> CheckResult:
    """Classical sets recovered as intersections of their M-relative versions
    over all maximal ideals M, with S_M the complement of M."""
    cs = classical_sets(ring)
    full = full_mask(ring.size)
    ideals = all_ideals(ring)
    proper = [i.mask for i in ideals if i.mask != full]
    maximal = [m for m in proper
               if not any(m != other and m & ~other == 0 for other in proper)]

    inter_z = inter_u = inter_nil = inter_idem = inter_vnr = full
    for mmask in maximal:
        comp = MultiplicativeSet(ring, full & ~mmask, strict=True)
        mes = element_sets(ring, comp)
        inter_z &= mes.s_zero
        inter_u &= mes.s_u
        inter_nil &= mes.s_nil
        inter_idem &= mes.s_idem
        inter_vnr &= mes.s_vnr

    checks = [
        ("zero set", inter_z == bit(ring.zero)),
        ("units", inter_u == cs.units),
        ("nilpotents", inter_nil == cs.nil),
        ("idempotent sandwich", cs.idem & ~inter_idem == 0 and inter_idem & ~cs.vnr == 0),
        ("vnr", inter_vnr == cs.vnr),
    ]
    for label, ok in checks:
        if not ok:
            return CheckResult(False, f"{label} mismatch over Max(R)")
    return CheckResult(True)


def boolean_decomposition_check(ring: FiniteRing, sset: MultiplicativeSet) -> CheckResult:
    """When S has no unit other than one: R = S-idem ∪ nil iff R is S-Boolean.
    The status of the open S-nil variant rides along in the detail text."""
    cs = classical_sets(ring)
    if sset.mask & cs.units != bit(ring.one):
        return CheckResult(True, "S contains a unit other than one", applicable=False)
    es = element_sets(ring, sset)
    full = full_mask(ring.size)
    decomposed = es.s_idem | cs.nil == full
    s_boolean = es.s_idem == full
    open_variant = es.s_idem | es.s_nil == full
    note = (f"open variant: S-idem|S-nil covers R = {open_variant}, "
            f"S-Boolean = {s_boolean}")
    if decomposed == s_boolean:
        return CheckResult(True, note)
    return CheckResult(
        False, f"decomposition {decomposed} but S-Boolean {s_boolean}; {note}")


def zero_divisor_idempotent_check(ring: FiniteRing, sset: MultiplicativeSet,
                                  s: int) -> CheckResult:
    """If every zero-divisor is s-idempotent (and Z(R) is big enough to bite),
    then s^2*y lands in S for every regular y and s^2 is a uniform vNr witness."""
    cs = classical_sets(ring)
    zd = cs.zero_divisors
    if not zd & ~bit(ring.zero) & ~bit(s):
        return CheckResult(True, "Z(R) has no nonzero element besides s",
                           applicable=False)
    es = element_sets(ring, sset)
    rec = es.relative_to(s)
    if zd & ~rec.s_idem:
        return CheckResult(True, "some zero-divisor is not s-idempotent",
                           applicable=False)
    mul = ring.mul
    s2 = mul[s][s]
    for y in members(cs.reg):
        if not sset.mask >> mul[s2][y] & 1:
            return CheckResult(
                False, f"s^2*{ring.names[y]} escapes S for regular y")
    s2_rec = es.relative_to(s2)
    if s2_rec.s_vnr != full_mask(ring.size):
        stray = next(iter(members(full_mask(ring.size) & ~s2_rec.s_vnr)))
        return CheckResult(False, f"{ring.names[stray]} is not s^2-vNr")
    return CheckResult(True)


def reduced_equivalences_check(ring: FiniteRing, sset: MultiplicativeSet) -> CheckResult:
    """The reduced-variant biconditionals and the implication web between
    reduced, S-reduced, weakly S-reduced, and uniformly S-reduced.

    Reduced does not imply S-reduced when S meets the zero-divisors (a
    zero-divisor s kills a nonzero element at exponent one), so that edge is
    asserted only for zero-divisor-free S.
    """
    es = element_sets(ring, sset)
    cs = classical_sets(ring)
    mul = ring.mul
    zero = ring.zero

    weakly = cs.nil & ~es.s_zero == 0
    snil_torsion = es.s_nil & ~es.s_zero == 0
    if weakly != snil_torsion:
        return CheckResult(
            False, f"weakly={weakly} but S-nil S-torsion={snil_torsion}")

    uniformly = any(
        all(mul[u][a] == zero for a in members(cs.nil)) for u in sset.members()
    )
    per_s_side = any(
        any(all(mul[u][a] == zero for a in members(rec.s_nil))
            for u in sset.members())
        for rec in es.per_s
    )
    if uniformly != per_s_side:
        return CheckResult(
            False, f"uniformly={uniformly} but per-s nil torsion={per_s_side}")

    reduced = cs.nil == bit(zero)
    s_reduced = es.s_nil == bit(zero)
    implications = [
        ("S-reduced => weakly", not s_reduced or weakly),
        ("uniformly => weakly", not uniformly or weakly),
        ("reduced => weakly", not reduced or weakly),
        ("reduced => uniformly", not reduced or uniformly),
    ]
    if not sset.mask & cs.zero_divisors:
        implications.append(("reduced => S-reduced (S zero-divisor-free)",
                             not reduced or s_reduced))
    for label, ok in implications:
        if not ok:
            return CheckResult(False, f"{label} fails")
    return CheckResult(True)
