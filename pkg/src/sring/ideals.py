"""Ideal lattice enumeration and the relativized prime/maximal/primary
verdicts, plus the two ideal-theoretic theorems that ride on them."""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

from .bits import bit, full_mask, members
from .elements import element_sets
from .errors import EnumerationCapError
from .multsets import MultiplicativeSet
from .result import CheckResult
from .rings import FiniteRing, Ideal, classical_sets, ideal_span

LATTICE_CAP = 4096


@lru_cache(maxsize=None)
def all_ideals(ring: FiniteRing) -> tuple[Ideal, ...]:
    """The full ideal lattice, by closure over single-element adjunctions.

    Starts at {0} and repeatedly spans one extra element; every ideal is
    reachable this way, and bitmask dedup keeps the walk finite.
    """
    zero_span = ideal_span(ring, ()).mask
    seen = {zero_span}
    frontier = [zero_span]
    while frontier:
        cur = frontier.pop()
        for g in range(ring.size):
            if cur >> g & 1:
                continue
            grown = ideal_span(ring, list(members(cur)) + [g]).mask
            if grown not in seen:
                if len(seen) >= LATTICE_CAP:
                    raise EnumerationCapError(
                        f"ideal lattice exceeds cap {LATTICE_CAP}")
                seen.add(grown)
                frontier.append(grown)
    return tuple(Ideal(ring, m) for m in sorted(seen))


def radical(ring: FiniteRing, ideal: Ideal) -> Ideal:
    """Elements with some power (exponent at most |R|) inside the ideal."""
    mask = 0
    for a in range(ring.size):
        prow = ring.power_rows[a]
        if any(ideal.mask >> prow[n - 1] & 1 for n in range(1, ring.size + 1)):
            mask |= bit(a)
    return Ideal(ring, mask)


@dataclass(frozen=True, eq=False)
class IdealVerdict:
    ideal: Ideal
    disjoint_from_s: bool
    s_prime: int | None
    s_maximal: int | None
    s_primary: int | None
    radical: Ideal


def ideal_verdict(ring: FiniteRing, sset: MultiplicativeSet, p: Ideal) -> IdealVerdict:
    """Decide the three relativized flags by exhaustive witness search,
    each flag carrying the least s in S that serves it."""
    return _verdict_cached(ring, sset.mask, sset.strict, p.mask)


@lru_cache(maxsize=None)
def _verdict_cached(ring: FiniteRing, smask: int, strict: bool,
                    pmask: int) -> IdealVerdict:
    sset = MultiplicativeSet(ring, smask, strict)
    p = Ideal(ring, pmask)
    rad = radical(ring, p)
    if p.mask & sset.mask:
        return IdealVerdict(p, False, None, None, None, rad)
    mul = ring.mul
    pmask, rmask = p.mask, rad.mask
    inside = [(a, b) for a in range(ring.size) for b in range(ring.size)
              if pmask >> mul[a][b] & 1]

    s_prime = next(
        (s for s in sset.members()
         if all(pmask >> mul[s][a] & 1 or pmask >> mul[s][b] & 1
                for a, b in inside)),
        None)
    s_primary = next(
        (s for s in sset.members()
         if all(pmask >> mul[s][a] & 1 or rmask >> mul[s][b] & 1
                for a, b in inside)),
        None)

    supersets = [i for i in all_ideals(ring) if pmask & ~i.mask == 0]
    s_maximal = None
    for s in sset.members():
        srow = mul[s]
        ok = True
        for i in supersets:
            if i.mask & sset.mask:
                continue
            if any(not pmask >> srow[x] & 1 for x in members(i.mask)):
                ok = False
                break
        if ok:
            s_maximal = s
            break
    return IdealVerdict(p, True, s_prime, s_maximal, s_primary, rad)


def primary_implies_maximal_check(ring: FiniteRing,
                                  sset: MultiplicativeSet) -> CheckResult:
    """Over S-Boolean-like rings, every S-primary ideal is S-maximal (and
    S-prime). Checked under the stated hypothesis and its uniform-vNr
    weakening; the bare everything-S-vNr variant is reported only."""
    es = element_sets(ring, sset)
    full = full_mask(ring.size)
    s_boolean = es.s_idem == full
    uniformly_vnr = any(rec.s_vnr == full for rec in es.per_s)
    all_vnr = es.s_vnr == full

    if not (s_boolean or uniformly_vnr):
        note = ""
        if all_vnr:
            # open territory: run the sweep but do not let it fail the check
            holds = _primary_sweep(ring, sset) is None
            note = f"every element S-vNr (non-uniform): conclusion holds = {holds}"
        return CheckResult(True, note, applicable=False)

    culprit = _primary_sweep(ring, sset)
    if culprit is None:
        return CheckResult(True)
    kind, mask = culprit
    names = "{" + ", ".join(ring.names[x] for x in members(mask)) + "}"
    return CheckResult(False, f"S-primary ideal {names} is not {kind}")


def _primary_sweep(ring: FiniteRing, sset: MultiplicativeSet):
    for ideal in all_ideals(ring):
        verdict = ideal_verdict(ring, sset, ideal)
        if not verdict.disjoint_from_s or verdict.s_primary is None:
            continue
        if verdict.s_maximal is None:
            return ("S-maximal", ideal.mask)
        if verdict.s_prime is None:
            return ("S-prime", ideal.mask)
    return None


def sandwich_check(ring: FiniteRing, sset: MultiplicativeSet,
                   ideal: Ideal) -> CheckResult:
    """With s an idempotent uniform Boolean witness and J the intersection of
    the S-maximal ideals above I: s*J inside I inside J."""
    es = element_sets(ring, sset)
    cs = classical_sets(ring)
    full = full_mask(ring.size)
    non_idem = full & ~cs.idem
    s = next(
        (rec.s for rec in es.per_s
         if cs.idem >> rec.s & 1 and non_idem & ~rec.s_idem == 0),
        None)
    if s is None:
        return CheckResult(
            True, "no idempotent uniform Boolean witness", applicable=False)
    if ideal.mask & sset.mask:
        return CheckResult(True, "ideal meets S", applicable=False)

    j_mask = full
    for m in all_ideals(ring):
        if ideal.mask & ~m.mask:
            continue
        verdict = ideal_verdict(ring, sset, m)
        if verdict.s_maximal is not None:
            j_mask &= m.mask

    if ideal.mask & ~j_mask:
        return CheckResult(False, "I escapes the intersection J")
    srow = ring.mul[s]
    stray = next((x for x in members(j_mask)
                  if not ideal.mask >> srow[x] & 1), None)
    if stray is not None:
        return CheckResult(False, f"s*{ring.names[stray]} lands outside I")
    return CheckResult(True)
