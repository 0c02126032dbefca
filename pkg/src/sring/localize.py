"""Localization of a finite ring at a multiplicative set.

Pairs ``(a, s)`` with ``s`` in S are grouped under the relation
``(a, s) ~ (b, t)  iff  u*(a*t - b*s) = 0 for some u in S``; since the
elements killed by some member of S form an ideal, the test is a single
bitmask probe. The quotient carrier is finite (at most ``|R|*|S|`` classes,
in fact at most ``|R|``), so the whole fraction field machinery collapses
to a partition refinement.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import lru_cache
from typing import Mapping

from .bits import full_mask
from .elements import element_sets
from .errors import OwnershipError
from .multsets import MultiplicativeSet
from .result import CheckResult
from .rings import FiniteRing, RingHom, classical_sets, make_zn


@dataclass(frozen=True, eq=False)
class LocalizedRing:
    """The localization S^-1 R together with the canonical map from R.

    ``degenerate`` flags the collapse to the zero ring that happens exactly
    when 0 lies in S.
    """

    source: FiniteRing
    sset: MultiplicativeSet
    ring: FiniteRing
    canonical: RingHom
    degenerate: bool
    _pair_class: Mapping[tuple[int, int], int] = field(repr=False)

    def class_of(self, a: int, s: int | None = None) -> int:
        """Index of the fraction a/s in the localized carrier."""
        if s is None:
            s = self.source.one
        try:
            return self._pair_class[(a, s)]
        except KeyError:
            raise OwnershipError(
                f"({a}, {s}) is not a fraction over this set") from None


def localize(ring: FiniteRing, sset: MultiplicativeSet) -> LocalizedRing:
    if sset.ring is not ring:
        raise OwnershipError("multiplicative set belongs to a different ring")
    return _localize_cached(ring, sset.mask, sset.strict)


@lru_cache(maxsize=None)
def _localize_cached(ring: FiniteRing, mask: int, strict: bool) -> LocalizedRing:
    sset = MultiplicativeSet(ring, mask, strict)
    smem = sset.members()
    if sset.mask >> ring.zero & 1:
        zero_ring = make_zn(1)
        pair_class = {(a, s): 0 for a in range(ring.size) for s in smem}
        canonical = RingHom(ring, zero_ring, (0,) * ring.size)
        return LocalizedRing(ring, sset, zero_ring, canonical, True, pair_class)

    szero = element_sets(ring, sset).s_zero
    mul = ring.mul

    reps: list[tuple[int, int]] = []
    pair_class: dict[tuple[int, int], int] = {}
    for a in range(ring.size):
        for s in smem:
            for idx, (b, t) in enumerate(reps):
                if szero >> ring.sub(mul[a][t], mul[b][s]) & 1:
                    pair_class[(a, s)] = idx
                    break
            else:
                pair_class[(a, s)] = len(reps)
                reps.append((a, s))

    size = len(reps)
    add_table = [[0] * size for _ in range(size)]
    mul_table = [[0] * size for _ in range(size)]
    for i, (a, s) in enumerate(reps):
        for j, (b, t) in enumerate(reps):
            num = ring.add[mul[a][t]][mul[b][s]]
            den = mul[s][t]
            add_table[i][j] = pair_class[(num, den)]
            mul_table[i][j] = pair_class[(mul[a][b], den)]

    # every class contains a denominator-one pair (the canonical map is
    # onto for finite rings); name each class by the least such numerator
    numerators = [min(a for a in range(ring.size)
                      if pair_class[(a, ring.one)] == i)
                  for i in range(size)]
    one_name = ring.names[ring.one]
    names = [f"{ring.names[a]}/{one_name}" for a in numerators]

    loc = FiniteRing(
        add_table,
        mul_table,
        pair_class[(ring.zero, ring.one)],
        pair_class[(ring.one, ring.one)],
        names,
    )
    canonical = RingHom(
        ring, loc, tuple(pair_class[(a, ring.one)] for a in range(ring.size)))
    return LocalizedRing(ring, sset, loc, canonical, False, pair_class)


# -- checks ------------------------------------------------------------------


def canonical_kernel_check(ring: FiniteRing,
                           sset: MultiplicativeSet) -> CheckResult:
    """The canonical map kills exactly the elements annihilated by S."""
    loc = localize(ring, sset)
    expected = element_sets(ring, sset).s_zero
    got = loc.canonical.kernel_mask()
    if got == expected:
        return CheckResult(True)
    return CheckResult(False, f"kernel {got:#x} != S-annihilated {expected:#x}")


def vnr_bridge_check(ring: FiniteRing, sset: MultiplicativeSet) -> CheckResult:
    """Every element S-vN-regular iff the localization is vN-regular."""
    es = element_sets(ring, sset)
    lhs = es.s_vnr == full_mask(ring.size)
    loc = localize(ring, sset).ring
    rhs = classical_sets(loc).vnr == full_mask(loc.size)
    if lhs == rhs:
        return CheckResult(True)
    return CheckResult(False, f"source side {lhs}, localized side {rhs}")


def pi_regular_bridge_check(ring: FiniteRing,
                            sset: MultiplicativeSet) -> CheckResult:
    """Every element S-pi-regular iff the localization is pi-regular."""
    es = element_sets(ring, sset)
    lhs = es.s_pireg == full_mask(ring.size)
    loc = localize(ring, sset).ring
    rhs = classical_sets(loc).pireg == full_mask(loc.size)
    if lhs == rhs:
        return CheckResult(True)
    return CheckResult(False, f"source side {lhs}, localized side {rhs}")


def artinian_conclusion_check(ring: FiniteRing,
                              sset: MultiplicativeSet) -> CheckResult:
    """Finite rings have stabilizing chains, so the pi-regularity conclusions
    hold with no hypothesis: everywhere in R relative to S, and classically
    in the localization."""
    es = element_sets(ring, sset)
    if es.s_pireg != full_mask(ring.size):
        return CheckResult(False, "some element is not S-pi-regular")
    loc = localize(ring, sset).ring
    if classical_sets(loc).pireg != full_mask(loc.size):
        return CheckResult(False, "localization is not pi-regular")
    return CheckResult(True)
