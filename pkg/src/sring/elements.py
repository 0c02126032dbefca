"""Per-element S-properties: witnesses, the six S-element sets, and the
element-level theorems that hold over them.

Every property is decided by literal witness-equation search over the ring
tables. The same code serves strict and non-strict sets; when zero belongs
to the set, the equations are simply evaluated as written (with s = 0 most
of them become trivially satisfiable, but S-idempotency does not).
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from functools import lru_cache

from .bits import bit, full_mask, mask_of, members
from .result import CheckResult
from .rings import FiniteRing, classical_sets
from .multsets import MultiplicativeSet


class WitnessKind(Enum):
    S_INVERTIBLE = "s-invertible"
    S_IDEMPOTENT = "s-idempotent"
    S_VNR = "s-vnr"
    S_PI_REGULAR = "s-pi-regular"
    S_NILPOTENT = "s-nilpotent"
    S_ZERO = "s-zero"


@dataclass(frozen=True)
class Witness:
    """Certificate for one S-property of one element.

    The defining identities, writing a for the element:

        S_INVERTIBLE   a*b = s
        S_IDEMPOTENT   s*a = a^2
        S_VNR          s*a = a^2*b
        S_PI_REGULAR   s*a^n = a^(2n)*b
        S_NILPOTENT    s*a^n = 0
        S_ZERO         s*a = 0
    """

    kind: WitnessKind
    s: int
    b: int | None = None
    n: int | None = None

    def replay(self, ring: FiniteRing, a: int) -> bool:
        mul = ring.mul
        k, s, b, n = self.kind, self.s, self.b, self.n
        if k is WitnessKind.S_INVERTIBLE:
            return b is not None and mul[a][b] == s
        if k is WitnessKind.S_IDEMPOTENT:
            return mul[s][a] == mul[a][a]
        if k is WitnessKind.S_VNR:
            return b is not None and mul[s][a] == mul[mul[a][a]][b]
        if k is WitnessKind.S_PI_REGULAR:
            if b is None or n is None:
                return False
            return mul[s][ring.power(a, n)] == mul[ring.power(a, 2 * n)][b]
        if k is WitnessKind.S_NILPOTENT:
            return n is not None and mul[s][ring.power(a, n)] == ring.zero
        return mul[s][a] == ring.zero


@dataclass(frozen=True, eq=False)
class SElementSets:
    """The six element sets relative to one fixed s, as bitmasks."""

    s: int
    s_u: int
    s_idem: int
    s_vnr: int
    s_pireg: int
    s_nil: int
    s_zero: int


@dataclass(frozen=True, eq=False)
class ElementSets:
    """Global S-element sets plus the per-s family they are unions of."""

    ring: FiniteRing
    s_members: tuple[int, ...]
    s_u: int
    s_idem: int
    s_vnr: int
    s_pireg: int
    s_nil: int
    s_zero: int
    per_s: tuple[SElementSets, ...]

    def relative_to(self, s: int) -> SElementSets:
        for rec in self.per_s:
            if rec.s == s:
                return rec
        raise KeyError(f"{s} is not a member of the set")


def _sets_for_s(ring: FiniteRing, s: int) -> SElementSets:
    n = ring.size
    mul, row, pows = ring.mul, ring.row_masks, ring.power_rows
    zero = ring.zero
    srow = mul[s]
    u = idem = vnr = pireg = nil = zmask = 0
    for a in range(n):
        sa = srow[a]
        a2 = mul[a][a]
        if row[a] >> s & 1:
            u |= bit(a)
        if sa == a2:
            idem |= bit(a)
        if row[a2] >> sa & 1:
            vnr |= bit(a)
        if sa == zero:
            zmask |= bit(a)
        prow = pows[a]
        for m in range(1, 2 * n + 1):
            if srow[prow[m - 1]] == zero:
                nil |= bit(a)
                break
        for m in range(1, 2 * n + 1):
            if row[prow[2 * m - 1]] >> srow[prow[m - 1]] & 1:
                pireg |= bit(a)
                break
    return SElementSets(s, u, idem, vnr, pireg, nil, zmask)


@lru_cache(maxsize=None)
def _element_sets_cached(ring: FiniteRing, mask: int) -> ElementSets:
    smembers = tuple(members(mask))
    per_s = tuple(_sets_for_s(ring, s) for s in smembers)
    u = idem = vnr = pireg = nil = zmask = 0
    for rec in per_s:
        u |= rec.s_u
        idem |= rec.s_idem
        vnr |= rec.s_vnr
        pireg |= rec.s_pireg
        nil |= rec.s_nil
        zmask |= rec.s_zero
    return ElementSets(ring, smembers, u, idem, vnr, pireg, nil, zmask, per_s)


def element_sets(ring: FiniteRing, sset: MultiplicativeSet) -> ElementSets:
    return _element_sets_cached(ring, sset.mask)


def witness_for(ring: FiniteRing, sset: MultiplicativeSet, a: int,
                kind: WitnessKind) -> Witness | None:
    """First witness in the fixed search order: ascending s, then b, then n."""
    mul = ring.mul
    zero = ring.zero
    bound = 2 * ring.size
    for s in sset.members():
        if kind is WitnessKind.S_INVERTIBLE:
            for b in range(ring.size):
                if mul[a][b] == s:
                    return Witness(kind, s, b=b)
        elif kind is WitnessKind.S_IDEMPOTENT:
            if mul[s][a] == mul[a][a]:
                return Witness(kind, s)
        elif kind is WitnessKind.S_VNR:
            sa, a2 = mul[s][a], mul[a][a]
            for b in range(ring.size):
                if mul[a2][b] == sa:
                    return Witness(kind, s, b=b)
        elif kind is WitnessKind.S_PI_REGULAR:
            prow = ring.power_rows[a]
            for b in range(ring.size):
                for n in range(1, bound + 1):
                    if mul[s][prow[n - 1]] == mul[prow[2 * n - 1]][b]:
                        return Witness(kind, s, b=b, n=n)
        elif kind is WitnessKind.S_NILPOTENT:
            prow = ring.power_rows[a]
            for n in range(1, bound + 1):
                if mul[s][prow[n - 1]] == zero:
                    return Witness(kind, s, n=n)
        else:
            if mul[s][a] == zero:
                return Witness(kind, s)
    return None


# -- element-level theorem checks -------------------------------------------


def inclusion_chain_check(ring: FiniteRing, sset: MultiplicativeSet) -> CheckResult:
    """The inclusion chain relating classical sets, S, and the S-sets."""
    es = element_sets(ring, sset)
    cs = classical_sets(ring)
    smask = sset.mask
    zdiv = cs.zero_divisors
    chain = [
        ("S <= S-u", smask, es.s_u),
        ("idem|S <= S-idem", cs.idem | smask, es.s_idem),
        ("S-idem <= S|Z", es.s_idem, smask | zdiv),
        ("vnr|S-u|S-idem <= S-vnr", cs.vnr | es.s_u | es.s_idem, es.s_vnr),
        ("S-vnr <= S-u|Z", es.s_vnr, es.s_u | zdiv),
        ("pireg|S-vnr|S-nil <= S-pireg", cs.pireg | es.s_vnr | es.s_nil, es.s_pireg),
        ("S-pireg <= S-u|Z", es.s_pireg, es.s_u | zdiv),
    ]
    for label, lo, hi in chain:
        stray = lo & ~hi
        if stray:
            culprit = next(iter(members(stray)))
            return CheckResult(False, f"{label} fails at {ring.names[culprit]}")
    return CheckResult(True)


def multiplicative_closure_check(ring: FiniteRing, sset: MultiplicativeSet) -> CheckResult:
    """Product closure of the four S-sets plus the three pointwise companions:
    divisors of S-invertibles are S-invertible, s minus an s-idempotent is
    s-idempotent, and a vNr-style witness product a*b is s-idempotent."""
    es = element_sets(ring, sset)
    mul, sub = ring.mul, ring.sub
    n = ring.size
    for label, mask in (("S-u", es.s_u), ("S-idem", es.s_idem),
                        ("S-vnr", es.s_vnr), ("S-pireg", es.s_pireg)):
        elems = tuple(members(mask))
        for a in elems:
            arow = mul[a]
            for b in elems:
                if not mask >> arow[b] & 1:
                    return CheckResult(
                        False,
                        f"{label} not closed: {ring.names[a]}*{ring.names[b]}")
    for a in range(n):
        arow = mul[a]
        for b in range(n):
            if es.s_u >> arow[b] & 1 and not es.s_u >> a & 1:
                return CheckResult(
                    False, f"ab S-invertible but a is not, a={ring.names[a]}")
    for rec in es.per_s:
        s = rec.s
        for e in members(rec.s_idem):
            if not rec.s_idem >> sub(s, e) & 1:
                return CheckResult(
                    False, f"s-e not s-idempotent for s={ring.names[s]}, e={ring.names[e]}")
        srow = mul[s]
        for a in range(n):
            sa = srow[a]
            a2row = mul[mul[a][a]]
            arow = mul[a]
            for b in range(n):
                if a2row[b] == sa and not rec.s_idem >> arow[b] & 1:
                    return CheckResult(
                        False,
                        f"witness product ab not s-idempotent: s={ring.names[s]}, "
                        f"a={ring.names[a]}, b={ring.names[b]}")
    return CheckResult(True)


def _kill_rows(ring: FiniteRing) -> dict[int, int]:
    out = {}
    for u in range(ring.size):
        out[u] = mask_of(x for x in range(ring.size) if ring.mul[u][x] == ring.zero)
    return out


def torsion_intersection_check(ring: FiniteRing, sset: MultiplicativeSet) -> CheckResult:
    """S-vnr∩S-nil and S-idem∩S-nil are S-torsion; the per-(s,t) slices are
    uniformly S-torsion (a single killer, which exists because powers of s
    cycle in a finite ring)."""
    es = element_sets(ring, sset)
    for label, inter in (("S-vnr&S-nil", es.s_vnr & es.s_nil),
                         ("S-idem&S-nil", es.s_idem & es.s_nil)):
        stray = inter & ~es.s_zero
        if stray:
            culprit = next(iter(members(stray)))
            return CheckResult(False, f"{label} not S-torsion at {ring.names[culprit]}")
    kills = {u: mask_of(x for x in range(ring.size)
                        if ring.mul[u][x] == ring.zero)
             for u in sset.members()}
    for s_rec in es.per_s:
        for t_rec in es.per_s:
            for label, inter in (
                ("s-vnr&t-nil", s_rec.s_vnr & t_rec.s_nil),
                ("s-idem&t-nil", s_rec.s_idem & t_rec.s_nil),
            ):
                if not any(inter & ~kills[u] == 0 for u in sset.members()):
                    return CheckResult(
                        False,
                        f"{label} has no uniform killer for s={ring.names[s_rec.s]}, "
                        f"t={ring.names[t_rec.s]}")
    return CheckResult(True)


def vnr_characterization_check(ring: FiniteRing, sset: MultiplicativeSet,
                               a: int) -> CheckResult:
    """Compute the five equivalent descriptions of S-vNr membership for one
    element, each by its own exhaustive search, and compare."""
    es = element_sets(ring, sset)
    cs = classical_sets(ring)
    mul, add, row = ring.mul, ring.add, ring.row_masks
    zero = ring.zero
    smembers = sset.members()
    su, sidem, svnr = es.s_u, es.s_idem, es.s_vnr

    c1 = bool(svnr >> a & 1)

    a2 = mul[a][a]
    a2_su = mask_of(mul[a2][u] for u in members(su))
    c2 = any(a2_su >> mul[s][a] & 1 for s in smembers)

    ue_values = 0
    for u in members(su):
        urow = mul[u]
        for e in members(sidem):
            ue_values |= bit(urow[e])
    c3 = any(ue_values >> mul[s][a] & 1 for s in smembers)

    c4 = False
    for s in smembers:
        sa = mul[s][a]
        sa_row, sa_add = mul[sa], add[sa]
        for b in members(svnr & ~bit(a)):
            if sa_row[b] == zero and su >> sa_add[b] & 1:
                c4 = True
                break
        if c4:
            break

    c5 = False
    for s in smembers:
        sa = mul[s][a]
        sa_row, sa_add = mul[sa], add[sa]
        for b in range(ring.size):
            if sa_row[b] == zero and cs.units >> sa_add[b] & 1:
                c5 = True
                break
        if c5:
            break

    conds = (c1, c2, c3, c4, c5)
    if len(set(conds)) == 1:
        return CheckResult(True, detail=f"all {'true' if c1 else 'false'}")
    return CheckResult(False, f"conditions diverge for {ring.names[a]}: {conds}")


@dataclass(frozen=True)
class WeakInverse:
    """A weak inverse x of a, with the s that scales the defining identities
    (a^2 x = s^2 a and x^2 a = s^2 x) and its uniqueness data."""

    s: int
    x: int
    candidates: tuple[int, ...]
    unique_up_to_s4: bool
    exactly_unique: bool | None


def weak_inverse(ring: FiniteRing, sset: MultiplicativeSet, a: int) -> WeakInverse | None:
    wit = witness_for(ring, sset, a, WitnessKind.S_VNR)
    if wit is None:
        return None
    s, b = wit.s, wit.b
    mul = ring.mul
    x = mul[a][mul[b][b]]
    s2 = mul[s][s]
    s4 = mul[s2][s2]
    a2 = mul[a][a]
    assert mul[a2][x] == mul[s2][a] and mul[mul[x][x]][a] == mul[s2][x]
    candidates = tuple(
        y for y in range(ring.size)
        if mul[a2][y] == mul[s2][a] and mul[mul[y][y]][a] == mul[s2][y]
    )
    s4x = mul[s4][x]
    up_to = all(mul[s4][y] == s4x for y in candidates)
    exact: bool | None = None
    if classical_sets(ring).reg >> s & 1:
        exact = candidates == (x,)
    return WeakInverse(s, x, candidates, up_to, exact)


@dataclass(frozen=True)
class SumClosureStatus:
    """Additive-closure facts about S-vnr(R), reported rather than assumed:
    whether it is closed under addition, whether 2 is S-invertible, and —
    when it is — the two theorems that hypothesis unlocks."""

    closed_under_addition: bool
    two_in_su: bool
    two_term_decomposition: CheckResult
    four_term_equivalence: CheckResult


def sum_closure_status(ring: FiniteRing, sset: MultiplicativeSet) -> SumClosureStatus:
    es = element_sets(ring, sset)
    mul, add = ring.mul, ring.add
    svnr, su = es.s_vnr, es.s_u
    smembers = sset.members()

    vnr_elems = tuple(members(svnr))
    closed = all(svnr >> add[x][y] & 1 for x in vnr_elems for y in vnr_elems)

    two = add[ring.one][ring.one]
    two_in_su = bool(su >> two & 1)
    if not two_in_su:
        na = CheckResult(True, "2 not S-invertible", applicable=False)
        return SumClosureStatus(closed, False, na, na)

    su_elems = tuple(members(su))
    pair_sums = 0
    for x in su_elems:
        xrow = add[x]
        for y in su_elems:
            pair_sums |= bit(xrow[y])

    decomposition = CheckResult(True)
    for a in vnr_elems:
        if not any(pair_sums >> mul[s][a] & 1 for s in smembers):
            decomposition = CheckResult(
                False, f"no s with s*{ring.names[a]} a sum of two S-invertibles")
            break

    # sums of four S-invertibles = pairwise sums of the two-term value set
    four_ok = True
    for x in members(pair_sums):
        xrow = add[x]
        if not all(svnr >> xrow[y] & 1 for y in members(pair_sums)):
            four_ok = False
            break

    skewed = 0
    square_back = tuple(k for k in su_elems if sset.mask >> mul[k][k] & 1)
    for u in su_elems:
        urow = mul[u]
        for s in smembers:
            srow = add[s]
            for k in square_back:
                skewed |= bit(urow[srow[k]])
    three_ok = all(svnr >> add[x][y] & 1
                   for x in members(skewed) for y in members(skewed))

    conds = (closed, four_ok, three_ok)
    if len(set(conds)) == 1:
        equivalence = CheckResult(True, f"all {'true' if closed else 'false'}")
    else:
        equivalence = CheckResult(False, f"subring conditions diverge: {conds}")
    return SumClosureStatus(closed, True, decomposition, equivalence)


def weakly_reduced_consequence_check(ring: FiniteRing,
                                     sset: MultiplicativeSet) -> CheckResult:
    """Additive closure of S-vnr forces every nilpotent to be S-zero; a
    single s whose s-vnr slice is additively closed forces a single killer."""
    es = element_sets(ring, sset)
    cs = classical_sets(ring)
    add, mul = ring.add, ring.mul
    applicable = False

    vnr_elems = tuple(members(es.s_vnr))
    if all(es.s_vnr >> add[x][y] & 1 for x in vnr_elems for y in vnr_elems):
        applicable = True
        stray = cs.nil & ~es.s_zero
        if stray:
            culprit = next(iter(members(stray)))
            return CheckResult(
                False, f"nilpotent {ring.names[culprit]} is not S-zero")

    for rec in es.per_s:
        elems = tuple(members(rec.s_vnr))
        if not all(rec.s_vnr >> add[x][y] & 1 for x in elems for y in elems):
            continue
        applicable = True
        if not any(all(mul[u][x] == ring.zero for x in members(cs.nil))
                   for u in sset.members()):
            return CheckResult(
                False,
                f"s-vnr additively closed for s={ring.names[rec.s]} "
                "but nil(R) has no uniform killer")
    return CheckResult(True, applicable=applicable)
