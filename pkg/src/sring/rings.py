"""Finite commutative rings as dense operation tables.

A ring is a carrier ``0..n-1`` plus full addition and multiplication tables.
Everything downstream (element sets, ideals, localization) is computed by
exhaustive scans over these tables, so constructions here are the only place
correctness has to be earned; ``FiniteRing.validate`` re-checks every axiom.
"""

from __future__ import annotations

import os
from dataclasses import dataclass
from functools import cached_property, lru_cache
from itertools import product as iproduct
from collections.abc import Iterable, Sequence

from .bits import bit, full_mask, mask_of, members
from .errors import (
    InvalidArityError,
    InvalidSizeError,
    OwnershipError,
    UnknownElementError,
    WorkbenchError,
)

DEFAULT_SIZE_CAP = 256


def size_cap() -> int:
    """Maximum allowed carrier size; ``SRING_MAX_SIZE`` overrides the default."""
    raw = os.environ.get("SRING_MAX_SIZE")
    if raw:
        try:
            value = int(raw)
        except ValueError:
            return DEFAULT_SIZE_CAP
        if value > 0:
            return value
    return DEFAULT_SIZE_CAP


def _check_size(n: int) -> None:
    if n < 1:
        raise InvalidSizeError(f"ring size must be at least 1, got {n}")
    cap = size_cap()
    if n > cap:
        raise InvalidSizeError(f"ring size {n} exceeds cap {cap}")


class FiniteRing:
    """A finite commutative ring with identity.

    Instances are immutable after construction and compare by identity;
    use :func:`is_isomorphic` for structural comparison.
    """

    def __init__(
        self,
        add: Sequence[Sequence[int]],
        mul: Sequence[Sequence[int]],
        zero: int,
        one: int,
        names: Sequence[str],
        spec: str | None = None,
        factors: tuple["FiniteRing", ...] | None = None,
    ):
        n = len(add)
        _check_size(n)
        self.size = n
        self.add = tuple(tuple(row) for row in add)
        self.mul = tuple(tuple(row) for row in mul)
        self.zero = zero
        self.one = one
        self.names = tuple(names)
        self.spec = spec
        self.factors = factors
        if len(self.mul) != n or len(self.names) != n:
            raise InvalidSizeError("table and name sizes disagree")

    def __repr__(self) -> str:
        label = self.spec or f"ring(size={self.size})"
        return f"<FiniteRing {label}>"

    # -- derived tables ----------------------------------------------------

    @cached_property
    def neg(self) -> tuple[int, ...]:
        """Additive inverse of each element."""
        out = []
        for a in range(self.size):
            row = self.add[a]
            out.append(row.index(self.zero))
        return tuple(out)

    def sub(self, a: int, b: int) -> int:
        return self.add[a][self.neg[b]]

    @cached_property
    def row_masks(self) -> tuple[int, ...]:
        """``row_masks[a]`` is the value set of ``a*R`` as a bitmask."""
        return tuple(mask_of(row) for row in self.mul)

    @cached_property
    def power_rows(self) -> tuple[tuple[int, ...], ...]:
        """``power_rows[a][k]`` is ``a**(k+1)`` for ``k+1 <= 4n``.

        Power sequences cycle within ``n`` steps, so ``4n`` entries are enough
        for every exponent-bounded search used here (pi-regularity compares
        ``a**m`` against ``a**(2m)`` with ``m <= 2n``).
        """
        n = self.size
        rows = []
        for a in range(n):
            row = [a]
            acc = a
            mul_a = self.mul[a]
            for _ in range(4 * n - 1):
                acc = mul_a[acc]
                row.append(acc)
            rows.append(tuple(row))
        return tuple(rows)

    def power(self, a: int, k: int) -> int:
        if k < 1:
            raise ValueError("exponent must be >= 1")
        rows = self.power_rows[a]
        if k <= len(rows):
            return rows[k - 1]
        acc = rows[-1]
        for _ in range(k - len(rows)):
            acc = self.mul[a][acc]
        return acc

    @cached_property
    def add_orders(self) -> tuple[int, ...]:
        out = []
        for a in range(self.size):
            acc = a
            order = 1
            while acc != self.zero:
                acc = self.add[acc][a]
                order += 1
            out.append(order)
        return tuple(out)

    @cached_property
    def _name_index(self) -> dict[str, int]:
        table: dict[str, int] = {}
        for i, name in enumerate(self.names):
            table[name.replace(" ", "")] = i
        return table

    def element_index(self, name: str) -> int:
        """Resolve an element by display name, or by bare carrier index."""
        key = name.replace(" ", "")
        if key in self._name_index:
            return self._name_index[key]
        if key.isdigit():
            idx = int(key)
            if 0 <= idx < self.size:
                return idx
        raise UnknownElementError(f"no element named {name!r} in {self!r}")

    # -- audit -------------------------------------------------------------

    def validate(self) -> None:
        """Full axiom audit; raises WorkbenchError on the first failure."""
        n, add, mul, zero, one = self.size, self.add, self.mul, self.zero, self.one
        rng = range(n)
        for a in rng:
            if add[a][zero] != a:
                raise WorkbenchError(f"{a} + 0 != {a}")
            if mul[a][one] != a:
                raise WorkbenchError(f"{a} * 1 != {a}")
            if zero not in add[a]:
                raise WorkbenchError(f"{a} has no additive inverse")
            for b in rng:
                if add[a][b] != add[b][a]:
                    raise WorkbenchError(f"addition not commutative at ({a},{b})")
                if mul[a][b] != mul[b][a]:
                    raise WorkbenchError(f"multiplication not commutative at ({a},{b})")
        for a in rng:
            for b in rng:
                ab, mab = add[a][b], mul[a][b]
                for c in rng:
                    if add[ab][c] != add[a][add[b][c]]:
                        raise WorkbenchError(f"addition not associative at ({a},{b},{c})")
                    if mul[mab][c] != mul[a][mul[b][c]]:
                        raise WorkbenchError(f"multiplication not associative at ({a},{b},{c})")
                    if mul[a][add[b][c]] != add[mab][mul[a][c]]:
                        raise WorkbenchError(f"distributivity fails at ({a},{b},{c})")
        if n > 1 and zero == one:
            raise WorkbenchError("zero equals one in a ring of size > 1")


@dataclass(frozen=True, eq=False)
class Ideal:
    """An ideal of a specific ring, stored as a member bitmask."""

    ring: FiniteRing
    mask: int

    def members(self) -> tuple[int, ...]:
        return tuple(members(self.mask))

    def __contains__(self, a: int) -> bool:
        return bool(self.mask >> a & 1)

    def __len__(self) -> int:
        return self.mask.bit_count()

    def __repr__(self) -> str:
        names = ", ".join(self.ring.names[i] for i in self.members())
        return f"<Ideal {{{names}}}>"

    def validate(self) -> None:
        ring = self.ring
        elems = self.members()
        if ring.zero not in self:
            raise WorkbenchError("ideal missing zero")
        for a in elems:
            for b in elems:
                if ring.add[a][b] not in self:
                    raise WorkbenchError("ideal not closed under addition")
            for r in range(ring.size):
                if ring.mul[r][a] not in self:
                    raise WorkbenchError("ideal not closed under ring multiples")


@dataclass(frozen=True, eq=False)
class RingHom:
    """A unital ring homomorphism given by its value table."""

    source: FiniteRing
    target: FiniteRing
    map: tuple[int, ...]

    def __call__(self, a: int) -> int:
        return self.map[a]

    @cached_property
    def image_mask(self) -> int:
        return mask_of(self.map)

    def is_surjective(self) -> bool:
        return self.image_mask == full_mask(self.target.size)

    def kernel_mask(self) -> int:
        z = self.target.zero
        return mask_of(a for a in range(self.source.size) if self.map[a] == z)

    def validate(self) -> None:
        src, tgt, f = self.source, self.target, self.map
        if len(f) != src.size:
            raise WorkbenchError("hom table has wrong length")
        if f[src.zero] != tgt.zero or f[src.one] != tgt.one:
            raise WorkbenchError("hom does not preserve 0/1")
        for a in range(src.size):
            fa = f[a]
            for b in range(src.size):
                if f[src.add[a][b]] != tgt.add[fa][f[b]]:
                    raise WorkbenchError(f"hom breaks addition at ({a},{b})")
                if f[src.mul[a][b]] != tgt.mul[fa][f[b]]:
                    raise WorkbenchError(f"hom breaks multiplication at ({a},{b})")


@dataclass(frozen=True)
class ClassicalSets:
    """The textbook element sets of a ring, as bitmasks."""

    idem: int
    vnr: int
    pireg: int
    reg: int
    zero_divisors: int
    nil: int
    units: int


# -- constructors ----------------------------------------------------------


def make_zn(n: int) -> FiniteRing:
    """The ring of integers modulo ``n``."""
    _check_size(n)
    add = [[(i + j) % n for j in range(n)] for i in range(n)]
    mul = [[(i * j) % n for j in range(n)] for i in range(n)]
    one = 1 % n
    return FiniteRing(add, mul, 0, one, [str(i) for i in range(n)], spec=f"Z{n}")


def direct_product(factors: Sequence[FiniteRing]) -> FiniteRing:
    """Componentwise product; element names are tuples of factor names."""
    if not factors:
        raise InvalidArityError("direct product needs at least one factor")
    factors = tuple(factors)
    size = 1
    for f in factors:
        size *= f.size
    _check_size(size)

    strides = []
    acc = 1
    for f in reversed(factors):
        strides.append(acc)
        acc *= f.size
    strides.reverse()

    def decode(idx: int) -> tuple[int, ...]:
        out = []
        for f, st in zip(factors, strides):
            out.append((idx // st) % f.size)
        return tuple(out)

    def encode(parts: Iterable[int]) -> int:
        return sum(p * st for p, st in zip(parts, strides))

    coords = [decode(i) for i in range(size)]
    add = [
        [encode(f.add[x][y] for f, x, y in zip(factors, ca, cb)) for cb in coords]
        for ca in coords
    ]
    mul = [
        [encode(f.mul[x][y] for f, x, y in zip(factors, ca, cb)) for cb in coords]
        for ca in coords
    ]
    zero = encode(f.zero for f in factors)
    one = encode(f.one for f in factors)
    names = ["(" + ",".join(f.names[c] for f, c in zip(factors, co)) + ")" for co in coords]
    specs = [f.spec for f in factors]
    spec = " x ".join(s for s in specs if s) if all(specs) else None
    return FiniteRing(add, mul, zero, one, names, spec=spec, factors=factors)


def product_projection(ring: FiniteRing, i: int) -> RingHom:
    """Projection of a product ring onto its ``i``-th factor."""
    if not ring.factors:
        raise OwnershipError("ring is not a direct product")
    factors = ring.factors
    if not 0 <= i < len(factors):
        raise InvalidArityError(f"no factor {i} in a {len(factors)}-fold product")
    strides = []
    acc = 1
    for f in reversed(factors):
        strides.append(acc)
        acc *= f.size
    strides.reverse()
    st, fi = strides[i], factors[i]
    table = tuple((idx // st) % fi.size for idx in range(ring.size))
    return RingHom(ring, fi, table)


def _poly_term(base: FiniteRing, coeff: int, degree: int) -> str:
    if degree == 0:
        return base.names[coeff]
    xs = "x" if degree == 1 else f"x^{degree}"
    if coeff == base.one:
        return xs
    return f"{base.names[coeff]}*{xs}"


def truncated_poly(base: FiniteRing, k: int) -> FiniteRing:
    """Polynomials over ``base`` truncated at degree ``k`` (so x**k = 0)."""
    if k < 1:
        raise InvalidSizeError("truncation degree must be >= 1")
    size = base.size**k
    _check_size(size)
    b = base.size

    def decode(idx: int) -> tuple[int, ...]:
        out = []
        for _ in range(k):
            idx, rem = divmod(idx, b)
            out.append(rem)
        return tuple(out)

    def encode(coeffs: Sequence[int]) -> int:
        idx = 0
        for c in reversed(coeffs):
            idx = idx * b + c
        return idx

    polys = [decode(i) for i in range(size)]
    add = [
        [encode([base.add[x][y] for x, y in zip(pa, pb)]) for pb in polys]
        for pa in polys
    ]
    mul_rows = []
    for pa in polys:
        row = []
        for pb in polys:
            out = [base.zero] * k
            for i, x in enumerate(pa):
                if x == base.zero:
                    continue
                mx = base.mul[x]
                for j, y in enumerate(pb):
                    if i + j >= k or y == base.zero:
                        continue
                    out[i + j] = base.add[out[i + j]][mx[y]]
            row.append(encode(out))
        mul_rows.append(row)

    names = []
    for p in polys:
        terms = [_poly_term(base, c, d) for d, c in enumerate(p) if c != base.zero]
        names.append(" + ".join(terms) if terms else "0")
    zero = encode([base.zero] * k)
    one = encode([base.one] + [base.zero] * (k - 1))
    spec = f"poly({base.spec},{k})" if base.spec else None
    return FiniteRing(add, mul_rows, zero, one, names, spec=spec)


def ideal_span(ring: FiniteRing, gens: Iterable[int]) -> Ideal:
    """Smallest ideal containing ``gens``: closure under +, -, and ring multiples."""
    mask = bit(ring.zero)
    queue = [g for g in gens]
    add, mul, neg, n = ring.add, ring.mul, ring.neg, ring.size
    while queue:
        x = queue.pop()
        if mask >> x & 1:
            continue
        mask |= bit(x)
        queue.append(neg[x])
        for m in members(mask):
            queue.append(add[x][m])
        for r in range(n):
            queue.append(mul[r][x])
    return Ideal(ring, mask)


def quotient(ring: FiniteRing, ideal: Ideal) -> tuple[FiniteRing, RingHom]:
    """Quotient ring with least-index coset representatives, plus the surjection."""
    if ideal.ring is not ring:
        raise OwnershipError("ideal belongs to a different ring")
    imembers = ideal.members()
    rep = []
    for a in range(ring.size):
        row = ring.add[a]
        rep.append(min(row[m] for m in imembers))
    reps = sorted(set(rep))
    index_of = {r: i for i, r in enumerate(reps)}
    hom_map = tuple(index_of[rep[a]] for a in range(ring.size))
    add = [[index_of[rep[ring.add[x][y]]] for y in reps] for x in reps]
    mul = [[index_of[rep[ring.mul[x][y]]] for y in reps] for x in reps]
    names = [ring.names[r] for r in reps]
    spec = None
    if ring.spec:
        gens = ",".join(ring.names[m] for m in imembers if m != ring.zero)
        spec = f"quot({ring.spec},[{gens}])"
    q = FiniteRing(add, mul, index_of[rep[ring.zero]], index_of[rep[ring.one]],
                   names, spec=spec)
    return q, RingHom(ring, q, hom_map)


def trivial_extension(ring: FiniteRing, module_ideal: Ideal) -> FiniteRing:
    """Ring of pairs (r, m), m from the ideal, with (r,m)(r',m') = (rr', rm'+r'm)."""
    if module_ideal.ring is not ring:
        raise OwnershipError("module ideal belongs to a different ring")
    mm = module_ideal.members()
    pos = {m: i for i, m in enumerate(mm)}
    width = len(mm)
    size = ring.size * width
    _check_size(size)

    def enc(r: int, m: int) -> int:
        return r * width + pos[m]

    pairs = [(r, m) for r in range(ring.size) for m in mm]
    add = [
        [enc(ring.add[r][r2], ring.add[m][m2]) for (r2, m2) in pairs]
        for (r, m) in pairs
    ]
    mul = [
        [enc(ring.mul[r][r2], ring.add[ring.mul[r][m2]][ring.mul[r2][m]]) for (r2, m2) in pairs]
        for (r, m) in pairs
    ]
    names = [f"({ring.names[r]},{ring.names[m]})" for (r, m) in pairs]
    zero = enc(ring.zero, ring.zero)
    one = enc(ring.one, ring.zero)
    spec = None
    if ring.spec:
        gens = ",".join(ring.names[m] for m in mm if m != ring.zero)
        spec = f"triv({ring.spec},[{gens}])"
    return FiniteRing(add, mul, zero, one, names, spec=spec)


# -- classical element sets -------------------------------------------------


@lru_cache(maxsize=None)
def classical_sets(ring: FiniteRing) -> ClassicalSets:
    """Idempotents, von Neumann regulars, pi-regulars, regulars, zero-divisors,
    nilpotents, and units, each computed by direct table scans."""
    n = ring.size
    mul, row = ring.mul, ring.row_masks
    zero, one = ring.zero, ring.one
    idem = vnr = pireg = nil = units = zdiv = 0
    for a in range(n):
        a2 = mul[a][a]
        if a2 == a:
            idem |= bit(a)
        if row[a2] >> a & 1:
            vnr |= bit(a)
        if row[a] >> one & 1:
            units |= bit(a)
        pows = ring.power_rows[a]
        if any(pows[k - 1] == zero for k in range(1, n + 1)):
            nil |= bit(a)
        for m in range(1, 2 * n + 1):
            if row[pows[2 * m - 1]] >> pows[m - 1] & 1:
                pireg |= bit(a)
                break
        mrow = mul[a]
        if any(mrow[b] == zero for b in range(n) if b != zero):
            zdiv |= bit(a)
    reg = full_mask(n) & ~zdiv
    return ClassicalSets(idem, vnr, pireg, reg, zdiv, nil, units)


# -- isomorphism -----------------------------------------------------------


def _generated_mask(ring: FiniteRing, seed: int) -> int:
    """Subring closure of ``seed | {0, 1}`` under + and *."""
    mask = seed | bit(ring.zero) | bit(ring.one)
    add, mul = ring.add, ring.mul
    changed = True
    while changed:
        changed = False
        elems = list(members(mask))
        for x in elems:
            ax, mx = add[x], mul[x]
            for y in elems:
                for z in (ax[y], mx[y]):
                    if not mask >> z & 1:
                        mask |= bit(z)
                        changed = True
    return mask


def _generators(ring: FiniteRing) -> list[int]:
    gens: list[int] = []
    cur = _generated_mask(ring, 0)
    full = full_mask(ring.size)
    while cur != full:
        g = next(i for i in range(ring.size) if not cur >> i & 1)
        gens.append(g)
        cur = _generated_mask(ring, cur | bit(g))
    return gens


def _profile(ring: FiniteRing, cs: ClassicalSets, a: int) -> tuple[int, int, int, int]:
    return (
        ring.add_orders[a],
        cs.idem >> a & 1,
        cs.units >> a & 1,
        cs.nil >> a & 1,
    )


def _extend_map(a: FiniteRing, b: FiniteRing, phi: list[int], used: int,
                fresh: list[int]) -> tuple[list[int], int] | None:
    """Propagate ``phi`` over sums and products of known pairs.

    Returns the grown (phi, used-image mask), or None on conflict.
    """
    phi = list(phi)
    queue = list(fresh)
    known = [x for x in range(a.size) if phi[x] >= 0]
    while queue:
        x = queue.pop()
        for y in list(known):
            for sx, sy in ((a.add[x][y], b.add[phi[x]][phi[y]]),
                           (a.mul[x][y], b.mul[phi[x]][phi[y]])):
                cur = phi[sx]
                if cur == -1:
                    if used >> sy & 1:
                        return None
                    phi[sx] = sy
                    used |= bit(sy)
                    known.append(sx)
                    queue.append(sx)
                elif cur != sy:
                    return None
    return phi, used


def is_isomorphic(a: FiniteRing, b: FiniteRing) -> bool:
    """Backtracking isomorphism test with invariant pruning."""
    if a is b:
        return True
    if a.size != b.size:
        return False
    ca, cb = classical_sets(a), classical_sets(b)
    for mask_a, mask_b in (
        (ca.idem, cb.idem), (ca.nil, cb.nil), (ca.units, cb.units), (ca.vnr, cb.vnr)
    ):
        if mask_a.bit_count() != mask_b.bit_count():
            return False
    prof_a = [_profile(a, ca, x) for x in range(a.size)]
    prof_b = [_profile(b, cb, x) for x in range(b.size)]
    if sorted(prof_a) != sorted(prof_b):
        return False

    phi0 = [-1] * a.size
    phi0[a.zero] = b.zero
    used0 = bit(b.zero)
    fresh = [a.zero]
    if a.one != a.zero:
        if b.one == b.zero:
            return False
        phi0[a.one] = b.one
        used0 |= bit(b.one)
        fresh.append(a.one)
    seeded = _extend_map(a, b, phi0, used0, fresh)
    if seeded is None:
        return False
    gens = _generators(a)

    def assign(phi: list[int], used: int, k: int) -> bool:
        if k == len(gens):
            if any(v == -1 for v in phi):
                return False
            inv_ok = used == full_mask(b.size)
            return inv_ok
        g = gens[k]
        if phi[g] != -1:
            return assign(phi, used, k + 1)
        want = prof_a[g]
        for cand in range(b.size):
            if used >> cand & 1 or prof_b[cand] != want:
                continue
            phi2 = list(phi)
            phi2[g] = cand
            grown = _extend_map(a, b, phi2, used | bit(cand), [g])
            if grown is None:
                continue
            if assign(grown[0], grown[1], k + 1):
                return True
        return False

    return assign(seeded[0], seeded[1], 0)
