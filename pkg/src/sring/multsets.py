"""Multiplicative subsets: closure, validation, enumeration."""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

from .bits import bit, mask_of, members
from .errors import DegenerateSetError, EnumerationCapError, OwnershipError
from .rings import FiniteRing, RingHom, classical_sets

ENUMERATION_CAP = 16


@dataclass(frozen=True, eq=False)
class MultiplicativeSet:
    """A subset of a ring containing one and closed under multiplication.

    ``strict`` records that zero is excluded; every definition-level use in
    this package demands strictness except the projected sets of a direct
    product, which may legitimately hit zero.
    """

    ring: FiniteRing
    mask: int
    strict: bool

    def __post_init__(self):
        if not self.mask >> self.ring.one & 1:
            raise DegenerateSetError("multiplicative set must contain one")
        if self.strict and self.mask >> self.ring.zero & 1:
            raise DegenerateSetError("strict multiplicative set contains zero")
        mul = self.ring.mul
        for a in members(self.mask):
            for b in members(self.mask):
                if not self.mask >> mul[a][b] & 1:
                    raise DegenerateSetError(
                        f"set not multiplicatively closed: "
                        f"{self.ring.names[a]}*{self.ring.names[b]} escapes"
                    )

    def members(self) -> tuple[int, ...]:
        return tuple(members(self.mask))

    def __contains__(self, a: int) -> bool:
        return bool(self.mask >> a & 1)

    def __len__(self) -> int:
        return self.mask.bit_count()

    def __repr__(self) -> str:
        inner = ", ".join(self.ring.names[i] for i in self.members())
        return f"{{{inner}}}"


def closure(ring: FiniteRing, gens, strict: bool = True) -> MultiplicativeSet:
    """Smallest multiplicative set containing ``gens`` and one.

    In strict mode, generating zero is an error; the message shows one
    product chain that reaches zero, for diagnosis.
    """
    mask = bit(ring.one)
    # chain[x] remembers how x first arose, as (factor, parent) or None for
    # the generators themselves; used only to build error messages.
    chain: dict[int, tuple[int, int] | None] = {ring.one: None}
    todo = []
    for g in gens:
        if not mask >> g & 1:
            mask |= bit(g)
            chain[g] = None
            todo.append(g)
    mul = ring.mul
    while todo:
        x = todo.pop()
        for y in list(members(mask)):
            z = mul[x][y]
            if not mask >> z & 1:
                mask |= bit(z)
                chain[z] = (x, y)
                todo.append(z)
    if strict and mask >> ring.zero & 1:
        step = chain.get(ring.zero)
        if step is None:
            detail = "zero given as a generator"
        else:
            x, y = step
            detail = f"{ring.names[x]}*{ring.names[y]} = {ring.names[ring.zero]}"
        raise DegenerateSetError(f"closure reaches zero ({detail})")
    return MultiplicativeSet(ring, mask, strict=strict)


@lru_cache(maxsize=None)
def all_mult_subsets(ring: FiniteRing, strict: bool = True) -> tuple[MultiplicativeSet, ...]:
    """Every multiplicatively closed subset containing one, sorted by bitmask.

    Enumerated by breadth-first closure over generator adjunctions, which
    visits each closed set once; exhaustive only for small carriers.
    """
    if ring.size > ENUMERATION_CAP:
        raise EnumerationCapError(
            f"subset enumeration capped at size {ENUMERATION_CAP}, ring has {ring.size}"
        )
    try:
        base = closure(ring, (), strict=strict).mask
    except DegenerateSetError:
        # zero ring under strict mode: {one} itself contains zero
        return ()
    seen = {base}
    frontier = [base]
    while frontier:
        cur = frontier.pop()
        for g in range(ring.size):
            if cur >> g & 1:
                continue
            try:
                grown = closure(ring, list(members(cur | bit(g))), strict=strict).mask
            except DegenerateSetError:
                continue
            if grown not in seen:
                seen.add(grown)
                frontier.append(grown)
    return tuple(
        MultiplicativeSet(ring, m, strict=strict) for m in sorted(seen)
    )


def map_set(f: RingHom, s: MultiplicativeSet) -> MultiplicativeSet:
    """Image of a multiplicative set under a ring homomorphism.

    The image is automatically closed; strictness downgrades to False when
    zero lands in the image (flag, not error).
    """
    if s.ring is not f.source:
        raise OwnershipError("set lives in a different ring than the hom's source")
    mask = mask_of(f.map[a] for a in members(s.mask))
    strict = not mask >> f.target.zero & 1
    return MultiplicativeSet(f.target, mask, strict=strict)


def units_set(ring: FiniteRing) -> MultiplicativeSet:
    mask = classical_sets(ring).units
    return MultiplicativeSet(ring, mask, strict=not mask >> ring.zero & 1)


def one_set(ring: FiniteRing) -> MultiplicativeSet:
    mask = bit(ring.one)
    return MultiplicativeSet(ring, mask, strict=ring.one != ring.zero)
