from __future__ import annotations

import pytest

from sring import (
    DegenerateSetError,
    EnumerationCapError,
    all_mult_subsets,
    closure,
    ideal_span,
    make_zn,
    map_set,
    one_set,
    quotient,
    units_set,
)
from sring.bits import members


def test_closure_of_four_in_z10():
    # 4*4 = 6, 4*6 = 4, 6*6 = 6: the closure stabilizes at {1, 4, 6}
    z10 = make_zn(10)
    assert set(closure(z10, [4]).members()) == {1, 4, 6}


def test_closure_is_idempotent_and_monotone():
    z12 = make_zn(12)
    for g in range(1, 12):
        try:
            first = closure(z12, [g])
        except DegenerateSetError:
            continue
        again = closure(z12, list(first.members()))
        assert again.mask == first.mask
        assert first.mask >> g & 1


def test_closure_rejects_zero_chains_in_strict_mode():
    z6 = make_zn(6)
    with pytest.raises(DegenerateSetError):
        closure(z6, [2, 3])
    # the same generators are fine when strictness is waived
    lax = closure(z6, [2, 3], strict=False)
    assert lax.mask >> 0 & 1


def _closed_subsets_oracle(n):
    """All subsets of Z_n containing 1, excluding 0, closed under product."""
    out = set()
    for mask in range(2**n):
        if not mask >> 1 & 1 or mask & 1:
            continue
        elems = [a for a in range(n) if mask >> a & 1]
        if all(mask >> (a * b) % n & 1 for a in elems for b in elems):
            out.add(mask)
    return out


def test_all_mult_subsets_is_exhaustive():
    for n in (2, 3, 4, 5, 6, 8):
        got = {s.mask for s in all_mult_subsets(make_zn(n))}
        assert got == _closed_subsets_oracle(n), f"mismatch for Z{n}"
    assert len(all_mult_subsets(make_zn(6))) == 7
    assert [sorted(members(s.mask)) for s in all_mult_subsets(make_zn(4))] \
        == [[1], [1, 3]]


def test_all_mult_subsets_caps_large_rings():
    with pytest.raises(EnumerationCapError):
        all_mult_subsets(make_zn(17))


def test_map_set_pushes_forward_along_quotient():
    z6 = make_zn(6)
    q, hom = quotient(z6, ideal_span(z6, [3]))
    image = map_set(hom, closure(z6, [5]))
    assert set(image.members()) == {hom.map[1], hom.map[5]}
    assert image.strict


def test_units_and_one_sets():
    z6 = make_zn(6)
    assert set(units_set(z6).members()) == {1, 5}
    assert set(one_set(z6).members()) == {1}
    # the zero ring's only unit is 0 = 1, so strictness must drop out
    z1 = make_zn(1)
    assert units_set(z1).strict is False
    assert all_mult_subsets(z1) == ()
