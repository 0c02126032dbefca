"""Transfer of S-element sets along homs and product decompositions.

Two regression tests freeze the strict-inclusion instances that keep the
per-s idempotent comparisons in report-only mode: surjections can grow the
target's s-idempotent layer, and non-product S can grow the componentwise
idempotent set.  Everything asserted by the checks themselves stays exact.
"""

from __future__ import annotations

from sring import (
    closure,
    direct_product,
    element_sets,
    hom_transfer_check,
    ideal_span,
    make_zn,
    map_set,
    product_decomposition_check,
    product_projection,
    quotient,
    units_set,
)
from sring.bits import members


def _image_of(hom, mask):
    out = 0
    for a in members(mask):
        out |= 1 << hom.map[a]
    return out


def test_quotient_transfer_z6_to_z3():
    z6 = make_zn(6)
    _, hom = quotient(z6, ideal_span(z6, [3]))
    result = hom_transfer_check(hom, closure(z6, [5]))
    assert result.applicable
    assert result.ok


def test_projection_transfer_on_product():
    ring = direct_product([make_zn(3), make_zn(3)])
    sset = units_set(ring)
    for i in (0, 1):
        result = hom_transfer_check(product_projection(ring, i), sset)
        assert result.applicable
        assert result.ok


def test_transfer_skips_when_s_collapses():
    z4 = make_zn(4)
    _, hom = quotient(z4, ideal_span(z4, [2]))
    # S = {1, 3} maps onto {1, 1}: fine.  S with 2 would map onto 0.
    ok = hom_transfer_check(hom, closure(z4, [3]))
    assert ok.applicable
    z6 = make_zn(6)
    _, to_z2 = quotient(z6, ideal_span(z6, [2]))
    skipped = hom_transfer_check(to_z2, closure(z6, [4]))
    assert not skipped.applicable  # 4 maps to 0 in Z6/(2)


def test_per_s_idempotents_can_grow_under_surjection():
    """Frozen instance: Z24 -> Z24/(12), S generated by 10, s = 4.

    The image of the 4-idempotent layer is a proper subset of the target's
    layer, which is why per-s idempotent equalities are reported, never
    asserted.  The containment direction always holds and the check passes.
    """
    z24 = make_zn(24)
    sset = closure(z24, [10])
    assert set(sset.members()) == {1, 4, 10, 16}
    q, hom = quotient(z24, ideal_span(z24, [12]))
    assert q.size == 12

    rec = element_sets(z24, sset).relative_to(4)
    assert set(members(rec.s_idem)) == {0, 4, 12, 16}

    fs = map_set(hom, sset)
    rec_t = element_sets(q, fs).relative_to(hom.map[4])
    image = _image_of(hom, rec.s_idem)
    assert image & ~rec_t.s_idem == 0  # inclusion, as asserted
    assert rec_t.s_idem & ~image != 0  # strictness: equality genuinely fails

    result = hom_transfer_check(hom, sset)
    assert result.ok
    assert "idem" in result.detail  # the miss is surfaced as a note


def test_global_equalities_hold_under_surjection():
    z24 = make_zn(24)
    sset = closure(z24, [10])
    _, hom = quotient(z24, ideal_span(z24, [12]))
    fs = map_set(hom, sset)
    es, es_t = element_sets(z24, sset), element_sets(hom.target, fs)
    for field in ("s_u", "s_vnr", "s_pireg"):
        assert _image_of(hom, getattr(es, field)) == getattr(es_t, field), field


def test_product_decomposition_on_full_product_s():
    ring = direct_product([make_zn(2), make_zn(4)])
    for sset in (units_set(ring), closure(ring, [ring.element_index("(1,3)")])):
        result = product_decomposition_check(ring, sset)
        assert result.applicable
        assert result.ok


def test_product_decomposition_skips_non_products():
    z6 = make_zn(6)
    result = product_decomposition_check(z6, closure(z6, [5]))
    assert not result.applicable


def test_diagonal_s_breaks_idempotent_equality():
    """Frozen instance: Z3 x Z3 with S generated by (2,2).

    S projects onto {1,2} in each factor, but the product of the projections
    is strictly bigger than S, and the componentwise idempotent set strictly
    contains the global one.  The check downgrades that comparison to a note.
    """
    ring = direct_product([make_zn(3), make_zn(3)])
    gen = ring.element_index("(2,2)")
    sset = closure(ring, [gen])
    assert len(list(sset.members())) == 2  # {(1,1), (2,2)}

    es = element_sets(ring, sset)
    factor_idem = 0
    projs = [product_projection(ring, i) for i in (0, 1)]
    fsets = [map_set(p, sset) for p in projs]
    for a in range(ring.size):
        if all(element_sets(p.target, fs).s_idem >> p.map[a] & 1
               for p, fs in zip(projs, fsets)):
            factor_idem |= 1 << a
    assert es.s_idem & ~factor_idem == 0
    assert factor_idem & ~es.s_idem != 0  # e.g. (2,1): each side idem, pair not

    result = product_decomposition_check(ring, sset)
    assert result.ok
    assert "idem" in result.detail
