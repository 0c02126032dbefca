from __future__ import annotations

import pytest

from sring import (
    boolean_decomposition_check,
    classify,
    closure,
    direct_product,
    element_sets,
    ideal_span,
    make_zn,
    max_relative_check,
    quotient,
    reduced_equivalences_check,
    s_field_equivalence_check,
    truncated_poly,
    units_set,
)
from sring.bits import full_mask, members


def _section_three_ring():
    """T[x]/(sx, x^2) over T = Z2 x Z2 with s = (1,0): eight elements."""
    base = truncated_poly(direct_product([make_zn(2), make_zn(2)]), 2)
    sx = base.element_index("(1,0)*x")
    q, _ = quotient(base, ideal_span(base, [sx]))
    return q


def test_z6_at_five_is_uniformly_boolean_with_witness_five():
    z6 = make_zn(6)
    rep = classify(z6, closure(z6, [5]))
    assert not rep.boolean
    assert rep.s_boolean
    assert rep.uniformly_s_boolean.value
    assert rep.uniformly_s_boolean.witness == 5
    # both non-idempotents land in the 5-idempotent layer
    rec = element_sets(z6, closure(z6, [5])).relative_to(5)
    assert rec.s_idem >> 2 & 1 and rec.s_idem >> 5 & 1


def test_z3xz3_at_units_is_boolean_but_not_uniformly():
    ring = direct_product([make_zn(3), make_zn(3)])
    rep = classify(ring, units_set(ring))
    assert rep.s_boolean
    assert not rep.uniformly_s_boolean.value
    ces = rep.uniformly_s_boolean.counterexamples
    assert len(ces) == 4  # one failing element per unit
    es = element_sets(ring, units_set(ring))
    for s, a in ces:
        rec = es.relative_to(s)
        assert not rec.s_idem >> a & 1
        assert ring.mul[a][a] != a


def test_section_three_ring_classification():
    ring = _section_three_ring()
    sset = closure(ring, [ring.element_index("(1,0)")])
    rep = classify(ring, sset)
    assert ring.size == 8
    assert not rep.vnr
    assert rep.uniformly_s_vnr.value
    assert ring.names[rep.uniformly_s_vnr.witness] in {"(1,1)", "(1,0)"}
    assert not rep.uniformly_s_boolean.value
    assert rep.s_field.value  # every element is s-invertible or s-killed


def test_booleans_classify_as_boolean():
    for ring in (make_zn(2), direct_product([make_zn(2), make_zn(2)])):
        rep = classify(ring, closure(ring, []))
        assert rep.boolean
        assert rep.uniformly_s_boolean.value
    assert not classify(make_zn(4), closure(make_zn(4), [])).boolean


def test_classify_requires_a_strict_set():
    z6 = make_zn(6)
    with pytest.raises(ValueError):
        classify(z6, closure(z6, [2, 3], strict=False))


def _pi_exponent_oracle(ring, s, a):
    mul = ring.mul
    acc = ring.one
    powers = [acc]
    for _ in range(4 * ring.size):
        acc = mul[acc][a]
        powers.append(acc)
    for n in range(1, 2 * ring.size + 1):
        an = powers[n]
        if any(mul[s][an] == mul[mul[an][an]][b] for b in range(ring.size)):
            return n
    raise AssertionError("finite rings are always pi-regular")


def test_pi_exponents_match_brute_scan():
    z8 = make_zn(8)
    rep = classify(z8, closure(z8, []))
    assert rep.uniformly_s_pi_regular.value
    s = rep.uniformly_s_pi_regular.witness
    assert rep.pi_exponents == tuple(
        _pi_exponent_oracle(z8, s, a) for a in range(8))
    assert rep.pi_exponents[2] == 3  # 2^3 = 0 in Z8, nothing smaller works


def test_structural_checks_on_sample_rings():
    for ring in (make_zn(6), make_zn(12), direct_product([make_zn(2), make_zn(4)])):
        assert max_relative_check(ring).ok
        for g in (1, ring.size - 1):
            sset = closure(ring, [g])
            assert reduced_equivalences_check(ring, sset).ok
            assert s_field_equivalence_check(ring, sset).ok
            assert boolean_decomposition_check(ring, sset).ok


def test_s_field_flags():
    z6 = make_zn(6)
    assert not classify(z6, closure(z6, [5])).s_field.value
    # a field is an S-field at the trivial S
    z5 = make_zn(5)
    rep = classify(z5, closure(z5, []))
    assert rep.s_field.value
    assert rep.s_integral_domain.value
    # in Z6 at S = {1, 3}: 3 kills the 2-torsion and fixes the rest
    rep = classify(z6, closure(z6, [3]))
    assert rep.s_field.value
    assert rep.s_field.witness == 3


def test_s_field_witness_semantics():
    """s = 3 in Z6 splits the carrier into s-invertible and s-zero parts."""
    z6 = make_zn(6)
    es = element_sets(z6, closure(z6, [3]))
    rec = es.relative_to(3)
    assert rec.s_u | rec.s_zero == full_mask(6)
    assert set(members(rec.s_zero)) == {0, 2, 4}
