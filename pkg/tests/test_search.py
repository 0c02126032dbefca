from __future__ import annotations

import pytest

from sring import (
    CorpusConfig,
    SpecSyntaxError,
    closure,
    element_sets,
    enumerate_corpus,
    find_instances,
    make_zn,
    small_config,
    std_config,
)
from sring.bits import members
from sring.search import corpus_rings


def test_corpus_is_deterministic():
    first = [(ring.spec, sset.mask)
             for ring, sset in enumerate_corpus(std_config(seed=7))]
    second = [(ring.spec, sset.mask)
              for ring, sset in enumerate_corpus(std_config(seed=7))]
    assert first == second
    assert len(first) > 400


def test_corpus_respects_families_and_size():
    cfg = CorpusConfig(max_ring_size=6, families=("zn",))
    pairs = [(ring.spec, tuple(members(sset.mask)))
             for ring, sset in enumerate_corpus(cfg)]
    specs = {spec for spec, _ in pairs}
    assert specs == {"Z2", "Z3", "Z4", "Z5", "Z6"}
    assert ("Z6", (1, 5)) in pairs
    assert ("Z6", (1, 3)) in pairs
    assert ("Z6", (1, 2, 4)) in pairs
    empty = CorpusConfig(max_ring_size=6, families=())
    assert list(enumerate_corpus(empty)) == []


def test_products_are_deduplicated_up_to_isomorphism():
    cfg = CorpusConfig(max_ring_size=9, families=("zn", "products"))
    specs = [ring.spec for ring in corpus_rings(cfg)]
    assert "Z2 x Z2" in specs
    assert "Z3 x Z3" in specs
    assert "Z2 x Z3" not in specs  # isomorphic to Z6, which arrives first
    assert len(specs) == len(set(specs))


def test_sampled_subsets_reproduce_with_seed():
    cfg_a = std_config(seed=3)
    cfg_b = std_config(seed=3)
    cfg_c = std_config(seed=4)
    take = lambda cfg: [(r.spec, s.mask) for r, s in enumerate_corpus(cfg)
                        if r.size > 12]
    assert take(cfg_a) == take(cfg_b)
    # a different seed may or may not change the draws; the call must still work
    assert len(take(cfg_c)) > 0


def test_svnr_target_finds_the_z4_failure():
    findings = find_instances("SVNR_ADDITIVE_CLOSURE", small_config())
    by_key = {(f.ring_spec, f.s_members): f for f in findings}
    hit = by_key[("Z4", ("1",))]
    assert hit.verdict == "counterexample"
    assert hit.evidence["a"] == "1"
    assert hit.evidence["b"] == "1"
    assert hit.evidence["sum"] == "2"
    assert hit.evidence["two_is_S_invertible"] == "false"
    # replay: 2 really is outside S-vnr(Z4) at S = {1}
    z4 = make_zn(4)
    es = element_sets(z4, closure(z4, []))
    assert not es.s_vnr >> 2 & 1
    # fields only describe the finding; no counterexample ever raises
    assert all(f.verdict in {"counterexample", "positive-instance"}
               for f in findings)


def test_idem_nil_decomposition_has_no_small_counterexample():
    findings = find_instances("IDEM_NIL_DECOMP", small_config())
    assert findings
    assert {f.verdict for f in findings} == {"positive-instance"}
    specs = {f.ring_spec for f in findings}
    assert "Z2" in specs and "Z2 x Z2" in specs  # Boolean rings qualify


def test_hypothesis_necessity_reports_z4():
    findings = find_instances("HYPOTHESIS_NECESSITY", small_config())
    hit = next(f for f in findings
               if f.ring_spec == "Z4" and f.s_members == ("1", "3"))
    assert hit.verdict == "positive-instance"
    assert hit.evidence["offending_unit"] == "3"
    assert hit.evidence["not_S_idempotent"] == "2"
    # replay: S-idem and plain nilpotents cover Z4, yet 2 escapes S-idem
    z4 = make_zn(4)
    es = element_sets(z4, closure(z4, [3]))
    assert set(members(es.s_idem)) | {0, 2} == {0, 1, 2, 3}
    assert not es.s_idem >> 2 & 1


def test_unknown_target_is_a_usage_error():
    with pytest.raises(SpecSyntaxError):
        find_instances("NO_SUCH_TARGET", small_config())


def test_config_validation():
    with pytest.raises(SpecSyntaxError):
        CorpusConfig(max_ring_size=6, families=("zn", "bogus"))
    with pytest.raises(SpecSyntaxError):
        CorpusConfig(max_ring_size=0)
    with pytest.raises(SpecSyntaxError):
        CorpusConfig(max_ring_size=6, subsets_mode="everything")
