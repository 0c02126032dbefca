from __future__ import annotations

import json

import pytest

from sring import (
    PROPOSITION_IDS,
    SpecSyntaxError,
    run_verification,
    small_config,
)


def test_small_corpus_is_clean():
    report = run_verification(small_config(), corpus_label="small")
    assert report.ok
    assert report.ring_count == 12
    assert report.pair_count == 47
    assert [o.prop for o in report.outcomes] == list(PROPOSITION_IDS)
    for outcome in report.outcomes:
        assert outcome.violations == ()
        assert outcome.checked + outcome.not_applicable > 0


def test_ungated_propositions_check_every_pair():
    report = run_verification(small_config(), corpus_label="small")
    by_id = {o.prop: o for o in report.outcomes}
    for prop in ("inclusion_chain", "mult_closure", "vnr_five_way",
                 "s_max_implies_s_prime", "localize_canonical_kernel"):
        assert by_id[prop].checked == report.pair_count
        assert by_id[prop].not_applicable == 0
    assert by_id["max_intersections"].checked == report.ring_count


def test_prop_filter_and_unknown_ids():
    report = run_verification(small_config(), ("inclusion_chain",))
    assert [o.prop for o in report.outcomes] == ["inclusion_chain"]
    with pytest.raises(SpecSyntaxError):
        run_verification(small_config(), ("inclusion_chain", "bogus_prop"))


def test_report_serializes_deterministically():
    a = run_verification(small_config(), corpus_label="small").as_dict()
    b = run_verification(small_config(), corpus_label="small").as_dict()
    assert json.dumps(a, indent=2) == json.dumps(b, indent=2)
    assert a["ok"] is True
    assert {p["id"] for p in a["propositions"]} == set(PROPOSITION_IDS)
