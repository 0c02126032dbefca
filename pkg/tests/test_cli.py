"""Spec-string parsing and command-line behavior, including exit codes."""

from __future__ import annotations

import json

import pytest

from sring import SpecSyntaxError
from sring.cli import parse_ring_spec, parse_s_spec, run


def test_parse_simple_and_product_specs():
    assert parse_ring_spec("Z6").size == 6
    assert parse_ring_spec("Z3 x Z3").size == 9
    assert parse_ring_spec("Z2 x Z2 x Z3").size == 12
    assert parse_ring_spec("poly(Z2,2)").size == 4
    assert parse_ring_spec("poly(Z2 x Z2, 2)").size == 16
    assert parse_ring_spec("triv(Z2,[1])").size == 4


def test_parse_quotient_spec_builds_the_eight_element_ring():
    ring = parse_ring_spec("quot(poly(Z2 x Z2,2),[(1,0)*x])")
    assert ring.size == 8
    assert ring.spec == "quot(poly(Z2 x Z2,2),[(1,0)*x])"
    # round-trip: the printed spec parses back to an isomorphic (equal) table
    again = parse_ring_spec(ring.spec)
    assert again.add == ring.add and again.mul == ring.mul


def test_parse_errors_carry_positions():
    for text in ("", "Z", "Zx", "Q8", "poly(Z2)", "poly(Z2,two)",
                 "quot(Z6,3)", "poly(Z2,2", "Z4 x", "triv(Z2,[9])"):
        with pytest.raises(SpecSyntaxError):
            parse_ring_spec(text)
    try:
        parse_ring_spec("Z6 x what")
    except SpecSyntaxError as exc:
        assert exc.position == 5
    else:
        raise AssertionError("expected a syntax error")


def test_parse_s_spec_closes_generators():
    z10 = parse_ring_spec("Z10")
    sset = parse_s_spec(z10, "{4}")
    assert set(sset.members()) == {1, 4, 6}
    assert set(parse_s_spec(z10, "{}").members()) == {1}
    with pytest.raises(SpecSyntaxError):
        parse_s_spec(z10, "4")
    ring = parse_ring_spec("Z3 x Z3")
    sset = parse_s_spec(ring, "{(1,2),(2,1)}")
    assert len(list(sset.members())) == 4


def test_run_classify_text_and_exit_zero(capsys):
    code = run(["classify", "--ring", "Z6", "--s", "{5}"])
    out = capsys.readouterr().out
    assert code == 0
    assert "uniformly_s_boolean: true  (witness s=5)" in out
    assert "idempotents: {0, 1, 3, 4}" in out


def test_run_classify_json_schema(capsys):
    code = run(["classify", "--ring", "Z6", "--s", "{5}", "--json"])
    assert code == 0
    payload = json.loads(capsys.readouterr().out)
    assert list(payload) == ["ring", "size", "s_members", "sets",
                             "per_s_idempotent", "classifications",
                             "pi_exponents"]
    assert payload["ring"] == "Z6"
    assert payload["size"] == 6
    assert payload["s_members"] == ["1", "5"]
    assert payload["sets"]["idempotents"] == ["0", "1", "3", "4"]
    flag = payload["classifications"]["uniformly_s_boolean"]
    assert flag == {"flag": True, "witness": "5"}


def test_run_usage_errors_exit_two(capsys):
    assert run(["classify", "--ring", "Z0", "--s", "{}"]) == 2
    assert "error:" in capsys.readouterr().err
    assert run(["classify", "--ring", "Z6", "--s", "{2,3}"]) == 2
    err = capsys.readouterr().err
    assert "error:" in err
    assert run(["classify", "--ring", "Z6", "--s", "{7}"]) == 2
    assert run(["nonsense"]) == 2
    capsys.readouterr()


def test_run_witness_and_none(capsys):
    assert run(["witness", "--ring", "Z6", "--s", "{5}",
                "--elem", "2", "--prop", "vnr"]) == 0
    assert "witness: s=1, b=2" in capsys.readouterr().out
    assert run(["witness", "--ring", "Z4", "--s", "{}",
                "--elem", "2", "--prop", "vnr"]) == 0
    assert "witness: none" in capsys.readouterr().out


def test_run_ideals_table(capsys):
    assert run(["ideals", "--ring", "Z6", "--s", "{5}", "--json"]) == 0
    payload = json.loads(capsys.readouterr().out)
    rows = {tuple(r["members"]): r for r in payload["ideals"]}
    assert rows[("0", "3")]["s_prime"] == "1"
    assert rows[("0", "3")]["s_maximal"] == "1"
    assert rows[("0",)]["s_prime"] is None
    assert rows[("0", "1", "2", "3", "4", "5")]["disjoint_from_s"] is False


def test_run_localize_summary(capsys):
    assert run(["localize", "--ring", "Z6", "--s", "{3}", "--json"]) == 0
    payload = json.loads(capsys.readouterr().out)
    loc = payload["localization"]
    assert loc["size"] == 2
    assert loc["iso_zn"] == "Z2"
    assert loc["kernel"] == ["0", "2", "4"]
    assert loc["degenerate"] is False


def test_run_verify_small_passes(capsys):
    assert run(["verify", "--corpus", "small"]) == 0
    out = capsys.readouterr().out
    assert "RESULT: all propositions hold" in out
    assert "FAIL" not in out
    assert run(["verify", "--corpus", "small",
                "--props", "inclusion_chain,sandwich"]) == 0
    capsys.readouterr()
    assert run(["verify", "--corpus", "small", "--props", "bogus"]) == 2
    capsys.readouterr()


def test_run_search_exits_zero_on_findings(capsys):
    assert run(["search", "--target", "SVNR_ADDITIVE_CLOSURE",
                "--max-size", "8"]) == 0
    out = capsys.readouterr().out
    assert "[counterexample] Z4 S={1}" in out
    assert "1+1=2 is not S-vnr" in out
    assert run(["search", "--target", "IDEM_NIL_DECOMP",
                "--max-size", "8"]) == 0
    capsys.readouterr()


def test_allow_zero_flag_gates_degenerate_sets(capsys):
    assert run(["sets", "--ring", "Z6", "--s", "{2,3}"]) == 2
    capsys.readouterr()
    assert run(["sets", "--ring", "Z6", "--s", "{2,3}",
                "--allow-zero-in-s"]) == 0
    out = capsys.readouterr().out
    assert "0" in out
    # classification stays strict-only even when zero is allowed in
    assert run(["classify", "--ring", "Z6", "--s", "{2,3}",
                "--allow-zero-in-s"]) == 2
    capsys.readouterr()
