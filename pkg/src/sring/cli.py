"""Command-line front end: spec parsing, dispatch, text/JSON reports.

Ring specs follow a tiny grammar::

    spec  := atom ("x" atom)*
    atom  := "Z" INT
           | "poly(" spec "," INT ")"
           | "quot(" spec ",[" elements "])"
           | "triv(" spec ",[" elements "])"

`x` products are left-associative; element lists use the canonical display
names of the base ring (or bare carrier indices).  Multiplicative sets are
given as generator lists in braces and closed automatically.
"""

from __future__ import annotations

import argparse
import json
import sys

from .bits import members
from .classify import ClassificationReport, UniformFlag, classify
from .elements import WitnessKind, element_sets, witness_for
from .errors import SpecSyntaxError, WorkbenchError
from .ideals import all_ideals, ideal_verdict
from .localize import localize
from .multsets import MultiplicativeSet, closure
from .rings import (
    FiniteRing,
    classical_sets,
    direct_product,
    ideal_span,
    is_isomorphic,
    make_zn,
    quotient,
    trivial_extension,
    truncated_poly,
)
from .search import TARGETS, find_instances, small_config, std_config
from .verify import PROPOSITION_IDS, run_verification

_WITNESS_PROPS = {
    "u": WitnessKind.S_INVERTIBLE,
    "idem": WitnessKind.S_IDEMPOTENT,
    "vnr": WitnessKind.S_VNR,
    "pireg": WitnessKind.S_PI_REGULAR,
    "nil": WitnessKind.S_NILPOTENT,
    "zero": WitnessKind.S_ZERO,
}


# ---------------------------------------------------------------------------
# spec parsing


def _split_top(text: str, sep: str, offset: int) -> list[tuple[str, int]]:
    """Split on ``sep`` occurrences at bracket depth zero, keeping offsets."""
    pieces: list[tuple[str, int]] = []
    depth = 0
    start = 0
    for i, ch in enumerate(text):
        if ch in "([":
            depth += 1
        elif ch in ")]":
            depth -= 1
            if depth < 0:
                raise SpecSyntaxError(f"unbalanced '{ch}'", offset + i)
        elif ch == sep and depth == 0:
            pieces.append((text[start:i], offset + start))
            start = i + 1
    if depth != 0:
        raise SpecSyntaxError("unbalanced '('", offset + len(text))
    pieces.append((text[start:], offset + start))
    return pieces


def _lstrip(text: str, offset: int) -> tuple[str, int]:
    stripped = text.lstrip()
    return stripped.rstrip(), offset + len(text) - len(stripped)


def _parse_int(text: str, offset: int, what: str) -> int:
    text, offset = _lstrip(text, offset)
    if not text.isdigit():
        raise SpecSyntaxError(f"expected {what}, got {text!r}", offset)
    return int(text)


def _parse_elements(ring: FiniteRing, text: str, offset: int) -> list[int]:
    text, offset = _lstrip(text, offset)
    if not (text.startswith("[") and text.endswith("]")):
        raise SpecSyntaxError("expected a [...] element list", offset)
    inner = text[1:-1]
    if not inner.strip():
        return []
    out = []
    for piece, at in _split_top(inner, ",", offset + 1):
        name, at = _lstrip(piece, at)
        if not name:
            raise SpecSyntaxError("empty element name", at)
        try:
            out.append(ring.element_index(name))
        except WorkbenchError as exc:
            raise SpecSyntaxError(str(exc), at) from exc
    return out


def _parse_call(text: str, offset: int, head: str) -> list[tuple[str, int]]:
    """Return the comma-split arguments of ``head(...)``."""
    if not text.endswith(")"):
        raise SpecSyntaxError(f"missing ')' after {head}(...", offset + len(text))
    inner = text[len(head) + 1:-1]
    return _split_top(inner, ",", offset + len(head) + 1)


def _parse_atom(text: str, offset: int) -> FiniteRing:
    text, offset = _lstrip(text, offset)
    if not text:
        raise SpecSyntaxError("empty ring spec", offset)
    if text[0] in "Zz" and text[1:].isdigit():
        return make_zn(int(text[1:]))
    for head in ("poly", "quot", "triv"):
        if text.startswith(head + "("):
            args = _parse_call(text, offset, head)
            if len(args) != 2:
                raise SpecSyntaxError(f"{head}() takes two arguments", offset)
            base = _parse_spec(args[0][0], args[0][1])
            if head == "poly":
                return truncated_poly(base, _parse_int(*args[1], "a degree"))
            elems = _parse_elements(base, *args[1])
            ideal = ideal_span(base, elems)
            if head == "quot":
                return quotient(base, ideal)[0]
            return trivial_extension(base, ideal)
    raise SpecSyntaxError(f"unrecognized ring spec {text!r}", offset)


def _parse_spec(text: str, offset: int = 0) -> FiniteRing:
    pieces = _split_top(text, "x", offset)
    rings = [_parse_atom(piece, at) for piece, at in pieces]
    if len(rings) == 1:
        return rings[0]
    return direct_product(rings)


def parse_ring_spec(text: str) -> FiniteRing:
    """Build the ring named by ``text`` (grammar in the module docstring)."""
    return _parse_spec(text, 0)


def parse_s_spec(ring: FiniteRing, text: str,
                 allow_zero: bool = False) -> MultiplicativeSet:
    """Parse ``"{g1,g2,...}"`` and return the closure of the generators."""
    text, offset = _lstrip(text, 0)
    if not (text.startswith("{") and text.endswith("}")):
        raise SpecSyntaxError("expected a {...} generator list", offset)
    inner = text[1:-1]
    gens = []
    if inner.strip():
        for piece, at in _split_top(inner, ",", offset + 1):
            name, at = _lstrip(piece, at)
            if not name:
                raise SpecSyntaxError("empty generator name", at)
            try:
                gens.append(ring.element_index(name))
            except WorkbenchError as exc:
                raise SpecSyntaxError(str(exc), at) from exc
    return closure(ring, gens, strict=not allow_zero)


# ---------------------------------------------------------------------------
# report helpers


def _names(ring: FiniteRing, mask: int) -> list[str]:
    return [ring.names[a] for a in members(mask)]

def _setline(label: str, names: list[str]) -> str:
    return f"{label}: {{{', '.join(names)}}}"


def _flag_dict(ring: FiniteRing, flag: UniformFlag | bool) -> dict:
    if isinstance(flag, bool):
        return {"flag": flag, "witness": None}
    out = {"flag": flag.value,
           "witness": None if flag.witness is None else ring.names[flag.witness]}
    if not flag.value:
        out["counterexamples"] = [
            {"s": ring.names[s], "elem": ring.names[a]}
            for s, a in flag.counterexamples]
    return out


def _flag_text(ring: FiniteRing, name: str, flag: UniformFlag | bool) -> str:
    if isinstance(flag, bool):
        return f"  {name}: {str(flag).lower()}"
    if flag.value:
        suffix = "" if flag.witness is None else f"  (witness s={ring.names[flag.witness]})"
        return f"  {name}: true{suffix}"
    ces = ", ".join(f"s={ring.names[s]}→{ring.names[a]}"
                    for s, a in flag.counterexamples)
    suffix = f"  (counterexamples: {ces})" if ces else ""
    return f"  {name}: false{suffix}"


_CLASSIFICATION_FIELDS = (
    "boolean", "vnr", "pi_regular", "s_boolean",
    "uniformly_s_boolean", "uniformly_s_vnr", "uniformly_s_pi_regular",
    "s_field", "s_integral_domain",
    "s_reduced", "weakly_s_reduced", "uniformly_s_reduced",
)


def _emit(report: dict, text_lines: list[str], as_json: bool) -> None:
    if as_json:
        print(json.dumps(report, indent=2))
    else:
        print("\n".join(text_lines))


def _header_lines(ring: FiniteRing, sset: MultiplicativeSet) -> list[str]:
    return [
        f"ring: {ring.spec or '<unnamed>'}  (size {ring.size})",
        _setline("S", _names(ring, sset.mask)),
    ]


def _base_report(ring: FiniteRing, sset: MultiplicativeSet) -> dict:
    return {
        "ring": ring.spec or "<unnamed>",
        "size": ring.size,
        "s_members": _names(ring, sset.mask),
    }


# ---------------------------------------------------------------------------
# subcommands


def _cmd_classify(ring: FiniteRing, sset: MultiplicativeSet,
                  as_json: bool) -> int:
    rep: ClassificationReport = classify(ring, sset)
    es = element_sets(ring, sset)
    cs = classical_sets(ring)

    report = _base_report(ring, sset)
    report["sets"] = {
        "idempotents": _names(ring, cs.idem),
        "s_invertible": _names(ring, es.s_u),
        "s_idempotent": _names(ring, es.s_idem),
        "s_vnr": _names(ring, es.s_vnr),
        "s_pi_regular": _names(ring, es.s_pireg),
        "s_nilpotent": _names(ring, es.s_nil),
        "s_zero": _names(ring, es.s_zero),
    }
    report["per_s_idempotent"] = {
        ring.names[rec.s]: _names(ring, rec.s_idem) for rec in es.per_s}
    report["classifications"] = {
        name: _flag_dict(ring, getattr(rep, name))
        for name in _CLASSIFICATION_FIELDS}
    report["pi_exponents"] = list(rep.pi_exponents)

    lines = _header_lines(ring, sset)
    lines.append(_setline("idempotents", report["sets"]["idempotents"]))
    lines.append("s-idempotent elements, per s:")
    for rec in es.per_s:
        lines.append("  " + _setline(f"s={ring.names[rec.s]}",
                                     _names(ring, rec.s_idem)))
    lines.append("classifications:")
    for name in _CLASSIFICATION_FIELDS:
        lines.append(_flag_text(ring, name, getattr(rep, name)))
    if rep.pi_exponents:
        lines.append(f"pi-exponents: {', '.join(map(str, rep.pi_exponents))}")
    _emit(report, lines, as_json)
    return 0


_SET_FIELDS = ("s_u", "s_idem", "s_vnr", "s_pireg", "s_nil", "s_zero")
_SET_LABELS = {
    "s_u": "s_invertible", "s_idem": "s_idempotent", "s_vnr": "s_vnr",
    "s_pireg": "s_pi_regular", "s_nil": "s_nilpotent", "s_zero": "s_zero",
}


def _cmd_sets(ring: FiniteRing, sset: MultiplicativeSet, as_json: bool) -> int:
    es = element_sets(ring, sset)
    cs = classical_sets(ring)
    report = _base_report(ring, sset)
    report["sets"] = {
        "units": _names(ring, cs.units),
        "idempotents": _names(ring, cs.idem),
        "vnr": _names(ring, cs.vnr),
        "pi_regular": _names(ring, cs.pireg),
        "nilpotents": _names(ring, cs.nil),
        "zero_divisors": _names(ring, cs.zero_divisors),
    }
    report["sets"].update(
        (_SET_LABELS[f], _names(ring, getattr(es, f))) for f in _SET_FIELDS)
    report["per_s"] = {
        ring.names[rec.s]: {
            _SET_LABELS[f]: _names(ring, getattr(rec, f)) for f in _SET_FIELDS}
        for rec in es.per_s}

    lines = _header_lines(ring, sset)
    lines.append("classical sets:")
    for key in ("units", "idempotents", "vnr", "pi_regular", "nilpotents",
                "zero_divisors"):
        lines.append("  " + _setline(key, report["sets"][key]))
    lines.append("S-element sets (union over s):")
    for f in _SET_FIELDS:
        lines.append("  " + _setline(_SET_LABELS[f], _names(ring, getattr(es, f))))
    for rec in es.per_s:
        lines.append(f"at s={ring.names[rec.s]}:")
        for f in _SET_FIELDS:
            lines.append("    " + _setline(_SET_LABELS[f],
                                           _names(ring, getattr(rec, f))))
    _emit(report, lines, as_json)
    return 0


def _cmd_witness(ring: FiniteRing, sset: MultiplicativeSet, elem: str,
                 prop: str, as_json: bool) -> int:
    a = ring.element_index(elem)
    wit = witness_for(ring, sset, a, _WITNESS_PROPS[prop])
    report = _base_report(ring, sset)
    report["elem"] = ring.names[a]
    report["prop"] = prop
    if wit is None:
        report["witness"] = None
        detail = "none"
    else:
        report["witness"] = {"s": ring.names[wit.s]}
        parts = [f"s={ring.names[wit.s]}"]
        if wit.b is not None:
            report["witness"]["b"] = ring.names[wit.b]
            parts.append(f"b={ring.names[wit.b]}")
        if wit.n is not None:
            report["witness"]["n"] = wit.n
            parts.append(f"n={wit.n}")
        detail = ", ".join(parts)
    lines = _header_lines(ring, sset)
    lines.append(f"element: {ring.names[a]}")
    lines.append(f"property: {prop}")
    lines.append(f"witness: {detail}")
    _emit(report, lines, as_json)
    return 0


def _cmd_ideals(ring: FiniteRing, sset: MultiplicativeSet,
                as_json: bool) -> int:
    rows = []
    for ideal in all_ideals(ring):
        verdict = ideal_verdict(ring, sset, ideal)
        rows.append({
            "members": _names(ring, ideal.mask),
            "disjoint_from_s": verdict.disjoint_from_s,
            "s_prime": None if verdict.s_prime is None
            else ring.names[verdict.s_prime],
            "s_maximal": None if verdict.s_maximal is None
            else ring.names[verdict.s_maximal],
            "s_primary": None if verdict.s_primary is None
            else ring.names[verdict.s_primary],
            "radical": _names(ring, verdict.radical.mask),
        })
    report = _base_report(ring, sset)
    report["ideals"] = rows

    lines = _header_lines(ring, sset)
    lines.append(f"ideals: {len(rows)}")
    for row in rows:
        flags = ", ".join(
            f"{key}={row[key] if row[key] is not None else 'none'}"
            for key in ("s_prime", "s_maximal", "s_primary"))
        lines.append(
            f"  {{{', '.join(row['members'])}}}: "
            f"disjoint={'yes' if row['disjoint_from_s'] else 'no'}, {flags}, "
            f"radical={{{', '.join(row['radical'])}}}")
    _emit(report, lines, as_json)
    return 0


def _cmd_localize(ring: FiniteRing, sset: MultiplicativeSet,
                  as_json: bool) -> int:
    loc = localize(ring, sset)
    zn = make_zn(loc.ring.size)
    iso = f"Z{loc.ring.size}" if is_isomorphic(loc.ring, zn) else None
    kernel = _names(ring, loc.canonical.kernel_mask())
    report = _base_report(ring, sset)
    report["localization"] = {
        "size": loc.ring.size,
        "degenerate": loc.degenerate,
        "elements": list(loc.ring.names),
        "kernel": kernel,
        "iso_zn": iso,
    }
    lines = _header_lines(ring, sset)
    lines.append(f"localization size: {loc.ring.size}"
                 + ("  (degenerate: 0 in S)" if loc.degenerate else ""))
    lines.append(_setline("elements", list(loc.ring.names)))
    lines.append(_setline("canonical-map kernel", kernel))
    lines.append(f"isomorphic to: {iso if iso else 'no Z_n of matching size'}")
    _emit(report, lines, as_json)
    return 0


def _cmd_verify(corpus: str, props_arg: str, seed: int,
                max_size: int | None, as_json: bool) -> int:
    if corpus == "small":
        config = small_config(seed)
    else:
        config = std_config(seed) if max_size is None else std_config(
            seed, max_ring_size=max_size)
    props = None
    if props_arg != "all":
        props = tuple(p.strip() for p in props_arg.split(",") if p.strip())
        unknown = set(props) - set(PROPOSITION_IDS)
        if unknown:
            raise SpecSyntaxError(
                f"unknown propositions: {', '.join(sorted(unknown))}")
    report = run_verification(config, props, corpus_label=corpus)

    if as_json:
        print(json.dumps(report.as_dict(), indent=2))
        return 0 if report.ok else 1

    print(f"corpus: {report.corpus}  rings={report.ring_count}  "
          f"pairs={report.pair_count}")
    for out in report.outcomes:
        status = "PASS" if out.ok else "FAIL"
        line = (f"{status} {out.prop:<28} scope={out.scope:<4} "
                f"checked={out.checked} skipped={out.not_applicable}")
        if not out.ok:
            first = out.violations[0]
            where = first.ring_spec
            if first.s_members is not None:
                where += " S={" + ", ".join(first.s_members) + "}"
            line += f"  violations={len(out.violations)}; first: {where}: {first.detail}"
        print(line)
    print("RESULT: " + ("all propositions hold"
                        if report.ok else "violations found"))
    return 0 if report.ok else 1


def _cmd_search(target: str, seed: int, max_size: int | None,
                as_json: bool) -> int:
    config = std_config(seed) if max_size is None else std_config(
        seed, max_ring_size=max_size)
    findings = find_instances(target, config)
    refuted = target == "IDEM_NIL_DECOMP" and any(
        f.verdict == "counterexample" for f in findings)

    if as_json:
        print(json.dumps({"target": target,
                          "findings": [f.as_dict() for f in findings]},
                         indent=2))
        return 1 if refuted else 0

    print(f"target: {target}  findings={len(findings)}")
    for f in findings:
        ev = ", ".join(f"{k}={v}" for k, v in f.evidence.items())
        print(f"  [{f.verdict}] {f.ring_spec} "
              f"S={{{', '.join(f.s_members)}}}: {ev}")
    if not findings:
        print("  (none)")
    return 1 if refuted else 0


# ---------------------------------------------------------------------------
# argument plumbing


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="sring",
        description="Finite-ring workbench for S-element classification.")
    sub = parser.add_subparsers(dest="command", required=True)

    def instance_parser(name: str, help_text: str) -> argparse.ArgumentParser:
        q = sub.add_parser(name, help=help_text)
        q.add_argument("--ring", required=True, metavar="SPEC",
                       help="ring spec, e.g. 'Z6', 'Z3 x Z3', 'poly(Z2,2)'")
        q.add_argument("--s", default="{}", metavar="{G1,G2,...}",
                       help="generators of S; closed automatically "
                            "(default: {} = just 1)")
        q.add_argument("--allow-zero-in-s", action="store_true",
                       help="permit 0 in the closure of S")
        q.add_argument("--json", action="store_true",
                       help="emit a JSON report instead of text")
        return q

    instance_parser("classify", "classification flags for (R, S)")
    instance_parser("sets", "classical and S-element sets of (R, S)")
    w = instance_parser("witness", "first witness for one element/property")
    w.add_argument("--elem", required=True, help="element name or index")
    w.add_argument("--prop", required=True,
                   choices=sorted(_WITNESS_PROPS),
                   help="which S-property to certify")
    instance_parser("ideals", "S-prime/S-maximal/S-primary verdicts")
    instance_parser("localize", "localization at S and its iso class")

    v = sub.add_parser("verify", help="run proposition checks over a corpus")
    v.add_argument("--corpus", choices=("small", "std"), default="std")
    v.add_argument("--props", default="all",
                   help="'all' or comma-separated proposition ids")
    v.add_argument("--seed", type=int, default=0)
    v.add_argument("--max-size", type=int, default=None)
    v.add_argument("--json", action="store_true")

    s = sub.add_parser("search", help="mine the corpus for open-problem data")
    s.add_argument("--target", required=True, choices=TARGETS)
    s.add_argument("--seed", type=int, default=0)
    s.add_argument("--max-size", type=int, default=None)
    s.add_argument("--json", action="store_true")
    return parser


def run(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)

    try:
        if args.command == "verify":
            return _cmd_verify(args.corpus, args.props, args.seed,
                               args.max_size, args.json)
        if args.command == "search":
            return _cmd_search(args.target, args.seed, args.max_size,
                               args.json)
        ring = parse_ring_spec(args.ring)
        sset = parse_s_spec(ring, args.s, allow_zero=args.allow_zero_in_s)
        if args.command == "classify":
            return _cmd_classify(ring, sset, args.json)
        if args.command == "sets":
            return _cmd_sets(ring, sset, args.json)
        if args.command == "witness":
            return _cmd_witness(ring, sset, args.elem, args.prop, args.json)
        if args.command == "ideals":
            return _cmd_ideals(ring, sset, args.json)
        if args.command == "localize":
            return _cmd_localize(ring, sset, args.json)
        raise AssertionError(f"unhandled command {args.command}")
    except (WorkbenchError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
