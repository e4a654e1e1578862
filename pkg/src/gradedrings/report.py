"""Analysis reports: JSON assembly and text rendering.

Reports are plain dictionaries of JSON-native values so they round-trip
losslessly.  Sections are present exactly when the corresponding analysis
was requested.  Serialization sorts keys, so a report is byte-stable across
runs of the same analysis on the same input.  The text rendering is a pure
function of the JSON report.
"""

from __future__ import annotations

import json

from .connections import ConnectionClasses
from .decomposition import IdealDecomposition
from .properties import PropertyReport
from .ring import GradedRing, ViolationReport


def _element(e) -> list[int]:
    return [int(x) for x in e]


def _subspace(sub) -> dict:
    return {
        "dimension": sub.dim,
        "basis": [[str(x) for x in row] for row in sub.rows],
    }


def validation_section(report: ViolationReport) -> dict:
    return {
        "ok": report.ok,
        "violations": [
            {"kind": v.kind, "where": list(v.where), "detail": v.detail}
            for v in report.violations
        ],
    }


def support_section(ring: GradedRing, symmetric: bool, witness) -> dict:
    return {
        "size": len(ring.support()),
        "elements": [_element(g) for g in ring.sorted_support()],
        "symmetric": symmetric,
        "asymmetry_witness": None if witness is None else _element(witness),
    }


def classes_section(classes: ConnectionClasses) -> dict:
    blocks = []
    for block, rep in zip(classes.blocks, classes.representatives):
        members = []
        for member in block:
            path = classes.certificates[member]
            members.append(
                {
                    "member": _element(member),
                    "certificate": {
                        "elements": [_element(e) for e in path.elements],
                        "source": _element(path.source),
                        "target": _element(path.target),
                    },
                }
            )
        blocks.append({"representative": _element(rep), "members": members})
    return {"count": classes.count, "blocks": blocks}


def decomposition_section(dec: IdealDecomposition) -> dict:
    ideals = []
    for block, ideal, one_span, comp_sum in zip(
        dec.classes.blocks, dec.ideals, dec.identity_spans, dec.component_sums
    ):
        ideals.append(
            {
                "class": [_element(g) for g in block],
                "dimension": ideal.dim,
                "identity_span_dimension": one_span.dim,
                "component_sum_dimension": comp_sum.dim,
                "basis": [[str(x) for x in row] for row in ideal.rows],
            }
        )
    return {
        "ideals": ideals,
        "complement": _subspace(dec.complement),
        "complement_exact": dec.complement_exact,
        "covers": dec.covers,
        "pairwise_zero": dec.pairwise_zero,
        "orthogonal_ideals": dec.orthogonal_ideals,
        "coherent": dec.coherent,
    }


def _tri(value, none_label: str):
    return none_label if value is None else value


def properties_section(props: PropertyReport) -> dict:
    failure = props.support_multiplicative_failure
    return {
        "maximal_length": props.maximal_length,
        "support_multiplicative": props.support_multiplicative,
        "support_multiplicative_failure": None
        if failure is None
        else [_element(failure[0]), _element(failure[1])],
        "annihilator": _subspace(props.annihilator),
        "symmetric_support": props.symmetric_support,
        "symmetry_witness": None
        if props.symmetry_witness is None
        else _element(props.symmetry_witness),
        "coherent": props.coherent,
        "coherence": {
            "span_ok": props.coherence.span_ok,
            "pairing_failures": [
                {"g": _element(g), "h": _element(h), "gram": a}
                for g, h, a in props.coherence.pairing_failures
            ],
        },
        "theorem_hypotheses": dict(props.hypotheses),
        "simple_by_theorem": _tri(props.simple_by_theorem, "hypotheses-not-met"),
        "simple_by_oracle": _tri(props.simple_by_oracle, "inconclusive"),
        "oracle": {
            "closures_tested": props.oracle.closures_tested,
            "reason": props.oracle.reason,
            "witness": None
            if props.oracle.witness is None
            else [str(x) for x in props.oracle.witness],
        },
    }


def dumps_report(report: dict) -> str:
    return json.dumps(report, indent=2, sort_keys=True) + "\n"


def render_text(report: dict) -> str:
    """Human-readable rendering; a pure function of the JSON report."""
    lines = []
    lines.append(f"command: {report.get('command', '?')}")
    if "input" in report:
        lines.append(f"input: {report['input']}")
    if "validation" in report:
        v = report["validation"]
        lines.append(f"validation: {'ok' if v['ok'] else 'FAILED'}")
        for violation in v["violations"]:
            lines.append(
                f"  [{violation['kind']}] at {tuple(violation['where'])}: {violation['detail']}"
            )
    if "support" in report:
        s = report["support"]
        sym = "symmetric" if s["symmetric"] else f"not symmetric (witness {s['asymmetry_witness']})"
        lines.append(f"support: {s['size']} element(s), {sym}")
    if "classes" in report:
        c = report["classes"]
        lines.append(f"connection classes: {c['count']}")
        for block in c["blocks"]:
            members = ", ".join(str(tuple(m["member"])) for m in block["members"])
            lines.append(f"  [{tuple(block['representative'])}]: {members}")
    if "decomposition" in report:
        d = report["decomposition"]
        lines.append(f"ideals: {len(d['ideals'])}")
        for ideal in d["ideals"]:
            lines.append(
                f"  class of {tuple(ideal['class'][0])}: dimension {ideal['dimension']} "
                f"(identity span {ideal['identity_span_dimension']}, "
                f"components {ideal['component_sum_dimension']})"
            )
        lines.append(
            f"complement dimension: {d['complement']['dimension']} "
            f"(exact: {d['complement_exact']})"
        )
        lines.append(
            f"covers: {d['covers']}  pairwise_zero: {d['pairwise_zero']}  "
            f"orthogonal_ideals: {d['orthogonal_ideals']}  coherent: {d['coherent']}"
        )
    if "properties" in report:
        p = report["properties"]
        lines.append(f"maximal length: {p['maximal_length']}")
        mult = p["support_multiplicative"]
        if mult:
            lines.append("support multiplicative: True")
        else:
            lines.append(
                f"support multiplicative: False (witness pair {p['support_multiplicative_failure']})"
            )
        lines.append(f"annihilator dimension: {p['annihilator']['dimension']}")
        lines.append(f"symmetric support: {p['symmetric_support']}")
        lines.append(f"coherent identity component: {p['coherent']}")
        lines.append(f"graded simple (theorem): {p['simple_by_theorem']}")
        lines.append(
            f"graded simple (oracle): {p['simple_by_oracle']} "
            f"({p['oracle']['closures_tested']} closures tested; {p['oracle']['reason']})"
        )
    if "timing" in report:
        lines.append(f"elapsed: {report['timing']['seconds']} s")
    return "\n".join(lines) + "\n"
