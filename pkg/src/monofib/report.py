"""JSON and text rendering of certificates and bounds reports."""

from __future__ import annotations

import json
from typing import IO, Any, Iterable, Iterator

from .cover import BoundsReport, CoverInvariants, MonodromyPair, analyze, bounds_report
from .perm import Permutation, cycle_decomposition
from .search import Certificate

# field order is part of the output format
CERTIFICATE_FIELDS = (
    "degree", "alpha", "beta", "commutator", "curve_genus", "fibre_genus", "chi",
    "k_squared", "c2", "nodes", "delta_gamma", "group_order", "transitive",
    "primitive", "reduced", "valid",
)


def invariants_record(pair: MonodromyPair, inv: CoverInvariants) -> dict[str, Any]:
    return {
        "degree": pair.degree,
        "alpha": str(pair.alpha),
        "beta": str(pair.beta),
        "commutator": inv.commutator,
        "curve_genus": inv.curve_genus,
        "fibre_genus": inv.fibre_genus,
        "chi": inv.chi,
        "k_squared": inv.k_squared,
        "c2": inv.c2,
        "nodes": inv.node_count,
        "delta_gamma": inv.delta_gamma,
        "group_order": inv.group_order,
        "transitive": inv.transitive,
        "primitive": inv.primitive,
        "reduced": inv.reduced_ramification,
        "valid": inv.valid,
    }


def certificate_record(cert: Certificate) -> dict[str, Any]:
    return invariants_record(cert.pair, cert.invariants)


def certificate_json(cert: Certificate) -> str:
    return json.dumps(certificate_record(cert), separators=(", ", ": "))


def certificate_from_record(rec: dict[str, Any]) -> Certificate:
    """Rebuild a Certificate from its JSON record without recomputing anything.

    Extra keys are ignored so verify reports can be read back as well.
    """
    missing = [k for k in CERTIFICATE_FIELDS if k not in rec]
    if missing:
        raise ValueError(f"certificate record lacks {missing}")
    d = rec["degree"]
    pair = MonodromyPair.parse(rec["alpha"], rec["beta"], d)
    comm = cycle_decomposition(Permutation.parse(rec["commutator"], d))
    lengths = tuple(sorted((len(c) for c in comm.cycles), reverse=True))
    inv = CoverInvariants(
        degree=d,
        commutator=rec["commutator"],
        ramification=lengths,
        curve_genus=rec["curve_genus"],
        fibre_genus=rec["fibre_genus"],
        chi=rec["chi"],
        k_squared=rec["k_squared"],
        c2=rec["c2"],
        node_count=rec["nodes"],
        delta_gamma=rec["delta_gamma"],
        ramification_point_count=len(lengths),
        group_order=rec["group_order"],
        transitive=rec["transitive"],
        primitive=rec["primitive"],
        reduced_ramification=rec["reduced"],
        valid=rec["valid"],
    )
    return Certificate(pair, inv, f"{pair.alpha};{pair.beta}")


def write_certificates(certs: Iterable[Certificate], fh: IO[str]) -> int:
    n = 0
    for cert in certs:
        fh.write(certificate_json(cert) + "\n")
        n += 1
    return n


def read_certificates(fh: IO[str]) -> Iterator[Certificate]:
    for line in fh:
        line = line.strip()
        if line:
            yield certificate_from_record(json.loads(line))


def bounds_record(rep: BoundsReport) -> dict[str, Any]:
    return {
        "fibre_genus": rep.fibre_genus,
        "chi": rep.chi,
        "k_squared": rep.k_squared,
        "c2": rep.c2,
        "stable": rep.stable,
        "all_passed": rep.all_passed,
        "entries": [
            {"label": e.label, "statement": e.statement, "status": e.status, "detail": e.detail}
            for e in rep.entries
        ],
        "notes": list(rep.notes),
    }


def render_bounds(rep: BoundsReport) -> str:
    lines = [f"bounds for g={rep.fibre_genus} chi={rep.chi} K^2={rep.k_squared} c2={rep.c2}"
             f" ({'stable' if rep.stable else 'semistable'})"]
    for e in rep.entries:
        lines.append(f"  ({e.label:>4}) {e.statement:<42} {e.status.upper():<5} {e.detail}")
    for note in rep.notes:
        lines.append(f"  note: {note}")
    return "\n".join(lines)


def verify_pair(pair: MonodromyPair, stable: bool = True) -> tuple[CoverInvariants, BoundsReport | None]:
    inv = analyze(pair)
    rep = None
    if inv.fibre_genus is not None:
        rep = bounds_report(inv.fibre_genus, inv.chi, inv.k_squared, inv.c2, stable)
    return inv, rep


def verify_record(pair: MonodromyPair, inv: CoverInvariants, rep: BoundsReport | None) -> dict[str, Any]:
    rec = invariants_record(pair, inv)
    rec["ramification"] = list(inv.ramification)
    rec["bounds"] = bounds_record(rep) if rep is not None else None
    return rec


def render_verify(pair: MonodromyPair, inv: CoverInvariants, rep: BoundsReport | None) -> str:
    def show(v):
        return "-" if v is None else v

    flags = ", ".join(f"{name}={'yes' if val else 'no'}" for name, val in (
        ("transitive", inv.transitive), ("primitive", inv.primitive),
        ("reduced", inv.reduced_ramification)))
    lines = [
        f"degree        {pair.degree}",
        f"alpha         {pair.alpha}",
        f"beta          {pair.beta}",
        f"[alpha,beta]  {inv.commutator}",
        f"group order   {inv.group_order}",
        f"flags         {flags}",
        f"g(C)          {inv.curve_genus}",
        f"g(F)          {show(inv.fibre_genus)}",
        f"chi, K^2, c2  {show(inv.chi)}, {show(inv.k_squared)}, {show(inv.c2)}",
        f"nodes, D.G    {show(inv.node_count)}, {show(inv.delta_gamma)}",
        f"verdict       {'VALID' if inv.valid else 'INVALID'}",
    ]
    if rep is not None:
        lines.append(render_bounds(rep))
    return "\n".join(lines)
