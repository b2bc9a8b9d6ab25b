"""Output documents: JSON and text rendering, and reading JSON back.

JSON layout (``schema_version`` 1, see ``docs/output-schema.json``)::

    {
      "schema_version": 1,
      "metadata": {"type", "rank", "command", "version", "conventions"},
      "element": {"word": [...], "perm": "4321"},      # class commands
      "parabolic": [1, 3],                            # pushforward only
      "payload": [{"word", "perm", "length", "coeff"}, ...] | {report}
    }

Integer coefficients are decimal strings; polynomial coefficients are lists
of ``{"exponents": [...], "coeff": "<decimal>"}`` records.  Keys are sorted
and term order is fixed (length, then canonical word), so output is
byte-stable.
"""

from __future__ import annotations

import json
from collections.abc import Mapping

from . import __version__
from .coeff import SparsePoly
from .rootsys import RootSystem, build
from .schubop import ClassVector
from .weyl import WeylElement, format_element, from_word, reduced_word, to_permutation

SCHEMA_VERSION = 1

CONVENTIONS = (
    "Bourbaki numbering; homology Schubert basis [X(w)], dim X(w) = l(w); "
    "words s_{i1}...s_{ik} multiply left to right; type A permutations in one-line "
    "notation with w*s_i swapping positions i,i+1; polynomial variables a_i are the simple roots"
)


def _element_record(w: WeylElement) -> dict:
    rec = {"word": list(reduced_word(w)), "length": w.length}
    if w.rs.lie_type == "A":
        rec["perm"] = "".join(map(str, to_permutation(w))) if w.rs.rank < 9 else ",".join(
            map(str, to_permutation(w))
        )
    return rec


def _coeff_record(c):
    if isinstance(c, SparsePoly):
        return c.to_records()
    return str(c)


def metadata(rs: RootSystem, command: str) -> dict:
    return {
        "type": rs.lie_type,
        "rank": rs.rank,
        "command": command,
        "version": __version__,
        "conventions": CONVENTIONS,
    }


def class_document(
    gamma: ClassVector,
    command: str,
    element: WeylElement | None = None,
    parabolic: list[int] | None = None,
) -> dict:
    doc = {"schema_version": SCHEMA_VERSION, "metadata": metadata(gamma.rs, command)}
    if element is not None:
        rec = _element_record(element)
        rec.pop("length")
        doc["element"] = rec
    if parabolic is not None:
        doc["parabolic"] = sorted(parabolic)
    payload = []
    for w, c in gamma.items():
        rec = _element_record(w)
        rec["coeff"] = _coeff_record(c)
        payload.append(rec)
    doc["payload"] = payload
    return doc


def report_document(rs: RootSystem, command: str, payload: Mapping) -> dict:
    return {
        "schema_version": SCHEMA_VERSION,
        "metadata": metadata(rs, command),
        "payload": dict(payload),
    }


def dumps(doc: Mapping) -> str:
    return json.dumps(doc, sort_keys=True, indent=2) + "\n"


def read_class_document(doc: Mapping | str) -> tuple[RootSystem, ClassVector]:
    """Rebuild the class vector of a class document (inverse of :func:`class_document`)."""
    if isinstance(doc, str):
        doc = json.loads(doc)
    if doc.get("schema_version") != SCHEMA_VERSION:
        raise ValueError(f"unsupported schema version {doc.get('schema_version')!r}")
    meta = doc["metadata"]
    rs = build(meta["type"], int(meta["rank"]))
    terms = {}
    for rec in doc["payload"]:
        w = from_word(rs, rec["word"])
        c = rec["coeff"]
        terms[w] = SparsePoly.from_records(c, rs.rank) if isinstance(c, list) else int(c)
    return rs, ClassVector(rs, terms)


def render_class_text(gamma: ClassVector, title: str) -> str:
    lines = [f"# {title}"]
    entries = [(format_element(w), str(c)) for w, c in gamma.items()]
    width = max((len(label) for label, _ in entries), default=1)
    for label, coeff in entries:
        lines.append(f"{label:<{width}}  {coeff}")
    return "\n".join(lines) + "\n"
