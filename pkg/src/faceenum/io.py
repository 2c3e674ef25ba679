"""File formats.

Complexes: JSON {"vertices": [...], "facets": [[...], ...]} or plain text
with one facet per line, labels whitespace-separated.  Labels may be ints or
strings in either format; bare numerals in text files are read as ints.

Posets: JSON {"elements": [...], "covers": [["x","y"], ...]}; the special
names "bottom"/"top" are optional and are adjoined automatically when absent,
provided the poset has a unique minimum and maximum.

Move logs: JSON list of {"op": ..., "parameters": ..., "resulting": [f0, f1]}.
"""

from __future__ import annotations

import json
from pathlib import Path

from .complexes import SimplicialComplex
from .constructions import BistellarMove, MoveLog, apply_bistellar
from .errors import ParseError
from .posets import BOTTOM_SENTINEL, TOP_SENTINEL, GradedPoset
from .trees import central_retriangulation


def _label(tok: str):
    try:
        return int(tok)
    except ValueError:
        return tok


def parse_complex_text(text: str) -> SimplicialComplex:
    facets = []
    for ln, line in enumerate(text.splitlines(), start=1):
        line = line.strip()
        if not line or line.startswith("#"):
            continue
        toks = line.replace(",", " ").split()
        if len(set(toks)) != len(toks):
            raise ParseError(f"repeated label on line {ln}", line=ln)
        facets.append([_label(t) for t in toks])
    if not facets:
        raise ParseError("no facets found")
    return SimplicialComplex(facets)


def parse_complex_json(payload) -> SimplicialComplex:
    if not isinstance(payload, dict) or "facets" not in payload:
        raise ParseError('complex JSON needs a "facets" key')
    facets = payload["facets"]
    if not isinstance(facets, list) or not facets:
        raise ParseError('"facets" must be a nonempty list')
    K = SimplicialComplex(facets)
    declared = payload.get("vertices")
    if declared is not None and set(map(repr, declared)) < set(map(repr, K.vertices)):
        raise ParseError("facets mention vertices outside the declared vertex list")
    return K


def load_complex(path) -> SimplicialComplex:
    text = Path(path).read_text()
    stripped = text.lstrip()
    if stripped.startswith("{"):
        try:
            payload = json.loads(text)
        except json.JSONDecodeError as e:
            raise ParseError(f"bad JSON: {e.msg}", line=e.lineno, column=e.colno) from e
        return parse_complex_json(payload)
    return parse_complex_text(text)


def complex_to_jsonable(K: SimplicialComplex) -> dict:
    return {"vertices": list(K.vertices), "facets": [list(f) for f in K.facets]}


def save_complex(K: SimplicialComplex, path):
    Path(path).write_text(json.dumps(complex_to_jsonable(K), indent=1) + "\n")


def load_poset(path) -> GradedPoset:
    text = Path(path).read_text()
    try:
        payload = json.loads(text)
    except json.JSONDecodeError as e:
        raise ParseError(f"bad JSON: {e.msg}", line=e.lineno, column=e.colno) from e
    if "elements" not in payload or "covers" not in payload:
        raise ParseError('poset JSON needs "elements" and "covers"')
    elements = [_label(e) if isinstance(e, str) else e for e in payload["elements"]]
    covers = [(_label(a) if isinstance(a, str) else a, _label(b) if isinstance(b, str) else b)
              for a, b in payload["covers"]]
    P = GradedPoset(elements, covers)
    mins = [e for e in P.elements if not P._lower[e]]
    maxs = [e for e in P.elements if not P._upper[e]]
    add_elements = list(elements)
    add_covers = list(covers)
    if len(mins) > 1:
        if BOTTOM_SENTINEL in add_elements:
            raise ParseError("multiple minima but 'bottom' already used")
        add_elements.append(BOTTOM_SENTINEL)
        add_covers += [(BOTTOM_SENTINEL, m) for m in mins]
    if len(maxs) > 1:
        if TOP_SENTINEL in add_elements:
            raise ParseError("multiple maxima but 'top' already used")
        add_elements.append(TOP_SENTINEL)
        add_covers += [(m, TOP_SENTINEL) for m in maxs]
    if len(add_elements) != len(elements):
        P = GradedPoset(add_elements, add_covers)
    return P


def poset_to_jsonable(P: GradedPoset) -> dict:
    return {
        "elements": [repr(e) if not isinstance(e, (int, str)) else e for e in P.elements],
        "covers": [
            [repr(a) if not isinstance(a, (int, str)) else a,
             repr(b) if not isinstance(b, (int, str)) else b]
            for a, b in P.covers
        ],
    }


def save_move_log(log: MoveLog, path):
    Path(path).write_text(json.dumps(log.to_jsonable(), indent=1) + "\n")


def load_move_log(path) -> list:
    try:
        steps = json.loads(Path(path).read_text())
    except json.JSONDecodeError as e:
        raise ParseError(f"bad JSON: {e.msg}", line=e.lineno, column=e.colno) from e
    if not isinstance(steps, list):
        raise ParseError("move log must be a JSON list")
    return steps


def replay_move_log(K: SimplicialComplex, steps: list) -> SimplicialComplex:
    """Re-apply a recorded construction; the per-step (f0, f1) counts are
    verified so replays are byte-identical to the original run."""
    for i, step in enumerate(steps):
        op = step.get("op")
        params = step.get("parameters", {})
        if op == "bistellar":
            K = apply_bistellar(K, BistellarMove(tuple(params["f"]), tuple(params["g"])), check_h=False)
        elif op == "central_retriangulation":
            ball = SimplicialComplex([tuple(f) for f in params["ball"]])
            K = central_retriangulation(K, ball, params["vertex"], verify_ball=False)
        else:
            raise ParseError(f"unknown op {op!r} at step {i}")
        want = step.get("resulting")
        if want is not None:
            fv = K.f_vector
            got = [fv[1], fv[2] if len(fv) > 2 else 0]
            if got != list(want):
                raise ParseError(f"replay diverged at step {i}: (f0, f1) = {got}, recorded {want}")
    return K
