"""Text and JSON forms of elements and tensors.

Text: ``F[12534] - 2*F[231]`` for SSym, ``Mq[(2,1)] + Fq[{2}@4]`` for QSym.
Permutations of degree >= 10 use a bracketed list, ``F[[10,3,1,...]]``.
JSON: ``{"algebra", "basis", "terms": [{"index", "coeff"}]}``.
"""

from __future__ import annotations

import json
import re

from .errors import ElementSyntaxError, InvalidComposition, InvalidPermutation, SpaceMismatch
from .formal import SPACE_BY_TAG, Element, Space, Tensor, _accumulate
from .orders import Composition, composition_sort_key, format_composition, parse_composition, subset_to_composition
from .permcore import Permutation, format_permutation, parse_descent_set, parse_permutation

TENSOR_SIGN = " ⊗ "


def format_index(space: Space, index) -> str:
    body = format_permutation(index) if space.algebra == "SSym" else format_composition(index)
    return f"{space.tag}[{body}]"


def _format_terms(pieces):
    if not pieces:
        return "0"
    out = []
    for i, (coeff, body) in enumerate(pieces):
        mag = abs(coeff)
        text = body if mag == 1 else f"{mag}*{body}"
        if i == 0:
            out.append(("-" if coeff < 0 else "") + text)
        else:
            out.append(("- " if coeff < 0 else "+ ") + text)
    return " ".join(out)


def format_element(x: Element) -> str:
    return _format_terms([(c, format_index(x.space, k)) for k, c in x.sorted_items()])


def format_tensor(t: Tensor) -> str:
    pieces = []
    for key, c in t.sorted_items():
        pieces.append((c, TENSOR_SIGN.join(format_index(s, i) for s, i in zip(t.spaces, key))))
    return _format_terms(pieces)


# --------------------------------------------------------------------------
# parsing

_TERM_RE = re.compile(
    r"\s*(?P<sign>[+-])?\s*(?:(?P<coeff>\d+)\s*\*\s*)?(?P<tag>Fq|Mq|F|M)\[(?P<body>(?:\[[^\]]*\]|[^\[\]])*)\]\s*"
)


def parse_index(space: Space, body: str):
    body = body.strip()
    if space.algebra == "SSym":
        return parse_permutation(body)
    if body.startswith("{"):
        return subset_to_composition(parse_descent_set(body))
    return parse_composition(body)


def parse_element(text: str, space: Space | None = None) -> Element:
    """Parse the text form; a bare ``0`` needs ``space``."""
    stripped = text.strip()
    if stripped == "0":
        if space is None:
            raise ElementSyntaxError("the zero element needs an explicit space", text, 0)
        return Element(space)
    pos = 0
    terms = {}
    while pos < len(text):
        if not text[pos:].strip():
            break
        m = _TERM_RE.match(text, pos)
        if not m:
            raise ElementSyntaxError("expected a term like 'F[231]' or '-2*Mq[(2,1)]'", text, _skip_ws(text, pos))
        if pos and terms and not m.group("sign"):
            raise ElementSyntaxError("expected '+' or '-' between terms", text, _skip_ws(text, pos))
        tag_space = SPACE_BY_TAG[m.group("tag")]
        if space is None:
            space = tag_space
        elif tag_space != space:
            raise SpaceMismatch(f"term {m.group(0).strip()!r} at position {m.start('tag')} is in {tag_space}, expected {space}")
        try:
            index = parse_index(space, m.group("body"))
        except (InvalidPermutation, InvalidComposition, ValueError) as exc:
            raise ElementSyntaxError(str(exc), text, m.start("body")) from None
        coeff = int(m.group("coeff") or 1)
        if m.group("sign") == "-":
            coeff = -coeff
        _accumulate(terms, index, coeff)
        pos = m.end()
    if space is None:
        raise ElementSyntaxError("empty element", text, 0)
    return Element._raw(space, terms)


def _skip_ws(text, pos):
    while pos < len(text) and text[pos].isspace():
        pos += 1
    return pos


# --------------------------------------------------------------------------
# JSON


def _index_from_json(space, raw):
    return Permutation(raw) if space.algebra == "SSym" else Composition(raw)


def element_to_json(x: Element) -> dict:
    return {
        "algebra": x.space.algebra,
        "basis": x.space.basis,
        "terms": [{"index": list(k), "coeff": c} for k, c in x.sorted_items()],
    }


def element_from_json(data) -> Element:
    if isinstance(data, str):
        data = json.loads(data)
    space = Space(data["algebra"], data["basis"])
    if space not in SPACE_BY_TAG.values():
        raise ElementSyntaxError(f"unknown space {space}")
    terms = {}
    for term in data["terms"]:
        _accumulate(terms, _index_from_json(space, term["index"]), int(term["coeff"]))
    return Element._raw(space, terms)


def tensor_to_json(t: Tensor) -> dict:
    return {
        "spaces": [{"algebra": s.algebra, "basis": s.basis} for s in t.spaces],
        "terms": [{"indices": [list(i) for i in key], "coeff": c} for key, c in t.sorted_items()],
    }


def tensor_from_json(data) -> Tensor:
    if isinstance(data, str):
        data = json.loads(data)
    spaces = tuple(Space(s["algebra"], s["basis"]) for s in data["spaces"])
    terms = {}
    for term in data["terms"]:
        key = tuple(_index_from_json(s, i) for s, i in zip(spaces, term["indices"]))
        _accumulate(terms, key, int(term["coeff"]))
    return Tensor._raw(spaces, terms)


def sort_indices(space: Space, indices):
    if space.algebra == "QSym":
        return sorted(indices, key=composition_sort_key)
    return sorted(indices, key=space.sort_key)
