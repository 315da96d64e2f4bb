"""JSON input and output for hypergraphs, multi-complexes, polynomials and linear combinations."""

from __future__ import annotations

import json
from fractions import Fraction
from typing import Any

from .algebra import LinearCombination
from .config import HyperhopfError
from .core import Hypergraph
from .multicomplex import MultiComplex, label_text
from .polynomial import RationalPolynomial, format_hilbert, to_hilbert_basis


class SchemaError(HyperhopfError):
    pass


def _load(text_or_obj) -> Any:
    if isinstance(text_or_obj, (str, bytes)):
        try:
            return json.loads(text_or_obj)
        except json.JSONDecodeError as exc:
            raise SchemaError(f"invalid JSON: {exc}") from None
    return text_or_obj


def _labels(obj: dict) -> list:
    vertices = obj.get("vertices")
    if not isinstance(vertices, list):
        raise SchemaError('"vertices" must be a list of labels')
    for v in vertices:
        if not isinstance(v, (str, int)) or isinstance(v, bool):
            raise SchemaError(f"vertex label {v!r} must be a string or an integer")
    return vertices


def parse_hypergraph(text_or_obj) -> Hypergraph:
    """``{"vertices": [...], "edges": [[...], ...]}`` with only nontrivial edges."""
    obj = _load(text_or_obj)
    if not isinstance(obj, dict):
        raise SchemaError("a hypergraph is a JSON object with vertices and edges")
    unknown = set(obj) - {"vertices", "edges"}
    if unknown:
        raise SchemaError(f"unexpected keys {sorted(unknown)} in hypergraph input")
    labels = _labels(obj)
    edges = obj.get("edges", [])
    if not isinstance(edges, list) or not all(isinstance(e, list) for e in edges):
        raise SchemaError('"edges" must be a list of label lists')
    return Hypergraph.from_edges(labels, edges)


def parse_multicomplex(text_or_obj) -> MultiComplex:
    """``{"vertices", "edges": [{"id", "multiset"}], "order": [[low, high]]}``; axioms checked."""
    obj = _load(text_or_obj)
    if not isinstance(obj, dict):
        raise SchemaError("a multi-complex is a JSON object with vertices, edges and order")
    unknown = set(obj) - {"vertices", "edges", "order"}
    if unknown:
        raise SchemaError(f"unexpected keys {sorted(unknown)} in multi-complex input")
    labels = _labels(obj)
    by_text = {str(v): v for v in labels}
    edges = []
    for item in obj.get("edges", []):
        if not isinstance(item, dict) or "id" not in item or not isinstance(item.get("multiset"), dict):
            raise SchemaError('each edge must be {"id": str, "multiset": {label: multiplicity}}')
        mult = {}
        for key, m in item["multiset"].items():
            if key not in by_text:
                raise HyperhopfError(f"edge {item['id']!r} uses unknown vertex {key!r}")
            if isinstance(m, bool) or not isinstance(m, int):
                raise SchemaError(f"multiplicity {m!r} must be an integer")
            mult[by_text[key]] = m
        edges.append((str(item["id"]), mult))
    order = obj.get("order", [])
    if not isinstance(order, list) or not all(isinstance(p, list) and len(p) == 2 for p in order):
        raise SchemaError('"order" must be a list of [lowId, highId] pairs')
    return MultiComplex.build(labels, edges, [(str(a), str(b)) for a, b in order])


def _json_label(x):
    return x if isinstance(x, (str, int)) else label_text(x)


def hypergraph_json(G: Hypergraph) -> dict:
    return {
        "vertices": [_json_label(x) for x in G.labels],
        "edges": [[_json_label(x) for x in e] for e in G.edge_sets()],
    }


def multicomplex_json(C: MultiComplex) -> dict:
    return C.describe()


def factor_json(f) -> dict:
    if isinstance(f, Hypergraph):
        return hypergraph_json(f)
    if isinstance(f, MultiComplex):
        return multicomplex_json(f)
    raise HyperhopfError(f"cannot serialize factor of type {type(f).__name__}")


def fraction_text(c: Fraction) -> str:
    c = Fraction(c)
    return str(c.numerator) if c.denominator == 1 else f"{c.numerator}/{c.denominator}"


def polynomial_json(p: RationalPolynomial, hilbert: bool = False) -> dict:
    """Descending text plus ascending coefficients as "p/q" strings."""
    out = {"text": str(p), "coefficients": [fraction_text(c) for c in p.coeffs]}
    if hilbert:
        h = to_hilbert_basis(p)
        out["hilbert"] = [fraction_text(c) for c in h]
        out["hilbert_text"] = format_hilbert(h)
    return out


def lincomb_json(x: LinearCombination) -> list[dict]:
    return [
        {"coeff": fraction_text(c), "factors": [factor_json(f) for f in word]} for word, c in x.items()
    ]


def dumps(obj) -> str:
    return json.dumps(obj, indent=2, sort_keys=False, ensure_ascii=False)
