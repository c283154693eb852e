"""JSON instance and report files.

Rationals are always written as ``"num/den"`` (or ``"num"``) strings, and
output is key-sorted so identical inputs give byte-identical files.
"""

from __future__ import annotations

import json
from pathlib import Path

from .core import as_weight, format_rational
from .errors import LexoptError
from .harness import Instance
from .matching import WeightedGraph
from .matroid import matroid_from_descriptor


class InstanceFormatError(LexoptError):
    pass


def instance_to_dict(inst: Instance) -> dict:
    d: dict = {"kind": inst.kind}
    if inst.kind == "matching":
        g = inst.graph
        d["vertex_count"] = g.vertex_count
        d["edges"] = [{"u": u, "v": v, "w": format_rational(w)} for u, v, w in g.edges]
    else:
        m1, m2 = inst.matroids
        d["ground_size"] = inst.ground_size
        d["matroid1"] = m1.descriptor()
        d["matroid2"] = m2.descriptor()
        d["weights"] = {str(e): format_rational(w) for e, w in enumerate(inst.weights)}
    if inst.seed is not None:
        d["seed"] = inst.seed
    if inst.metadata:
        d["metadata"] = dict(inst.metadata)
    return d


def _weight(text):
    if isinstance(text, float):
        raise InstanceFormatError(f"floating-point weight {text!r}; write it as 'num/den'")
    try:
        return as_weight(text)
    except LexoptError as exc:
        raise InstanceFormatError(str(exc)) from None


def instance_from_dict(d: dict) -> Instance:
    try:
        kind = d["kind"]
        if kind == "matching":
            edges = tuple((int(e["u"]), int(e["v"]), _weight(e["w"])) for e in d["edges"])
            graph = WeightedGraph(int(d["vertex_count"]), edges)
            return Instance("matching", graph.weights, graph=graph, seed=d.get("seed"),
                            metadata=d.get("metadata", {}))
        if kind == "intersection":
            raw = d["weights"]
            n = int(d.get("ground_size", len(raw)))
            if sorted(int(e) for e in raw) != list(range(n)):
                raise InstanceFormatError("weight keys must be the dense ids 0..n-1")
            weights = tuple(_weight(raw[str(e)]) for e in range(n))
            m1 = matroid_from_descriptor(d["matroid1"], n)
            m2 = matroid_from_descriptor(d["matroid2"], n)
            if m1.ground_size != n or m2.ground_size != n:
                raise InstanceFormatError("matroid ground sizes do not match the weights")
            return Instance("intersection", weights, matroids=(m1, m2), seed=d.get("seed"),
                            metadata=d.get("metadata", {}))
        raise InstanceFormatError(f"unknown instance kind {kind!r}")
    except InstanceFormatError:
        raise
    except (KeyError, TypeError, ValueError, AttributeError) as exc:
        raise InstanceFormatError(f"malformed instance: {exc}") from None


def dumps(obj) -> str:
    return json.dumps(obj, indent=2, sort_keys=True, ensure_ascii=False) + "\n"


def load_json(path) -> dict:
    try:
        return json.loads(Path(path).read_text(encoding="utf-8"))
    except (OSError, UnicodeDecodeError, json.JSONDecodeError) as exc:
        raise InstanceFormatError(f"cannot read {path}: {exc}") from None


def load_instance(path) -> Instance:
    return instance_from_dict(load_json(path))


def save_instance(inst: Instance, path) -> None:
    Path(path).write_text(dumps(instance_to_dict(inst)), encoding="utf-8")
