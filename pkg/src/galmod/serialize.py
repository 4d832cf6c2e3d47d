"""JSON (de)serialization for every object the command line accepts or
emits.

Each schema carries a top-level ``format`` version field.  Group fields
accept either an inline group object, a ``fixtures:NAME`` reference, or
(for input only) one-line cycle notation generators.
"""

from __future__ import annotations

import json
from typing import Optional, Union

from . import intlinalg as la
from .complexes import (CertificateMove, HalfComplex, MoveEvidence,
                        ResolutionCertificate, TwoTermComplex)
from .crossed import FiniteCrossedModule
from .groups import (DEFAULT_SIZE_LIMIT, FiniteGroup, SubgroupHandle,
                     build_group, group_from_table, parse_cycles)
from .lattice import FgModule, GLattice, LatticeMap
from .patching import PatchingGraph, build_patching_graph

GROUP_FORMAT = "galmod-group-1"
LATTICE_FORMAT = "galmod-lattice-1"
MODULE_FORMAT = "galmod-module-1"
COMPLEX_FORMAT = "galmod-complex-1"
CROSSED_FORMAT = "galmod-crossed-1"
GRAPH_FORMAT = "galmod-graph-1"
CERTIFICATE_FORMAT = "galmod-certificate-1"


class FormatError(Exception):
    """The input does not match the documented schema."""


def _expect(obj: dict, fmt: str) -> None:
    if not isinstance(obj, dict):
        raise FormatError(f"expected an object with format {fmt!r}")
    if obj.get("format") != fmt:
        raise FormatError(
            f"expected format {fmt!r}, found {obj.get('format')!r}")


def _rows(m) -> list[list[int]]:
    return [list(int(x) for x in row) for row in m]


def _matrix(obj, what: str) -> la.IntMatrix:
    if not isinstance(obj, list):
        raise FormatError(f"{what} must be a list of rows")
    return la.freeze([[int(x) for x in row] for row in obj])


def deep_tuple(x):
    """Lists to tuples, recursively; used to restore stored tables."""
    if isinstance(x, list):
        return tuple(deep_tuple(v) for v in x)
    return x


def deep_list(x):
    if isinstance(x, tuple):
        return [deep_list(v) for v in x]
    return x


# --- groups ----------------------------------------------------------------

def dump_group(g: FiniteGroup) -> dict:
    return {
        "format": GROUP_FORMAT,
        "name": g.name,
        "table": _rows(g.table),
        "generators": list(g.generators),
        "labels": list(g.labels),
    }


def load_group(obj, size_limit: int = DEFAULT_SIZE_LIMIT) -> FiniteGroup:
    """Accepts an inline group object, a ``fixtures:NAME`` string, or a
    cycle-notation generator description."""
    if isinstance(obj, str):
        if obj.startswith("fixtures:"):
            from . import fixtures
            return fixtures.lookup("group", obj[len("fixtures:"):])
        raise FormatError(f"unrecognized group reference {obj!r}")
    if "table" in obj:
        _expect(obj, GROUP_FORMAT)
        table = deep_tuple(_rows(obj["table"]))
        gens = obj.get("generators")
        if gens is None:
            return group_from_table(table, None, obj.get("name", ""))
        labels = obj.get("labels")
        if labels is None:
            labels = tuple(str(i) for i in range(len(table)))
        g = FiniteGroup(table, tuple(int(x) for x in gens),
                        tuple(labels), obj.get("name", ""))
        g.verify()
        return g
    if "cycles" in obj:
        _expect(obj, GROUP_FORMAT)
        degree = int(obj["degree"])
        perms = [parse_cycles(text, degree) for text in obj["cycles"]]
        return build_group(perms, size_limit=size_limit,
                           name=obj.get("name", ""))
    raise FormatError("group object needs either 'table' or 'cycles'")


# --- lattices, modules, complexes ------------------------------------------

def _dump_lattice_body(lat: GLattice) -> dict:
    return {"rank": lat.rank,
            "action": [_rows(m) for m in lat.action]}


def _load_lattice_body(obj, group: FiniteGroup) -> GLattice:
    rank = int(obj["rank"])
    action = tuple(_matrix(m, "action matrix") for m in obj["action"])
    return GLattice(group, rank, action)


def dump_lattice(lat: GLattice) -> dict:
    body = _dump_lattice_body(lat)
    body["format"] = LATTICE_FORMAT
    body["group"] = dump_group(lat.group)
    return body


def load_lattice(obj, size_limit: int = DEFAULT_SIZE_LIMIT) -> GLattice:
    _expect(obj, LATTICE_FORMAT)
    group = load_group(obj["group"], size_limit)
    return _load_lattice_body(obj, group)


def _dump_module_body(mod: FgModule) -> dict:
    return {"ngens": mod.ngens,
            "relations": _rows(mod.relations),
            "action": [_rows(m) for m in mod.action]}


def _load_module_body(obj, group: FiniteGroup) -> FgModule:
    return FgModule(group, int(obj["ngens"]),
                    _matrix(obj["relations"], "relations"),
                    tuple(_matrix(m, "action matrix")
                          for m in obj["action"]))


def dump_complex(t: TwoTermComplex) -> dict:
    return {
        "format": COMPLEX_FORMAT,
        "group": dump_group(t.group),
        "l1": _dump_lattice_body(t.l1),
        "l2": _dump_lattice_body(t.l2),
        "differential": _rows(t.differential.matrix),
    }


def load_complex(obj, size_limit: int = DEFAULT_SIZE_LIMIT
                 ) -> TwoTermComplex:
    _expect(obj, COMPLEX_FORMAT)
    group = load_group(obj["group"], size_limit)
    l1 = _load_lattice_body(obj["l1"], group)
    l2 = _load_lattice_body(obj["l2"], group)
    diff = _matrix(obj["differential"], "differential")
    return TwoTermComplex(l1, l2, LatticeMap(l1, l2, diff))


# --- crossed modules --------------------------------------------------------

def dump_crossed(c: FiniteCrossedModule) -> dict:
    return {
        "format": CROSSED_FORMAT,
        "g": dump_group(c.g),
        "h": dump_group(c.h),
        "galois": dump_group(c.galois),
        "boundary": list(c.boundary),
        "h_action": _rows(c.h_action),
        "galois_on_g": _rows(c.galois_on_g),
        "galois_on_h": _rows(c.galois_on_h),
    }


def load_crossed(obj, size_limit: int = DEFAULT_SIZE_LIMIT
                 ) -> FiniteCrossedModule:
    _expect(obj, CROSSED_FORMAT)
    return FiniteCrossedModule(
        load_group(obj["g"], size_limit),
        load_group(obj["h"], size_limit),
        tuple(int(x) for x in obj["boundary"]),
        deep_tuple(_rows(obj["h_action"])),
        load_group(obj["galois"], size_limit),
        deep_tuple(_rows(obj["galois_on_g"])),
        deep_tuple(_rows(obj["galois_on_h"])))


# --- patching graphs --------------------------------------------------------

def dump_graph(graph: PatchingGraph) -> dict:
    return {
        "format": GRAPH_FORMAT,
        "group": dump_group(graph.gamma),
        "vertices": [list(h.members) for h in graph.vertices],
        "edges": [[head, tail, list(h.members)]
                  for head, tail, h in graph.edges],
    }


def load_graph(obj, size_limit: int = DEFAULT_SIZE_LIMIT) -> PatchingGraph:
    _expect(obj, GRAPH_FORMAT)
    gamma = load_group(obj["group"], size_limit)
    vertices = [SubgroupHandle(gamma, tuple(int(x) for x in mem))
                for mem in obj["vertices"]]
    edges = [(int(head), int(tail),
              SubgroupHandle(gamma, tuple(int(x) for x in mem)))
             for head, tail, mem in obj["edges"]]
    return build_patching_graph(gamma, vertices, edges)


# --- resolution certificates ------------------------------------------------

def _dump_side(side: Union[HalfComplex, TwoTermComplex]) -> dict:
    if isinstance(side, TwoTermComplex):
        return {"type": "complex", "value": dump_complex(side)}
    return {"type": "half",
            "group": dump_group(side.a.group),
            "a": _dump_lattice_body(side.a),
            "d": _rows(side.d),
            "b": _dump_module_body(side.b)}


def _load_side(obj, size_limit: int):
    if obj["type"] == "complex":
        return load_complex(obj["value"], size_limit)
    group = load_group(obj["group"], size_limit)
    return HalfComplex(_load_lattice_body(obj["a"], group),
                       _matrix(obj["d"], "half-complex differential"),
                       _load_module_body(obj["b"], group))


def dump_certificate(cert: ResolutionCertificate) -> dict:
    moves = []
    for m in cert.moves:
        moves.append({
            "kind": m.kind,
            "src": _dump_side(m.src),
            "tgt": _dump_side(m.tgt),
            "comp_minus1": (None if m.comp_minus1 is None
                            else _rows(m.comp_minus1)),
            "comp0": None if m.comp0 is None else _rows(m.comp0),
            "evidence": [m.evidence.hminus_ok, m.evidence.h0_ok],
        })
    return {
        "format": CERTIFICATE_FORMAT,
        "mode": cert.mode,
        "original": dump_complex(cert.original),
        "resolved": dump_complex(cert.resolved),
        "moves": moves,
        "vanishing_table": deep_list(cert.vanishing_table),
    }


def load_certificate(obj, size_limit: int = DEFAULT_SIZE_LIMIT
                     ) -> ResolutionCertificate:
    _expect(obj, CERTIFICATE_FORMAT)
    moves = []
    for m in obj["moves"]:
        cm1 = (None if m["comp_minus1"] is None
               else _matrix(m["comp_minus1"], "comp_minus1"))
        c0 = None if m["comp0"] is None else _matrix(m["comp0"], "comp0")
        moves.append(CertificateMove(
            m["kind"], _load_side(m["src"], size_limit),
            _load_side(m["tgt"], size_limit), cm1, c0,
            MoveEvidence(bool(m["evidence"][0]), bool(m["evidence"][1]))))
    return ResolutionCertificate(
        obj["mode"],
        load_complex(obj["original"], size_limit),
        load_complex(obj["resolved"], size_limit),
        tuple(moves),
        deep_tuple(obj["vanishing_table"]))


# --- file helpers -----------------------------------------------------------

def to_json(obj: dict) -> str:
    """Deterministic machine format: sorted keys, fixed separators."""
    return json.dumps(obj, sort_keys=True, separators=(",", ":"))


def write_file(path: str, obj: dict) -> None:
    with open(path, "w") as fh:
        fh.write(to_json(obj) + "\n")


def read_file(path: str) -> dict:
    with open(path) as fh:
        return json.load(fh)
