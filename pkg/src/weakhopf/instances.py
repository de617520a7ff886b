"""Instance files: a single JSON document declaring the field, the
groupoid (with an explicit composition table), the algebra B and the
action table.  Coefficients are strings ("2", "-3/4") so nothing ever
passes through floating point.  Pairs absent from the multiplication or
action tables are zero.
"""

import hashlib
import json

from .action import ModuleAction
from .exactmath import field_from_spec
from .groupoid import Groupoid, GroupoidError, Morphism, builtin_i2, cyclic_group
from .walg import FinAlgebra


class InstanceFormatError(ValueError):
    """Malformed instance document: bad JSON shape or dangling references."""


class Instance:
    def __init__(self, name, field, groupoid, algebra, action):
        self.name = name
        self.field = field
        self.groupoid = groupoid
        self.algebra = algebra
        self.action = action

    def to_doc(self) -> dict:
        """Canonical JSON document (scalars as strings, stable list order)."""
        F = self.field
        g = self.groupoid
        doc = {
            "name": self.name,
            "field": F.describe(),
            "groupoid": {
                "objects": list(g.objects),
                "morphisms": [{"id": m.id, "src": m.src, "tgt": m.tgt, "inv": m.inv}
                              for m in g.morphisms],
                "composition": [[a, b, c] for (a, b), c in sorted(g.comp.items())],
            },
            "algebra": {
                "basis": list(self.algebra.basis),
                "unit": {k: F.show(v) for k, v in sorted(self.algebra.unit.items())},
                "multiplication": [
                    [a, b, {k: F.show(v) for k, v in sorted(prod.items())}]
                    for (a, b), prod in sorted(self.algebra.mul.items())
                ],
            },
            "action": [
                [m, b, {k: F.show(v) for k, v in sorted(el.items())}]
                for (m, b), el in sorted(self.action.table.items())
                if el
            ],
        }
        return doc

    def digest(self) -> str:
        blob = json.dumps(self.to_doc(), sort_keys=True, separators=(",", ":"))
        return hashlib.sha256(blob.encode("utf-8")).hexdigest()


def _parse_element(field, doc, basis, where):
    if not isinstance(doc, dict):
        raise InstanceFormatError(f"{where}: element must be an object")
    out = {}
    for lab, text in doc.items():
        if lab not in basis:
            raise InstanceFormatError(f"{where}: unknown basis label {lab!r}")
        try:
            val = field.parse(text)
        except (ValueError, ZeroDivisionError) as exc:
            raise InstanceFormatError(f"{where}: bad coefficient {text!r}: {exc}")
        if val != field.zero:
            out[lab] = val
    return out


def parse_instance(doc: dict) -> Instance:
    if not isinstance(doc, dict):
        raise InstanceFormatError("instance document must be a JSON object")
    try:
        field = field_from_spec(doc["field"])
    except (KeyError, ValueError, TypeError) as exc:
        raise InstanceFormatError(f"bad field spec: {exc}")

    gdoc = doc.get("groupoid")
    if not isinstance(gdoc, dict):
        raise InstanceFormatError("missing groupoid section")
    try:
        morphs = [Morphism(m["id"], m["src"], m["tgt"], m["inv"])
                  for m in gdoc.get("morphisms", [])]
        comp = {}
        for entry in gdoc.get("composition", []):
            a, b, c = entry
            if (a, b) in comp:
                raise InstanceFormatError(
                    f"composition table maps ({a!r}, {b!r}) twice")
            comp[(a, b)] = c
        groupoid = Groupoid(gdoc.get("objects", []), morphs, comp)
    except GroupoidError as exc:
        raise InstanceFormatError(f"groupoid: {exc}")
    except (KeyError, TypeError, ValueError) as exc:
        raise InstanceFormatError(f"groupoid section malformed: {exc}")

    adoc = doc.get("algebra")
    if not isinstance(adoc, dict) or "basis" not in adoc or "unit" not in adoc:
        raise InstanceFormatError("algebra section needs basis and unit")
    basis = list(adoc["basis"])
    if len(set(basis)) != len(basis):
        raise InstanceFormatError("duplicate algebra basis labels")
    bset = set(basis)
    mul = {}
    for entry in adoc.get("multiplication", []):
        a, b, el = entry
        if a not in bset or b not in bset:
            raise InstanceFormatError(f"multiplication references unknown label {a!r} or {b!r}")
        if (a, b) in mul:
            raise InstanceFormatError(f"multiplication table maps ({a!r}, {b!r}) twice")
        mul[(a, b)] = _parse_element(field, el, bset, f"multiplication ({a}, {b})")
    unit = _parse_element(field, adoc["unit"], bset, "unit")
    algebra = FinAlgebra(field, basis, mul, unit, name="B")

    table = {}
    for entry in doc.get("action", []):
        m, b, el = entry
        if m not in set(groupoid.morphism_ids()):
            raise InstanceFormatError(f"action references unknown morphism {m!r}")
        if b not in bset:
            raise InstanceFormatError(f"action references unknown basis label {b!r}")
        if (m, b) in table:
            raise InstanceFormatError(f"action table maps ({m!r}, {b!r}) twice")
        table[(m, b)] = _parse_element(field, el, bset, f"action ({m}, {b})")
    for m in groupoid.morphism_ids():
        for b in basis:
            table.setdefault((m, b), {})
    action = ModuleAction(groupoid, algebra, table)

    name = doc.get("name", "")
    if not isinstance(name, str):
        raise InstanceFormatError("name must be a string")
    return Instance(name, field, groupoid, algebra, action)


def load_instance(path) -> Instance:
    try:
        with open(path, "r", encoding="utf-8") as fh:
            doc = json.load(fh)
    except json.JSONDecodeError as exc:
        raise InstanceFormatError(f"not valid JSON: {exc}")
    return parse_instance(doc)


def dump_instance(inst: Instance) -> str:
    return json.dumps(inst.to_doc(), indent=2, sort_keys=True) + "\n"


# -- builtin library ------------------------------------------------------------


def _trivial_action_doc(groupoid):
    return [[m, "b", {"b": "1"}] for m in groupoid.morphism_ids()]


def _z_trivial(n, name):
    g = cyclic_group(n)
    return {
        "name": name,
        "field": {"kind": "rational"},
        "groupoid": {
            "objects": list(g.objects),
            "morphisms": [{"id": m.id, "src": m.src, "tgt": m.tgt, "inv": m.inv}
                          for m in g.morphisms],
            "composition": [[a, b, c] for (a, b), c in sorted(g.comp.items())],
        },
        "algebra": {"basis": ["b"], "unit": {"b": "1"},
                    "multiplication": [["b", "b", {"b": "1"}]]},
        "action": _trivial_action_doc(g),
    }


def _i2_swap():
    g = builtin_i2()
    return {
        "name": "i2-swap",
        "field": {"kind": "rational"},
        "groupoid": {
            "objects": list(g.objects),
            "morphisms": [{"id": m.id, "src": m.src, "tgt": m.tgt, "inv": m.inv}
                          for m in g.morphisms],
            "composition": [[a, b, c] for (a, b), c in sorted(g.comp.items())],
        },
        "algebra": {
            "basis": ["e1", "e2"],
            "unit": {"e1": "1", "e2": "1"},
            "multiplication": [["e1", "e1", {"e1": "1"}], ["e2", "e2", {"e2": "1"}]],
        },
        "action": [
            ["x", "e1", {"e1": "1"}],
            ["y", "e2", {"e2": "1"}],
            ["g", "e2", {"e1": "1"}],
            ["gi", "e1", {"e2": "1"}],
        ],
    }


def _ex28(field_spec, name):
    # two objects s, t; g runs s -> t; three orthogonal idempotents;
    # e3 is moved onto e1 or e2 depending on which morphism acts
    return {
        "name": name,
        "field": field_spec,
        "groupoid": {
            "objects": ["s", "t"],
            "morphisms": [
                {"id": "s", "src": "s", "tgt": "s", "inv": "s"},
                {"id": "t", "src": "t", "tgt": "t", "inv": "t"},
                {"id": "g", "src": "s", "tgt": "t", "inv": "gi"},
                {"id": "gi", "src": "t", "tgt": "s", "inv": "g"},
            ],
            "composition": [
                ["s", "s", "s"], ["s", "g", "g"],
                ["t", "t", "t"], ["t", "gi", "gi"],
                ["g", "t", "g"], ["g", "gi", "s"],
                ["gi", "s", "gi"], ["gi", "g", "t"],
            ],
        },
        "algebra": {
            "basis": ["e1", "e2", "e3"],
            "unit": {"e1": "1", "e2": "1", "e3": "1"},
            "multiplication": [
                ["e1", "e1", {"e1": "1"}],
                ["e2", "e2", {"e2": "1"}],
                ["e3", "e3", {"e3": "1"}],
            ],
        },
        "action": [
            ["s", "e1", {"e1": "1"}], ["s", "e2", {"e2": "1"}], ["s", "e3", {"e1": "1"}],
            ["t", "e1", {"e1": "1"}], ["t", "e2", {"e2": "1"}], ["t", "e3", {"e2": "1"}],
            ["g", "e1", {"e2": "1"}], ["g", "e2", {"e1": "1"}], ["g", "e3", {"e1": "1"}],
            ["gi", "e1", {"e2": "1"}], ["gi", "e2", {"e1": "1"}], ["gi", "e3", {"e2": "1"}],
        ],
    }


BUILTIN_NAMES = ("z2-trivial", "z3-trivial", "i2-swap", "ex2.8", "ex2.8-gf2")


def builtin_doc(name: str) -> dict:
    if name == "z2-trivial":
        return _z_trivial(2, name)
    if name == "z3-trivial":
        return _z_trivial(3, name)
    if name == "i2-swap":
        return _i2_swap()
    if name == "ex2.8":
        return _ex28({"kind": "rational"}, name)
    if name == "ex2.8-gf2":
        return _ex28({"kind": "prime", "p": 2}, name)
    raise KeyError(f"unknown builtin instance {name!r}")


def builtin_instance(name: str) -> Instance:
    return parse_instance(builtin_doc(name))
