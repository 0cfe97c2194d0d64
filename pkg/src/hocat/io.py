"""JSON instance, functor and battery files.

Instance files name everything by strings.  Ids are assigned densely in file
order.  The composition list must cover every composable pair exactly once.
Model data adds ``classes``, ``initial``, ``terminal``, the two factorization
tables and optional ``Q``/``R``.  A file with ``classes`` holding only ``W``
is a plain category with weak equivalences.
"""
from __future__ import annotations

import json
import os
from pathlib import Path

from .fincat import FinCategory, Functor, NatTransformation, identity_functor
from .instances import Instance
from .localization import Battery, make_battery
from .model import ModelData


class InstanceError(ValueError):
    """Malformed or partial input file."""


def _need(d: dict, key: str, where: str):
    if key not in d:
        raise InstanceError(f"{where}: missing key {key!r}")
    return d[key]


def _names(seq, where: str) -> list[str]:
    if not isinstance(seq, list) or not all(isinstance(s, str) for s in seq):
        raise InstanceError(f"{where}: expected a list of strings")
    if len(set(seq)) != len(seq):
        raise InstanceError(f"{where}: duplicate names")
    return seq


def category_from_dict(d: dict) -> FinCategory:
    objects = _names(_need(d, "objects", "instance"), "objects")
    oi = {o: k for k, o in enumerate(objects)}
    mors = _need(d, "morphisms", "instance")
    if not isinstance(mors, list):
        raise InstanceError("morphisms: expected a list")
    names, dom, cod = [], [], []
    for m in mors:
        try:
            n, a, b = m["id"], m["dom"], m["cod"]
        except (KeyError, TypeError):
            raise InstanceError(f"morphism entry {m!r} needs id, dom, cod") from None
        if a not in oi or b not in oi:
            raise InstanceError(f"morphism {n!r}: unknown object")
        names.append(n)
        dom.append(oi[a])
        cod.append(oi[b])
    _names(names, "morphism ids")
    mi = {n: k for k, n in enumerate(names)}
    idents = _need(d, "identities", "instance")
    if not isinstance(idents, dict) or set(idents) != set(objects):
        raise InstanceError("identities: need exactly one entry per object")
    for o, f in idents.items():
        if f not in mi:
            raise InstanceError(f"identity of {o!r}: unknown morphism {f!r}")
    n = len(names)
    comp = [[-1] * n for _ in range(n)]
    for e in _need(d, "composition", "instance"):
        try:
            g, f, gf = mi[e["g"]], mi[e["f"]], mi[e["gf"]]
        except (KeyError, TypeError):
            raise InstanceError(f"composition entry {e!r} is malformed") from None
        if cod[f] != dom[g]:
            raise InstanceError(f"composition entry {e!r}: not composable")
        if comp[g][f] != -1:
            raise InstanceError(f"composition entry {e!r}: duplicate pair")
        comp[g][f] = gf
    missing = [(names[g], names[f]) for g in range(n) for f in range(n)
               if cod[f] == dom[g] and comp[g][f] == -1]
    if missing:
        g, f = missing[0]
        raise InstanceError(f"partial composition table: {len(missing)} pairs missing, "
                            f"first {g} o {f}")
    try:
        return FinCategory(objects, names, dom, cod, [mi[idents[o]] for o in objects], comp)
    except ValueError as e:
        raise InstanceError(str(e)) from None


def category_to_dict(c: FinCategory) -> dict:
    return {
        "objects": list(c.obj_names),
        "morphisms": [{"id": c.mor_names[f], "dom": c.obj_names[c.dom[f]],
                       "cod": c.obj_names[c.cod[f]]} for f in c.morphisms],
        "identities": {c.obj_names[x]: c.mor_names[c.ident[x]] for x in c.objects},
        "composition": [{"g": c.mor_names[g], "f": c.mor_names[f],
                         "gf": c.mor_names[c.comp[g][f]]}
                        for g in c.morphisms for f in c.morphisms if c.comp[g][f] >= 0],
    }


def _mor_set(c: FinCategory, names, where: str) -> frozenset:
    try:
        return frozenset(c.mor(n) for n in _names(names, where))
    except KeyError as e:
        raise InstanceError(f"{where}: unknown morphism {e}") from None


def _endo(c: FinCategory, spec: dict, comps_key: str, into_id: bool, where: str):
    try:
        om, mm, cp = spec["obj_map"], spec["mor_map"], spec[comps_key]
        F = Functor(c, c, tuple(c.obj(om[n]) for n in c.obj_names),
                    tuple(c.mor(mm[n]) for n in c.mor_names))
        comps = tuple(c.mor(cp[n]) for n in c.obj_names)
    except (KeyError, TypeError) as e:
        raise InstanceError(f"{where}: incomplete or unknown entry {e}") from None
    ids = identity_functor(c)
    src, tgt = (F, ids) if into_id else (ids, F)
    return F, NatTransformation(src, tgt, comps)


def _fact(c: FinCategory, table, where: str) -> tuple:
    if not isinstance(table, dict):
        raise InstanceError(f"{where}: expected an object")
    out = []
    for n in c.mor_names:
        try:
            e = table[n]
            out.append((c.mor(e["first"]), c.mor(e["second"])))
        except (KeyError, TypeError) as err:
            raise InstanceError(f"{where}: missing or bad entry for {n!r} ({err})") from None
    return tuple(out)


def instance_from_dict(d: dict) -> Instance:
    """Plain instance or model data, depending on the keys present."""
    if not isinstance(d, dict):
        raise InstanceError("instance must be a JSON object")
    c = category_from_dict(d)
    name = d.get("name", "")
    classes = d.get("classes")
    if classes is None:
        return Instance(name, c, frozenset(c.ident))
    W = _mor_set(c, _need(classes, "W", "classes"), "classes.W")
    if set(classes) == {"W"}:
        return Instance(name, c, W)
    Cof = _mor_set(c, _need(classes, "Cof", "classes"), "classes.Cof")
    Fib = _mor_set(c, _need(classes, "Fib", "classes"), "classes.Fib")
    try:
        x0, x1 = c.obj(_need(d, "initial", "model")), c.obj(_need(d, "terminal", "model"))
    except KeyError as e:
        raise InstanceError(f"unknown object {e}") from None
    f1 = _fact(c, _need(d, "fact_cof_trivfib", "model"), "fact_cof_trivfib")
    f2 = _fact(c, _need(d, "fact_trivcof_fib", "model"), "fact_trivcof_fib")
    Q = q = R = r = None
    if d.get("Q") is not None:
        Q, q = _endo(c, d["Q"], "q_components", True, "Q")
    if d.get("R") is not None:
        R, r = _endo(c, d["R"], "r_components", False, "R")
    md = ModelData(c, W, Cof, Fib, x0, x1, f1, f2, Q, q, R, r, name)
    return Instance(name, c, W, md)


def _sorted_names(c: FinCategory, ids) -> list[str]:
    return [c.mor_names[f] for f in sorted(ids)]


def model_to_dict(md: ModelData) -> dict:
    c = md.cat
    out = {"name": md.name, **category_to_dict(c),
           "classes": {"W": _sorted_names(c, md.W), "Cof": _sorted_names(c, md.Cof),
                       "Fib": _sorted_names(c, md.Fib)},
           "initial": c.obj_names[md.init], "terminal": c.obj_names[md.term],
           "fact_cof_trivfib": {c.mor_names[f]: {"first": c.mor_names[a],
                                                 "second": c.mor_names[b]}
                                for f, (a, b) in zip(c.morphisms, md.fact1)},
           "fact_trivcof_fib": {c.mor_names[f]: {"first": c.mor_names[a],
                                                 "second": c.mor_names[b]}
                                for f, (a, b) in zip(c.morphisms, md.fact2)}}
    for key, F, t, ck in (("Q", md.Q, md.q, "q_components"), ("R", md.R, md.r, "r_components")):
        if F is not None:
            out[key] = {"obj_map": {c.obj_names[x]: c.obj_names[F.ob(x)] for x in c.objects},
                        "mor_map": {c.mor_names[f]: c.mor_names[F.ar(f)] for f in c.morphisms},
                        ck: {c.obj_names[x]: c.mor_names[t.components[x]] for x in c.objects}}
    return out


def instance_to_dict(inst: Instance) -> dict:
    if inst.model is not None:
        return model_to_dict(inst.model)
    return {"name": inst.name, **category_to_dict(inst.cat),
            "classes": {"W": _sorted_names(inst.cat, inst.W)}}


def dumps(obj: dict) -> str:
    """Canonical text: two-space indent, insertion order, trailing newline."""
    return json.dumps(obj, indent=2, ensure_ascii=False) + "\n"


def _read(path) -> dict:
    try:
        with open(path, encoding="utf-8") as fh:
            return json.load(fh)
    except json.JSONDecodeError as e:
        raise InstanceError(f"{path}: not JSON ({e})") from None


def load_instance(path) -> Instance:
    return instance_from_dict(_read(path))


def save_instance(inst: Instance, path) -> None:
    Path(path).write_text(dumps(instance_to_dict(inst)), encoding="utf-8")


def functor_from_dict(d: dict, source: FinCategory, target: FinCategory) -> Functor:
    """Functor file: ``{"obj_map": {name: name}, "mor_map": {name: name}}``."""
    try:
        om, mm = d["obj_map"], d["mor_map"]
        return Functor(source, target, tuple(target.obj(om[n]) for n in source.obj_names),
                       tuple(target.mor(mm[n]) for n in source.mor_names))
    except (KeyError, TypeError) as e:
        raise InstanceError(f"functor file: missing or unknown name {e}") from None


def functor_to_dict(F: Functor) -> dict:
    s, t = F.source, F.target
    return {"obj_map": {s.obj_names[x]: t.obj_names[F.ob(x)] for x in s.objects},
            "mor_map": {s.mor_names[f]: t.mor_names[F.ar(f)] for f in s.morphisms}}


def load_functor(path, source: FinCategory, target: FinCategory) -> Functor:
    return functor_from_dict(_read(path), source, target)


def load_battery(directory, label: str | None = None) -> Battery:
    """Every ``*.json`` category in ``directory``, in file-name order."""
    directory = Path(directory)
    if not directory.is_dir():
        raise InstanceError(f"battery directory {directory} does not exist")
    members = [(p.stem, category_from_dict(_read(p)))
               for p in sorted(directory.glob("*.json"))]
    if not members:
        raise InstanceError(f"battery directory {directory} is empty")
    return make_battery(members, label or directory.name)


def data_dir() -> Path:
    return Path(__file__).parent / "data"


def default_battery_dir() -> Path:
    env = os.environ.get("HOCAT_BATTERY_DIR")
    return Path(env) if env else data_dir() / "battery"
