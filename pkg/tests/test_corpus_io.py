import json

import pytest

from hocat import corpus
from hocat.fincat import validate_category, validate_functor
from hocat.instances import all_instances
from hocat.io import (
    InstanceError, category_from_dict, category_to_dict, default_battery_dir, dumps,
    functor_from_dict, instance_from_dict, instance_to_dict, load_battery, load_functor,
    load_instance,
)
from hocat.localization import make_battery
from hocat.model import validate_model


def test_shipped_instances_round_trip_byte_identical(data):
    files = sorted((data / "instances").glob("*.json"))
    assert len(files) >= 6
    for p in files:
        text = p.read_text(encoding="utf-8")
        assert dumps(instance_to_dict(load_instance(p))) == text


def test_shipped_instances_match_builders(data):
    for key, inst in all_instances().items():
        loaded = load_instance(data / "instances" / f"{key}.json")
        assert loaded.cat == inst.cat
        assert loaded.W == inst.W
        if inst.model is not None:
            a, b = loaded.model, inst.model
            assert (a.Cof, a.Fib, a.fact1, a.fact2, a.init, a.term) == \
                (b.Cof, b.Fib, b.fact1, b.fact2, b.init, b.term)
            assert a.Q == b.Q and a.q.components == b.q.components


def test_shipped_instances_are_valid(data):
    for p in sorted((data / "instances").glob("*.json")):
        inst = load_instance(p)
        assert validate_category(inst.cat).ok
        assert all(i in inst.W for i in inst.cat.ident)
        if inst.model is not None:
            assert validate_model(inst.model).ok, p.name


def _arrow_dict():
    return {"name": "ARROW", **category_to_dict(corpus.arrow())}


def test_partial_composition_is_rejected():
    d = _arrow_dict()
    d["composition"] = d["composition"][:-1]
    with pytest.raises(InstanceError, match="partial"):
        category_from_dict(d)


def test_duplicate_and_non_composable_entries_are_rejected():
    d = _arrow_dict()
    d["composition"].append(dict(d["composition"][0]))
    with pytest.raises(InstanceError, match="duplicate"):
        category_from_dict(d)
    d = _arrow_dict()
    d["composition"].append({"g": "f", "f": "f", "gf": "f"})
    with pytest.raises(InstanceError, match="composable"):
        category_from_dict(d)


@pytest.mark.parametrize("mutate", [
    lambda d: d.pop("identities"),
    lambda d: d["identities"].pop("a"),
    lambda d: d["morphisms"].append({"id": "g", "dom": "a", "cod": "nowhere"}),
    lambda d: d["morphisms"].append({"id": "f", "dom": "a", "cod": "b"}),
    lambda d: d.update(objects="ab"),
])
def test_malformed_files_are_rejected(mutate):
    d = _arrow_dict()
    mutate(d)
    with pytest.raises(InstanceError):
        category_from_dict(d)


def test_model_file_with_missing_factorization_is_rejected(data):
    d = json.loads((data / "instances" / "TRIV_DIAMOND.json").read_text())
    d["fact_cof_trivfib"].pop("bot->x")
    with pytest.raises(InstanceError, match="fact_cof_trivfib"):
        instance_from_dict(d)


def test_plain_and_bare_instances(data):
    inst = load_instance(data / "instances" / "ARROW_F.json")
    assert inst.model is None
    assert inst.W == frozenset(inst.cat.mor(n) for n in ("id_a", "id_b", "f"))
    bare = instance_from_dict(_arrow_dict())
    assert bare.W == frozenset(bare.cat.ident)


def test_functor_files_resolve_names(data):
    z = corpus.z2_plus()
    F = load_functor(data / "functors" / "fold_Z2PLUS.json", z, z)
    assert validate_functor(F).ok
    assert F.ar(z.mor("s")) == z.mor("e")
    with pytest.raises(InstanceError):
        functor_from_dict({"obj_map": {}, "mor_map": {}}, z, z)


def test_battery_directory_and_env(tmp_path, monkeypatch, data):
    b = load_battery(data / "battery")
    assert [n for n, _ in b.members] == sorted(corpus.DEFAULT_BATTERY)
    assert load_battery(data / "battery").id == b.id
    for name, c in b.members:
        assert c == corpus.CATEGORIES[name]()
    (tmp_path / "ARROW.json").write_text(dumps(category_to_dict(corpus.arrow())))
    monkeypatch.setenv("HOCAT_BATTERY_DIR", str(tmp_path))
    assert default_battery_dir() == tmp_path
    small = load_battery(default_battery_dir())
    assert len(small.members) == 1 and small.id != b.id
    with pytest.raises(InstanceError):
        load_battery(tmp_path / "missing")


def test_battery_id_depends_on_members():
    a = make_battery([("ARROW", corpus.arrow())])
    b = make_battery([("ARROW", corpus.iso2())])
    assert a.id != b.id
    assert a.id == make_battery([("ARROW", corpus.arrow())]).id
