"""Regenerate the shipped JSON data under src/hocat/data."""
from pathlib import Path

from hocat import corpus
from hocat.fincat import Functor, constant_functor, identity_functor
from hocat.instances import all_instances
from hocat.io import category_to_dict, dumps, functor_to_dict, instance_to_dict

DATA = Path(__file__).resolve().parents[1] / "src" / "hocat" / "data"


def write(path: Path, obj: dict) -> None:
    path.parent.mkdir(parents=True, exist_ok=True)
    path.write_text(dumps(obj), encoding="utf-8")


def main():
    for name in corpus.DEFAULT_BATTERY:
        c = corpus.CATEGORIES[name]()
        write(DATA / "battery" / f"{name}.json", {"name": name, **category_to_dict(c)})
    for key, inst in all_instances().items():
        write(DATA / "instances" / f"{key}.json", instance_to_dict(inst))
    d, z = corpus.diamond(), corpus.z2_plus()
    fold = Functor(z, z, tuple(z.objects),
                   tuple(z.mor("e") if z.mor_names[f] == "s" else f for f in z.morphisms))
    functors = {
        "id_DIAMOND": identity_functor(d),
        "const_top_DIAMOND": constant_functor(d, d, d.obj("top")),
        "fold_Z2PLUS": fold,
        "const_star_Z2PLUS": constant_functor(z, z, z.obj("*")),
        "id_CHAIN3": identity_functor(corpus.chain(3)),
    }
    for key, F in functors.items():
        write(DATA / "functors" / f"{key}.json", functor_to_dict(F))


if __name__ == "__main__":
    main()
