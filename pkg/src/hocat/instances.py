"""The shipped instance corpus: model data and plain categories with marked W."""
from __future__ import annotations

import dataclasses
from dataclasses import dataclass

from .corpus import arrow, chain, diamond, iso2, z2_plus
from .fincat import (
    FinCategory, Functor, NatTransformation, find_initial, find_terminal, identity_functor,
    isomorphisms,
)
from .model import (
    ModelData, build_model, collapse_model, lift_Cf, lift_Ff, local_cofibrant_replace,
    local_fibrant_replace, triv_model,
)


@dataclass(frozen=True, eq=False)
class Instance:
    """A category with marked weak equivalences, optionally full model data."""

    name: str
    cat: FinCategory
    W: frozenset
    model: ModelData | None = None

    @property
    def is_model(self) -> bool:
        return self.model is not None


def first_factorization(c: FinCategory, f: int, left: frozenset, right: frozenset):
    """Least ``(a, b)`` with ``b o a = f``, ``a`` in ``left`` and ``b`` in ``right``."""
    x, y = c.dom[f], c.cod[f]
    for z in c.objects:
        for a in c.hom(x, z):
            if a not in left:
                continue
            for b in c.hom(z, y):
                if b in right and c.comp[b][a] == f:
                    return a, b
    raise ValueError(f"{c.describe(f)} has no factorization")


def model_from_classes(c: FinCategory, W, Cof, Fib, name: str = "") -> ModelData:
    """Model data with the first factorizations in canonical order."""
    m = c.mor
    iso = isomorphisms(c)
    W = frozenset(map(m, W)) | iso
    Cof = frozenset(map(m, Cof)) | iso
    Fib = frozenset(map(m, Fib)) | iso
    f1 = tuple(first_factorization(c, f, Cof, Fib & W) for f in c.morphisms)
    f2 = tuple(first_factorization(c, f, Cof & W, Fib) for f in c.morphisms)
    return ModelData(c, W, Cof, Fib, find_initial(c), find_terminal(c), f1, f2, name=name)


def with_local_replacements(md: ModelData) -> ModelData:
    """Attach ``Q = C~`` and ``R = F~`` built from the chosen factorizations."""
    c = md.cat
    ids = identity_functor(c)
    cq = [local_cofibrant_replace(md, x) for x in c.objects]
    Q = Functor(c, c, tuple(o for o, _ in cq), tuple(lift_Cf(md, f) for f in c.morphisms))
    fr = [local_fibrant_replace(md, x) for x in c.objects]
    R = Functor(c, c, tuple(o for o, _ in fr), tuple(lift_Ff(md, f) for f in c.morphisms))
    return dataclasses.replace(
        md, Q=Q, q=NatTransformation(Q, ids, tuple(p for _, p in cq)),
        R=R, r=NatTransformation(ids, R, tuple(p for _, p in fr)), _cache={})


def twist_model() -> ModelData:
    """TRIV on Z2+ with ``Q = id`` but ``q_G = s``, so ``q`` differs from ``c``."""
    md = triv_model(z2_plus(), "TWIST(Z2+)")
    c = md.cat
    comps = tuple(c.mor("s") if c.obj_names[x] == "G" else c.ident[x] for x in c.objects)
    return dataclasses.replace(md, q=NatTransformation(md.Q, md.Q, comps), _cache={})


def chain3_model() -> ModelData:
    """``0 -> 1 -> 2`` with every map a weak equivalence, ``0->1`` the only
    non-identity cofibration and ``1->2`` the only non-identity fibration."""
    c = chain(3)
    pairs = {"0->1": ("0->1", "id_1"), "0->2": ("0->1", "1->2"), "1->2": ("id_1", "1->2")}
    fact = {n: pairs.get(n, (n, n)) for n in c.mor_names}
    Q = ({"0": "0", "1": "1", "2": "1"},
         {"id_0": "id_0", "id_1": "id_1", "id_2": "id_1",
          "0->1": "0->1", "0->2": "0->1", "1->2": "id_1"},
         {"0": "id_0", "1": "id_1", "2": "1->2"})
    R = ({"0": "1", "1": "1", "2": "2"},
         {"id_0": "id_1", "id_1": "id_1", "id_2": "id_2",
          "0->1": "id_1", "0->2": "1->2", "1->2": "1->2"},
         {"0": "0->1", "1": "id_1", "2": "id_2"})
    return build_model(c, c.mor_names, ["id_0", "id_1", "id_2", "0->1"],
                       ["id_0", "id_1", "id_2", "1->2"], fact, fact, "0", "2", Q, R,
                       name="CHAIN3")


def mixed_diamond() -> ModelData:
    """DIAMOND with ``y`` and ``top`` not cofibrant."""
    md = model_from_classes(diamond(), ["bot->y", "x->top"], ["bot->x", "y->top"],
                            diamond().mor_names, "MIXED(DIAMOND)")
    return with_local_replacements(md)


def model_instances() -> dict[str, ModelData]:
    return {
        "TRIV_DIAMOND": triv_model(diamond(), "TRIV(DIAMOND)"),
        "COLLAPSE_DIAMOND": collapse_model(diamond(), "COLLAPSE(DIAMOND)"),
        "TRIV_Z2PLUS": triv_model(z2_plus(), "TRIV(Z2+)"),
        "TWIST_Z2PLUS": twist_model(),
        "CHAIN3_MODEL": chain3_model(),
        "MIXED_DIAMOND": mixed_diamond(),
    }


def marked(name: str, c: FinCategory, W) -> Instance:
    """Plain instance; identities are always weak equivalences."""
    return Instance(name, c, frozenset(c.mor(n) for n in W) | frozenset(c.ident))


def plain_instances() -> dict[str, Instance]:
    return {
        "ARROW_F": marked("ARROW/{f}", arrow(), ["f"]),
        "CHAIN3_01": marked("CHAIN3/{0->1}", chain(3), ["0->1"]),
        "ISO2_U": marked("ISO2/{u}", iso2(), ["u"]),
    }


def all_instances() -> dict[str, Instance]:
    out = {k: Instance(md.name, md.cat, md.W, md) for k, md in model_instances().items()}
    out.update(plain_instances())
    return out
