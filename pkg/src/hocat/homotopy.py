"""Kan and Quillen homotopy categories of finite model data.

``build_hok`` gives the fibrant-cofibrant objects with homotopy classes and
the functor ``L: X -> F~C~X``.  ``build_ho`` gives every object with the
homotopy classes between replacement images and ``gamma``, either through the
local replacements or through the functorial ``R o Q``.
"""
from __future__ import annotations

import itertools
from dataclasses import dataclass, field

from .fincat import (
    Budget, FinCategory, Functor, ValidityReport, _budget, compose_functors,
    enumerate_functors, full_subcategory, is_isomorphism, is_natural,
    validate_functor,
)
from .localization import (
    Battery, LocalizationWitness, Zigzag, classify, default_battery, evaluate_zigzag as _evaluate,
    make_battery,
)
from .model import (
    ModelData, ModelInconsistency, fc_replace, homotopy_classes, left_cylinders,
    lift_FCf, local_cofibrant_replace, local_fibrant_replace,
)


def _class_category(md: ModelData, objs: list[int], label) -> tuple[FinCategory, dict, list]:
    """Category on ``objs`` (labels of replacement objects ``rep``) whose
    morphisms are homotopy classes between the replacement objects.

    ``objs`` are pairs ``(name, rep)``.  Returns the category, the lookup
    ``(i, j, md morphism) -> morphism id`` and the list of ``(i, j, class)``.
    """
    c = md.cat
    mors: list[tuple[int, int, tuple]] = []
    names = []
    for i, (ni, xi) in enumerate(objs):
        for j, (nj, xj) in enumerate(objs):
            for cl in homotopy_classes(md, xi, xj):
                mors.append((i, j, cl))
                names.append(label(ni, nj, cl))
    lookup = {}
    for k, (i, j, cl) in enumerate(mors):
        for f in cl:
            lookup[i, j, f] = k
    n = len(mors)
    comp = [[-1] * n for _ in range(n)]
    for kg, (jg, lg, clg) in enumerate(mors):
        for kf, (i, j, clf) in enumerate(mors):
            if j != jg:
                continue
            hits = {lookup[i, lg, c.comp[g][f]] for g in clg for f in clf}
            if len(hits) != 1:
                raise ModelInconsistency("composition of homotopy classes is not well defined")
            comp[kg][kf] = hits.pop()
    ident = [lookup[i, i, c.ident[x]] for i, (_, x) in enumerate(objs)]
    cat = FinCategory([nm for nm, _ in objs], names, [m[0] for m in mors],
                      [m[1] for m in mors], ident, comp)
    return cat, lookup, mors


@dataclass
class HoK:
    """Kan homotopy category with its localization functor ``L``."""

    md: ModelData
    cat: FinCategory
    L: Functor
    objects: tuple          # model object of each HoK object
    lookup: dict
    witness: LocalizationWitness

    def cls(self, f: int) -> int:
        """HoK morphism of a model morphism between fibrant-cofibrant objects."""
        c = self.md.cat
        pos = self.objects.index
        return self.lookup[pos(c.dom[f]), pos(c.cod[f]), f]


def build_hok(md: ModelData) -> HoK:
    c = md.cat
    fc = list(md.fc_objects())
    if not fc:
        raise ModelInconsistency("no fibrant-cofibrant objects")
    cat, lookup, _ = _class_category(
        md, [(c.obj_names[x], x) for x in fc],
        lambda a, b, cl: f"[{c.mor_names[cl[0]]}]")
    pos = {x: k for k, x in enumerate(fc)}
    obj_map = tuple(pos[fc_replace(md, x)] for x in c.objects)
    mor_map = []
    for f in c.morphisms:
        g = lift_FCf(md, f)
        mor_map.append(lookup[pos[c.dom[g]], pos[c.cod[g]], g])
    L = Functor(c, cat, obj_map, tuple(mor_map))
    rep = validate_functor(L)
    if not rep.ok:
        raise ModelInconsistency(f"L is not a functor: {rep.violations[0]}")
    wit = LocalizationWitness(c, md.W, cat, L, f"HoK({md.name})")
    return HoK(md, cat, L, tuple(fc), lookup, wit)


@dataclass
class Ho:
    """Quillen homotopy category with ``gamma``."""

    md: ModelData
    cat: FinCategory
    gamma: Functor
    route: str
    rep: tuple              # replacement object of each object
    witness: LocalizationWitness
    comparison: dict = field(default_factory=dict)


def _rep_map(md: ModelData, route: str):
    if route == "ctilde":
        return (lambda x: fc_replace(md, x)), (lambda f: lift_FCf(md, f))
    if md.Q is None or md.R is None:
        raise ValueError("the Q route needs both functorial replacements")
    Q, R = md.Q, md.R
    return (lambda x: R.ob(Q.ob(x))), (lambda f: R.ar(Q.ar(f)))


def _build_ho_route(md: ModelData, route: str) -> Ho:
    c = md.cat
    ob, ar = _rep_map(md, route)
    reps = [ob(x) for x in c.objects]
    for x, y in zip(c.objects, reps):
        if not (md.is_cofibrant(y) and md.is_fibrant(y)):
            raise ModelInconsistency(
                f"replacement of {c.obj_names[x]} is not fibrant-cofibrant")
    cat, lookup, _ = _class_category(
        md, [(c.obj_names[x], reps[x]) for x in c.objects],
        lambda a, b, cl: f"[{c.mor_names[cl[0]]}]:{a}->{b}")
    gamma = Functor(c, cat, tuple(c.objects),
                    tuple(lookup[c.dom[f], c.cod[f], ar(f)] for f in c.morphisms))
    rep = validate_functor(gamma)
    if not rep.ok:
        raise ModelInconsistency(f"gamma is not a functor: {rep.violations[0]}")
    wit = LocalizationWitness(c, md.W, cat, gamma, f"Ho({md.name}, {route})")
    return Ho(md, cat, gamma, route, tuple(reps), wit)


def build_ho(md: ModelData, route: str = "ctilde", budget: Budget | None = None) -> Ho:
    """Quillen homotopy category.

    ``route`` is ``"ctilde"`` (local replacements and lifts), ``"q"``
    (``R o Q``) or ``"both"``; with both, the two are compared through the
    unique identity-on-objects functor carrying one ``gamma`` to the other,
    which must be an isomorphism.
    """
    if route not in ("ctilde", "q", "both"):
        raise ValueError(f"unknown route {route!r}")
    if route != "both":
        return _build_ho_route(md, route)
    hc = _build_ho_route(md, "ctilde")
    hq = _build_ho_route(md, "q")
    hc.comparison = compare_routes(hc, hq, budget)
    return hc


def compare_routes(hc: Ho, hq: Ho, budget: Budget | None = None) -> dict:
    budget = _budget(budget)
    c = hc.md.cat
    fixed: dict[int, int] = {}
    for f in c.morphisms:
        a, b = hc.gamma.ar(f), hq.gamma.ar(f)
        if fixed.setdefault(a, b) != b:
            return {"ok": False, "reason": "gamma identifications differ"}
    found = list(itertools.islice(enumerate_functors(
        hc.cat, hq.cat, budget, obj_map=list(c.objects), mor_fixed=fixed), 2))
    if len(found) != 1:
        return {"ok": False, "reason": f"{len(found)} comparison functors"}
    phi = found[0]
    iso = sorted(phi.mor_map) == list(hq.cat.morphisms)
    return {"ok": iso, "phi": phi.describe(), "isomorphism": iso}


def gamma_iso_iff_we(ho: Ho) -> ValidityReport:
    """``gamma f`` is invertible exactly when ``f`` is a weak equivalence."""
    md = ho.md
    c = md.cat
    rep = ValidityReport("gamma inverts exactly W")
    for f in c.morphisms:
        inv = is_isomorphism(ho.cat, ho.gamma.ar(f)) is not None
        if inv != (f in md.W):
            rep.add("gamma", f"{c.describe(f)}: in W = {f in md.W}, gamma invertible = {inv}",
                    (f,))
    return rep


def evaluate_zigzag(ho: Ho, z: Zigzag) -> int:
    """Morphism of Ho represented by a zigzag."""
    return _evaluate(ho.gamma, ho.md.W, z)


# ------------------------------------------------------------------ checks


def hok_identities(hok: HoK) -> ValidityReport:
    """``L c_X`` and ``L f_{C~X}`` are identity classes, and ``F~C~f`` is
    homotopic to ``f`` between fibrant-cofibrant objects."""
    md = hok.md
    c = md.cat
    rep = ValidityReport("HoK identities")
    for x in c.objects:
        cx, gx = local_cofibrant_replace(md, x)
        _, fx = local_fibrant_replace(md, cx)
        for nm, m in (("c", gx), ("f", fx)):
            if not hok.cat.is_identity(hok.L.ar(m)):
                rep.add("identity", f"L({nm}_{c.obj_names[x]}) is not an identity", (x,))
    fc = set(hok.objects)
    for f in c.morphisms:
        if c.dom[f] in fc and c.cod[f] in fc and hok.L.ar(f) != hok.cls(f):
            rep.add("homotopic", f"F~C~{c.mor_names[f]} is not homotopic to it", (f,))
    return rep


def check_hok_weak(hok: HoK, battery: Battery | None = None,
                   budget: Budget | None = None) -> dict:
    wit = classify(hok.witness, battery or default_battery(hok.witness), budget)
    ids = hok_identities(hok)
    return {"flags": {k: v.status for k, v in wit.flags.items()},
            "weak": wit.flags["weak"].verified, "identities": ids.ok,
            "identity_violations": [str(v) for v in ids.violations],
            "battery": wit.evidence["battery"]}


def cofibrant_subcategory(md: ModelData):
    """``M_c`` with its inclusion and its weak equivalences."""
    sub, inc = full_subcategory(md.cat, md.cofibrant_objects())
    Wc = frozenset(k for k, f in enumerate(inc.mor_map) if f in md.W)
    return sub, inc, Wc


def check_hok_on_Mc(hok: HoK, battery: Battery | None = None,
                    budget: Budget | None = None) -> dict:
    """``(HoK, L o i)`` as a localization of the cofibrant objects."""
    md = hok.md
    sub, inc, Wc = cofibrant_subcategory(md)
    wit = LocalizationWitness(sub, Wc, hok.cat, compose_functors(hok.L, inc),
                              f"HoK({md.name}) on M_c")
    classify(wit, battery or default_battery(wit), budget)
    bad = [(md.cat.obj_names[x], md.cat.obj_names[cyl.Z])
           for x in md.cofibrant_objects() for cyl in left_cylinders(md, x)
           if not md.is_cofibrant(cyl.Z)]
    return {"flags": {k: v.status for k, v in wit.flags.items()},
            "weak": wit.flags["weak"].verified, "cylinders_cofibrant": not bad,
            "noncofibrant_cylinders": bad, "witness": wit}


def nat_lemma(ho: Ho, d: FinCategory, budget: Budget | None = None) -> dict:
    """For ``F, G: Ho -> d``, a family of components is natural for ``(F, G)``
    exactly when it is natural for ``(F o gamma, G o gamma)``; checked on
    every family."""
    budget = _budget(budget)
    fun = list(enumerate_functors(ho.cat, d, budget))
    comp = [(F, compose_functors(F, ho.gamma)) for F in fun]
    families = mismatches = 0
    for F, Fg in comp:
        for G, Gg in comp:
            homs = [d.hom(F.ob(x), G.ob(x)) for x in ho.cat.objects]
            for fam in itertools.product(*homs):
                budget.tick()
                families += 1
                if is_natural(F, G, fam) != is_natural(Fg, Gg, fam):
                    mismatches += 1
    return {"functors": len(fun), "families": families, "mismatches": mismatches}


def check_ho_strict(ho: Ho, battery: Battery | None = None,
                    budget: Budget | None = None, lemma_max_objects: int = 3) -> dict:
    battery = battery or default_battery(ho.witness)
    wit = classify(ho.witness, battery, budget)
    lemma = {name: nat_lemma(ho, d, budget) for name, d in battery.members
             if d.n_obj <= lemma_max_objects}
    return {"flags": {k: v.status for k, v in wit.flags.items()},
            "strict": wit.flags["strict"].verified,
            "lemma": lemma,
            "lemma_ok": all(r["mismatches"] == 0 for r in lemma.values()),
            "battery": wit.evidence["battery"]}
