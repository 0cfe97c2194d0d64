"""Model-category data on finite categories.

Axiom validation, cofibrant/fibrant replacements (functorial and local),
lifting, cylinder and path objects, left/right homotopy, and the Whitehead
and trivial-fibration correspondence checks.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable, Sequence

from .fincat import (
    Coproduct, FinCategory, Functor, NatTransformation, ValidityReport,
    find_coproduct, find_initial, find_product, find_terminal, fold_map,
    identity_functor, identity_nat, initial_objects, is_natural, isomorphisms,
    opposite, opposite_functor, terminal_objects, unique_arrow, validate_category,
    validate_functor,
)


class ModelInconsistency(RuntimeError):
    """The model data violates a consequence of the axioms."""


class InvalidSquare(ValueError):
    pass


class NoCoproduct(ValueError):
    pass


class NoProduct(ValueError):
    pass


class NotFibrantCofibrant(ValueError):
    pass


@dataclass(frozen=True, eq=False)
class ModelData:
    """A finite category with weak equivalences, cofibrations and fibrations.

    ``fact1[f] = (a, b)`` with ``b o a = f``, ``a`` a cofibration and ``b`` a
    trivial fibration; ``fact2[f] = (a2, b2)`` with ``a2`` a trivial
    cofibration and ``b2`` a fibration.  ``Q, q`` and ``R, r`` are optional
    functorial replacements (``q: Q => id`` and ``r: id => R``).
    """

    cat: FinCategory
    W: frozenset
    Cof: frozenset
    Fib: frozenset
    init: int
    term: int
    fact1: tuple
    fact2: tuple
    Q: Functor | None = None
    q: NatTransformation | None = None
    R: Functor | None = None
    r: NatTransformation | None = None
    name: str = ""
    _cache: dict = field(default_factory=dict, repr=False, compare=False)

    @property
    def trivfib(self) -> frozenset:
        return self.Fib & self.W

    @property
    def trivcof(self) -> frozenset:
        return self.Cof & self.W

    def i(self, x: int) -> int:
        """The unique arrow from the initial object to ``x``."""
        return unique_arrow(self.cat, self.init, x)

    def t(self, x: int) -> int:
        """The unique arrow from ``x`` to the terminal object."""
        return unique_arrow(self.cat, x, self.term)

    def is_cofibrant(self, x: int) -> bool:
        return self.i(x) in self.Cof

    def is_fibrant(self, x: int) -> bool:
        return self.t(x) in self.Fib

    def cofibrant_objects(self) -> tuple[int, ...]:
        return tuple(x for x in self.cat.objects if self.is_cofibrant(x))

    def fibrant_objects(self) -> tuple[int, ...]:
        return tuple(x for x in self.cat.objects if self.is_fibrant(x))

    def fc_objects(self) -> tuple[int, ...]:
        return tuple(x for x in self.cat.objects
                     if self.is_cofibrant(x) and self.is_fibrant(x))

    def cached(self, key, build):
        if key not in self._cache:
            self._cache[key] = build()
        return self._cache[key]


def build_model(
    cat: FinCategory,
    W: Iterable[str],
    Cof: Iterable[str],
    Fib: Iterable[str],
    fact1: dict[str, tuple[str, str]],
    fact2: dict[str, tuple[str, str]],
    init: str | None = None,
    term: str | None = None,
    Q: tuple[dict, dict, dict] | None = None,
    R: tuple[dict, dict, dict] | None = None,
    name: str = "",
) -> ModelData:
    """Assemble :class:`ModelData` from names.

    ``Q`` and ``R`` are ``(obj_map, mor_map, components)`` dictionaries of names.
    """
    m = cat.mor
    x0 = cat.obj(init) if init is not None else find_initial(cat)
    x1 = cat.obj(term) if term is not None else find_terminal(cat)
    if x0 is None or x1 is None:
        raise ValueError("model data needs initial and terminal objects")
    f1 = tuple((m(fact1[n][0]), m(fact1[n][1])) for n in cat.mor_names)
    f2 = tuple((m(fact2[n][0]), m(fact2[n][1])) for n in cat.mor_names)

    def functorial(spec, into_id: bool):
        if spec is None:
            return None, None
        om, mm, comps = spec
        F = Functor(cat, cat, tuple(cat.obj(om[n]) for n in cat.obj_names),
                    tuple(m(mm[n]) for n in cat.mor_names))
        ident = identity_functor(cat)
        src, tgt = (F, ident) if into_id else (ident, F)
        return F, NatTransformation(src, tgt, tuple(m(comps[n]) for n in cat.obj_names))

    Qf, qn = functorial(Q, True)
    Rf, rn = functorial(R, False)
    return ModelData(
        cat, frozenset(map(m, W)), frozenset(map(m, Cof)), frozenset(map(m, Fib)),
        x0, x1, f1, f2, Qf, qn, Rf, rn, name)


def triv_model(c: FinCategory, name: str = "") -> ModelData:
    """Weak equivalences the isomorphisms, every map a (co)fibration."""
    ids = identity_functor(c)
    return ModelData(
        c, isomorphisms(c), frozenset(c.morphisms), frozenset(c.morphisms),
        _need(find_initial(c)), _need(find_terminal(c)),
        tuple((f, c.ident[c.cod[f]]) for f in c.morphisms),
        tuple((c.ident[c.dom[f]], f) for f in c.morphisms),
        ids, identity_nat(ids), ids, identity_nat(ids), name or "TRIV")


def collapse_model(c: FinCategory, name: str = "") -> ModelData:
    """Every map a weak equivalence and a cofibration; fibrations the isomorphisms."""
    ids = identity_functor(c)
    x0, x1 = _need(find_initial(c)), _need(find_terminal(c))
    R = Functor(c, c, (x1,) * c.n_obj, (c.ident[x1],) * c.n_mor)
    r = NatTransformation(ids, R, tuple(unique_arrow(c, x, x1) for x in c.objects))
    pair = tuple((f, c.ident[c.cod[f]]) for f in c.morphisms)
    return ModelData(
        c, frozenset(c.morphisms), frozenset(c.morphisms), isomorphisms(c),
        x0, x1, pair, pair, ids, identity_nat(ids), R, r, name or "COLLAPSE")


def _need(x):
    if x is None:
        raise ValueError("model data needs initial and terminal objects")
    return x


def opposite_model(md: ModelData) -> ModelData:
    """The dual model data: cofibrations and fibrations swap roles."""
    c = opposite(md.cat)
    f1 = tuple((b2, a2) for (a2, b2) in md.fact2)
    f2 = tuple((b, a) for (a, b) in md.fact1)
    Q = q = R = r = None
    if md.R is not None:
        Q = opposite_functor(md.R)
        q = NatTransformation(Q, identity_functor(c), md.r.components)
    if md.Q is not None:
        R = opposite_functor(md.Q)
        r = NatTransformation(identity_functor(c), R, md.q.components)
    return ModelData(c, md.W, md.Fib, md.Cof, md.term, md.init, f1, f2,
                     Q, q, R, r, (md.name + "^op") if md.name else "op")


# ------------------------------------------------------------- validation


def validate_model(md: ModelData) -> ValidityReport:
    """Itemized check of the model axioms; first counterexample per axiom."""
    c = md.cat
    rep = ValidityReport("model")
    base = validate_category(c)
    if not base.ok:
        rep.violations.extend(base.violations)
        return rep
    for nm, cls in (("W", md.W), ("Cof", md.Cof), ("Fib", md.Fib)):
        if any(not 0 <= f < c.n_mor for f in cls):
            rep.add("class", f"{nm} has members outside the category")
            return rep
    if len(md.fact1) != c.n_mor or len(md.fact2) != c.n_mor:
        rep.add("factorization", "one factorization per morphism required")
        return rep
    if md.init not in initial_objects(c):
        rep.add("initial", f"{c.obj_names[md.init]} is not initial")
    if md.term not in terminal_objects(c):
        rep.add("terminal", f"{c.obj_names[md.term]} is not terminal")
    if rep.violations:
        return rep

    isos = isomorphisms(c)
    for nm, cls in (("W", md.W), ("Cof", md.Cof), ("Fib", md.Fib)):
        missing = sorted(isos - cls)
        if missing:
            rep.add("isomorphisms", f"isomorphism {c.describe(missing[0])} not in {nm}",
                    (missing[0],))

    for g in c.morphisms:
        for f in c.morphisms:
            gf = c.comp[g][f]
            if gf < 0:
                continue
            ins = (f in md.W, g in md.W, gf in md.W)
            if sum(ins) == 2:
                rep.add("2-out-of-3",
                        f"{c.mor_names[g]} o {c.mor_names[f]}: membership {ins}", (g, f))
                break
        else:
            continue
        break

    for nm, cls in (("W", md.W), ("Cof", md.Cof), ("Fib", md.Fib)):
        bad = _retract_violation(c, cls)
        if bad is not None:
            f, g = bad
            rep.add("retract", f"{c.describe(f)} is a retract of {nm}-member "
                    f"{c.describe(g)} but not in {nm}", bad)

    for lname, left, rname, right in (
            ("Cof", md.Cof, "Fib∩W", md.trivfib), ("Cof∩W", md.trivcof, "Fib", md.Fib)):
        sq = _lifting_violation(c, left, right)
        if sq is not None:
            top, l, bottom, r = sq
            rep.add("lifting",
                    f"{lname} {c.mor_names[l]} against {rname} {c.mor_names[r]} "
                    f"(top {c.mor_names[top]}, bottom {c.mor_names[bottom]}) has no filler",
                    sq)

    for f in c.morphisms:
        a, b = md.fact1[f]
        if c.cod[a] != c.dom[b] or c.comp[b][a] != f:
            rep.add("factorization", f"fact1 of {c.mor_names[f]} does not compose to it", (f,))
        elif a not in md.Cof or b not in md.trivfib:
            rep.add("factorization", f"fact1 of {c.mor_names[f]} is not (Cof, Fib∩W)", (f,))
        a2, b2 = md.fact2[f]
        if c.cod[a2] != c.dom[b2] or c.comp[b2][a2] != f:
            rep.add("factorization", f"fact2 of {c.mor_names[f]} does not compose to it", (f,))
        elif a2 not in md.trivcof or b2 not in md.Fib:
            rep.add("factorization", f"fact2 of {c.mor_names[f]} is not (Cof∩W, Fib)", (f,))

    _check_replacement(md, rep, "Q")
    _check_replacement(md, rep, "R")
    return rep


def _check_replacement(md: ModelData, rep: ValidityReport, which: str) -> None:
    c = md.cat
    F, eta = (md.Q, md.q) if which == "Q" else (md.R, md.r)
    if F is None and eta is None:
        return
    if F is None or eta is None:
        rep.add(which, "functor and transformation must be given together")
        return
    fr = validate_functor(F)
    if not fr.ok:
        rep.add(which, f"{which} is not a functor: {fr.violations[0]}")
        return
    ids = identity_functor(c)
    src, tgt = (F, ids) if which == "Q" else (ids, F)
    if len(eta.components) != c.n_obj or not is_natural(src, tgt, eta.components):
        rep.add(which, f"the {which.lower()} transformation is not natural")
        return
    for x in c.objects:
        y = F.ob(x)
        if which == "Q":
            if not md.is_cofibrant(y):
                rep.add(which, f"Q({c.obj_names[x]}) is not cofibrant", (x,))
            if eta[x] not in md.trivfib:
                rep.add(which, f"q at {c.obj_names[x]} is not a trivial fibration", (x,))
        else:
            if not md.is_fibrant(y):
                rep.add(which, f"R({c.obj_names[x]}) is not fibrant", (x,))
            if eta[x] not in md.trivcof:
                rep.add(which, f"r at {c.obj_names[x]} is not a trivial cofibration", (x,))


def _retract_violation(c: FinCategory, cls: frozenset):
    """First ``(f, g)`` with ``f`` a retract of ``g in cls`` but ``f not in cls``."""
    comp = c.comp
    for f in c.morphisms:
        if f in cls:
            continue
        A, B = c.dom[f], c.cod[f]
        for g in sorted(cls):
            C, D = c.dom[g], c.cod[g]
            sections_a = [(i, r) for i in c.hom(A, C) for r in c.hom(C, A)
                          if comp[r][i] == c.ident[A]]
            if not sections_a:
                continue
            sections_b = [(j, s) for j in c.hom(B, D) for s in c.hom(D, B)
                          if comp[s][j] == c.ident[B]]
            for i, r in sections_a:
                for j, s in sections_b:
                    if comp[g][i] == comp[j][f] and comp[f][r] == comp[s][g]:
                        return f, g
    return None


def _lifting_violation(c: FinCategory, left: frozenset, right: frozenset):
    comp = c.comp
    for l in sorted(left):
        A, B = c.dom[l], c.cod[l]
        for p in sorted(right):
            X, Y = c.dom[p], c.cod[p]
            for top in c.hom(A, X):
                pt = comp[p][top]
                for bottom in c.hom(B, Y):
                    if comp[bottom][l] != pt:
                        continue
                    if not any(comp[h][l] == top and comp[p][h] == bottom
                               for h in c.hom(B, X)):
                        return top, l, bottom, p
    return None


# ------------------------------------------------------------ replacements


def cofibrant_replace(md: ModelData, x: int) -> tuple[int, int]:
    """``(QX, q_X)`` from the functorial replacement, else from ``fact1(i_X)``."""
    if md.Q is not None:
        return md.Q.ob(x), md.q[x]
    a, b = md.fact1[md.i(x)]
    return md.cat.cod[a], b


def fibrant_replace(md: ModelData, x: int) -> tuple[int, int]:
    """``(RX, r_X)`` from the functorial replacement, else from ``fact2(t_X)``."""
    if md.R is not None:
        return md.R.ob(x), md.r[x]
    a2, _ = md.fact2[md.t(x)]
    return md.cat.cod[a2], a2


def local_cofibrant_replace(md: ModelData, x: int) -> tuple[int, int]:
    """``(C~X, c_X)``: identity on cofibrant objects, else from ``fact1(i_X)``."""
    if md.is_cofibrant(x):
        return x, md.cat.ident[x]
    a, b = md.fact1[md.i(x)]
    return md.cat.cod[a], b


def local_fibrant_replace(md: ModelData, x: int) -> tuple[int, int]:
    """``(F~X, f_X)``: identity on fibrant objects, else from ``fact2(t_X)``."""
    if md.is_fibrant(x):
        return x, md.cat.ident[x]
    a2, _ = md.fact2[md.t(x)]
    return md.cat.cod[a2], a2


def lifts(md: ModelData, top: int, left: int, bottom: int, right: int) -> list[int]:
    """Every filler of a commutative square, in canonical order."""
    c = md.cat
    if (c.cod[top] != c.dom[right] or c.dom[top] != c.dom[left]
            or c.cod[left] != c.dom[bottom] or c.cod[bottom] != c.cod[right]):
        raise InvalidSquare("square edges do not match up")
    if c.comp[right][top] != c.comp[bottom][left]:
        raise InvalidSquare("square does not commute")
    return [h for h in c.hom(c.cod[left], c.dom[right])
            if c.comp[h][left] == top and c.comp[right][h] == bottom]


def solve_lifting(md: ModelData, top: int, left: int, bottom: int, right: int) -> int | None:
    """Least filler of a square with ``left`` in Cof and ``right`` in Fib∩W,
    or ``left`` in Cof∩W and ``right`` in Fib."""
    if not ((left in md.Cof and right in md.trivfib)
            or (left in md.trivcof and right in md.Fib)):
        raise InvalidSquare("left leg must lift against right leg by the axioms")
    hs = lifts(md, top, left, bottom, right)
    return hs[0] if hs else None


def _lift_C_square(md: ModelData, f: int):
    c = md.cat
    cx, gx = local_cofibrant_replace(md, c.dom[f])
    cy, gy = local_cofibrant_replace(md, c.cod[f])
    return md.i(cy), md.i(cx), c.comp[f][gx], gy


def lift_Cf(md: ModelData, f: int) -> int:
    """Canonical ``C~f`` with ``c_Y o C~f = f o c_X``."""
    h = solve_lifting(md, *_lift_C_square(md, f))
    if h is None:
        raise ModelInconsistency(f"no lift C~f for {md.cat.describe(f)}")
    return h


def all_lifts_Cf(md: ModelData, f: int) -> list[int]:
    return lifts(md, *_lift_C_square(md, f))


def _lift_F_square(md: ModelData, g: int):
    c = md.cat
    fa_obj, fa = local_fibrant_replace(md, c.dom[g])
    fb_obj, fb = local_fibrant_replace(md, c.cod[g])
    return c.comp[fb][g], fa, md.t(fa_obj), md.t(fb_obj)


def lift_Ff(md: ModelData, g: int) -> int:
    """Canonical ``F~g`` with ``F~g o f_A = f_B o g``."""
    h = solve_lifting(md, *_lift_F_square(md, g))
    if h is None:
        raise ModelInconsistency(f"no lift F~g for {md.cat.describe(g)}")
    return h


def all_lifts_Ff(md: ModelData, g: int) -> list[int]:
    return lifts(md, *_lift_F_square(md, g))


def fc_replace(md: ModelData, x: int) -> int:
    """The object ``F~C~X``."""
    return local_fibrant_replace(md, local_cofibrant_replace(md, x)[0])[0]


def lift_FCf(md: ModelData, f: int) -> int:
    """Canonical ``F~C~f: F~C~X -> F~C~Y``."""
    return lift_Ff(md, lift_Cf(md, f))


# ------------------------------------------------------ cylinders and paths


@dataclass(frozen=True)
class CylinderWitness:
    """A factorization of the fold map through ``Z``.

    ``i1, i2`` are the two legs ``X -> Z`` (``i o phi1``, ``i o phi2`` when the
    coproduct exists) and ``w: Z -> X`` is a weak equivalence with
    ``w o i1 = w o i2 = id``.
    """

    X: int
    Z: int
    i1: int
    i2: int
    w: int
    coproduct: Coproduct | None = None
    i: int | None = None


@dataclass(frozen=True)
class PathWitness:
    """A factorization of the diagonal through ``Z``: ``w: Y -> Z`` in W and
    legs ``p1, p2: Z -> Y`` with ``p1 o w = p2 o w = id``."""

    Y: int
    Z: int
    p1: int
    p2: int
    w: int
    product: Coproduct | None = None
    p: int | None = None


def cylinders(md: ModelData, x: int) -> list[CylinderWitness]:
    """All cylinder objects of ``x``; requires the coproduct ``x + x``."""
    c = md.cat
    cp = find_coproduct(c, x, x)
    if cp is None:
        raise NoCoproduct(f"{c.obj_names[x]} + {c.obj_names[x]} does not exist")
    fold = fold_map(c, x, cp)
    out = []
    for z in c.objects:
        for i in c.hom(cp.obj, z):
            if i not in md.Cof:
                continue
            for w in c.hom(z, x):
                if w in md.W and c.comp[w][i] == fold:
                    out.append(CylinderWitness(
                        x, z, c.comp[i][cp.inj1], c.comp[i][cp.inj2], w, cp, i))
    return out


def paths(md: ModelData, y: int) -> list[PathWitness]:
    """All path objects of ``y``; requires the product ``y x y``."""
    c = md.cat
    pr = find_product(c, y, y)
    if pr is None:
        raise NoProduct(f"{c.obj_names[y]} x {c.obj_names[y]} does not exist")
    diag = fold_map(opposite(c), y, pr)
    out = []
    for z in c.objects:
        for w in c.hom(y, z):
            if w not in md.W:
                continue
            for p in c.hom(z, pr.obj):
                if p in md.Fib and c.comp[p][w] == diag:
                    out.append(PathWitness(
                        y, z, c.comp[pr.inj1][p], c.comp[pr.inj2][p], w, pr, p))
    return out


def cocone_cylinders(md: ModelData, x: int) -> list[CylinderWitness]:
    """Cylinders described without the coproduct.

    A pair of legs ``i1, i2: X -> Z`` with a weak equivalence ``w`` retracting
    both, where the pair has the left lifting property against every trivial
    fibration.  With a coproduct present this is the same as a cylinder.
    """
    c = md.cat
    out = []
    idx = c.ident[x]
    for z in c.objects:
        for w in c.hom(z, x):
            if w not in md.W:
                continue
            legs = [i for i in c.hom(x, z) if c.comp[w][i] == idx]
            for i1 in legs:
                for i2 in legs:
                    if _cocone_lifts(md, x, z, i1, i2):
                        out.append(CylinderWitness(x, z, i1, i2, w))
    return out


def cone_paths(md: ModelData, y: int) -> list[PathWitness]:
    """Dual of :func:`cocone_cylinders`."""
    c = md.cat
    out = []
    idy = c.ident[y]
    for z in c.objects:
        legs = [p for p in c.hom(z, y)]
        for w in c.hom(y, z):
            if w not in md.W:
                continue
            ok = [p for p in legs if c.comp[p][w] == idy]
            for p1 in ok:
                for p2 in ok:
                    if _cone_lifts(md, y, z, p1, p2):
                        out.append(PathWitness(y, z, p1, p2, w))
    return out


def _cocone_lifts(md: ModelData, x: int, z: int, i1: int, i2: int) -> bool:
    c = md.cat
    comp = c.comp
    for p in sorted(md.trivfib):
        e, b = c.dom[p], c.cod[p]
        for bot in c.hom(z, b):
            b1, b2 = comp[bot][i1], comp[bot][i2]
            for e1 in c.hom(x, e):
                if comp[p][e1] != b1:
                    continue
                for e2 in c.hom(x, e):
                    if comp[p][e2] != b2:
                        continue
                    if not any(comp[h][i1] == e1 and comp[h][i2] == e2 and comp[p][h] == bot
                               for h in c.hom(z, e)):
                        return False
    return True


def _cone_lifts(md: ModelData, y: int, z: int, p1: int, p2: int) -> bool:
    c = md.cat
    comp = c.comp
    for j in sorted(md.trivcof):
        a, b = c.dom[j], c.cod[j]
        for top in c.hom(a, z):
            t1, t2 = comp[p1][top], comp[p2][top]
            for b1 in c.hom(b, y):
                if comp[b1][j] != t1:
                    continue
                for b2 in c.hom(b, y):
                    if comp[b2][j] != t2:
                        continue
                    if not any(comp[h][j] == top and comp[p1][h] == b1 and comp[p2][h] == b2
                               for h in c.hom(b, z)):
                        return False
    return True


def left_cylinders(md: ModelData, x: int) -> list[CylinderWitness]:
    """Cylinders used for left homotopy (cocone form when ``x + x`` is absent)."""
    def build():
        try:
            return cylinders(md, x)
        except NoCoproduct:
            return cocone_cylinders(md, x)
    return md.cached(("cyl", x), build)


def right_paths(md: ModelData, y: int) -> list[PathWitness]:
    def build():
        try:
            return paths(md, y)
        except NoProduct:
            return cone_paths(md, y)
    return md.cached(("path", y), build)


def left_pairs(md: ModelData, x: int, y: int) -> frozenset[tuple[int, int]]:
    """All ``(f, g)`` in ``Hom(x, y)`` that are left homotopic."""
    def build():
        c = md.cat
        out = set()
        for cyl in left_cylinders(md, x):
            for h in c.hom(cyl.Z, y):
                out.add((c.comp[h][cyl.i1], c.comp[h][cyl.i2]))
        return frozenset(out)
    return md.cached(("left", x, y), build)


def right_pairs(md: ModelData, x: int, y: int) -> frozenset[tuple[int, int]]:
    """All ``(f, g)`` in ``Hom(x, y)`` that are right homotopic."""
    def build():
        c = md.cat
        out = set()
        for pth in right_paths(md, y):
            for k in c.hom(x, pth.Z):
                out.add((c.comp[pth.p1][k], c.comp[pth.p2][k]))
        return frozenset(out)
    return md.cached(("right", x, y), build)


def _parallel_check(c: FinCategory, f: int, g: int) -> None:
    if c.dom[f] != c.dom[g] or c.cod[f] != c.cod[g]:
        raise ValueError("morphisms are not parallel")


def left_homotopic(md: ModelData, f: int, g: int) -> bool:
    c = md.cat
    _parallel_check(c, f, g)
    return (f, g) in left_pairs(md, c.dom[f], c.cod[f])


def right_homotopic(md: ModelData, f: int, g: int) -> bool:
    c = md.cat
    _parallel_check(c, f, g)
    return (f, g) in right_pairs(md, c.dom[f], c.cod[f])


def homotopic(md: ModelData, f: int, g: int) -> bool:
    return left_homotopic(md, f, g) and right_homotopic(md, f, g)


def _equivalence_failure(elems: Sequence[int], rel: frozenset) -> str | None:
    for a in elems:
        if (a, a) not in rel:
            return "not reflexive"
    for a, b in rel:
        if (b, a) not in rel:
            return "not symmetric"
    for a, b in rel:
        for b2, cc in rel:
            if b == b2 and (a, cc) not in rel:
                return "not transitive"
    return None


def _partition(elems: Sequence[int], rel: frozenset) -> tuple[tuple[int, ...], ...]:
    classes: list[list[int]] = []
    for a in elems:
        for cl in classes:
            if (cl[0], a) in rel:
                cl.append(a)
                break
        else:
            classes.append([a])
    return tuple(tuple(cl) for cl in classes)


def left_classes(md: ModelData, x: int, y: int) -> tuple[tuple[int, ...], ...]:
    """Left homotopy classes of ``Hom(x, y)``; the relation must be an equivalence."""
    hom = md.cat.hom(x, y)
    rel = left_pairs(md, x, y)
    why = _equivalence_failure(hom, rel)
    if why is not None:
        raise ModelInconsistency(
            f"left homotopy on Hom({md.cat.obj_names[x]}, {md.cat.obj_names[y]}) is {why}")
    return _partition(hom, rel)


def homotopy_classes(md: ModelData, x: int, y: int) -> tuple[tuple[int, ...], ...]:
    """Homotopy classes of ``Hom(x, y)`` between fibrant-cofibrant objects."""
    def build():
        c = md.cat
        for o in (x, y):
            if not (md.is_cofibrant(o) and md.is_fibrant(o)):
                raise NotFibrantCofibrant(f"{c.obj_names[o]} is not fibrant-cofibrant")
        hom = c.hom(x, y)
        left, right = left_pairs(md, x, y), right_pairs(md, x, y)
        if left != right:
            raise ModelInconsistency(
                f"left and right homotopy differ on Hom({c.obj_names[x]}, {c.obj_names[y]})")
        why = _equivalence_failure(hom, left)
        if why is not None:
            raise ModelInconsistency(
                f"homotopy on Hom({c.obj_names[x]}, {c.obj_names[y]}) is {why}")
        return _partition(hom, left)
    return md.cached(("classes", x, y), build)


@dataclass
class HomotopyTable:
    """Left/right homotopy relations for every ordered pair of objects and the
    homotopy partition on fibrant-cofibrant pairs."""

    left: dict
    right: dict
    classes: dict


def homotopy_table(md: ModelData) -> HomotopyTable:
    c = md.cat
    fc = set(md.fc_objects())
    left, right, classes = {}, {}, {}
    for x in c.objects:
        for y in c.objects:
            left[x, y] = left_pairs(md, x, y)
            right[x, y] = right_pairs(md, x, y)
            if x in fc and y in fc:
                classes[x, y] = homotopy_classes(md, x, y)
    return HomotopyTable(left, right, classes)


def class_of(md: ModelData, f: int) -> tuple[int, ...]:
    c = md.cat
    for cl in homotopy_classes(md, c.dom[f], c.cod[f]):
        if f in cl:
            return cl
    raise AssertionError("morphism missing from its partition")


# ------------------------------------------------------------------- checks


def check_whitehead(md: ModelData) -> ValidityReport:
    """Between fibrant-cofibrant objects: weak equivalence iff homotopy equivalence."""
    c = md.cat
    rep = ValidityReport("whitehead")
    fc = md.fc_objects()
    n = 0
    for x in fc:
        for y in fc:
            for f in c.hom(x, y):
                n += 1
                heq = any(
                    left_homotopic(md, c.comp[g][f], c.ident[x])
                    and left_homotopic(md, c.comp[f][g], c.ident[y])
                    for g in c.hom(y, x))
                if heq != (f in md.W):
                    rep.add("whitehead",
                            f"{c.describe(f)}: in W = {f in md.W}, homotopy equivalence = {heq}",
                            (f,))
    rep.notes.append(f"{n} morphisms between fibrant-cofibrant objects checked")
    return rep


def check_trivfib_correspondence(md: ModelData) -> ValidityReport:
    """For cofibrant ``X`` and trivial fibration ``p: Y -> Z``, ``p o -`` is a
    bijection of left homotopy classes ``Hom(X, Y) -> Hom(X, Z)``."""
    c = md.cat
    rep = ValidityReport("trivial fibration correspondence")
    n = 0
    for x in md.cofibrant_objects():
        for p in sorted(md.trivfib):
            y, z = c.dom[p], c.cod[p]
            n += 1
            try:
                src = left_classes(md, x, y)
                tgt = left_classes(md, x, z)
            except ModelInconsistency as e:
                rep.add("equivalence", str(e), (x, p))
                continue
            tindex = {f: k for k, cl in enumerate(tgt) for f in cl}
            images = []
            ok = True
            for cl in src:
                ims = {tindex[c.comp[p][f]] for f in cl}
                if len(ims) != 1:
                    rep.add("well-defined", f"{c.mor_names[p]} o - splits a class at "
                            f"{c.obj_names[x]}", (x, p))
                    ok = False
                    break
                images.append(ims.pop())
            if ok and sorted(images) != list(range(len(tgt))):
                rep.add("bijective", f"{c.mor_names[p]} o - is not bijective on classes from "
                        f"{c.obj_names[x]}", (x, p))
    rep.notes.append(f"{n} (cofibrant object, trivial fibration) pairs checked")
    return rep
