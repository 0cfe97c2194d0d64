"""Explicit finite categories, functors and natural transformations.

A :class:`FinCategory` is given by a total composition table.  Objects and
morphisms are dense integer ids; names are carried along for reporting and
serialization only.  Everything here is immutable once built, and every
enumeration emits results in a canonical (lexicographic) order so that runs
are reproducible.
"""
from __future__ import annotations

import weakref
from dataclasses import dataclass, field
from typing import Iterable, Iterator, Sequence


class BudgetExceeded(RuntimeError):
    """Raised when a search visits more nodes than its budget allows."""


class Budget:
    """Deterministic node counter shared by the searches of one operation."""

    __slots__ = ("limit", "used")

    def __init__(self, limit: int = 10**7):
        if limit <= 0:
            raise ValueError("budget must be positive")
        self.limit = limit
        self.used = 0

    def tick(self, n: int = 1) -> None:
        self.used += n
        if self.used > self.limit:
            raise BudgetExceeded(f"search exceeded budget of {self.limit} nodes")

    def __repr__(self):
        return f"Budget(used={self.used}, limit={self.limit})"


def _budget(budget: Budget | None) -> Budget:
    return Budget() if budget is None else budget


@dataclass(frozen=True)
class Violation:
    kind: str
    detail: str
    witness: tuple = ()

    def __str__(self):
        return f"{self.kind}: {self.detail}"

    def to_dict(self) -> dict:
        return {"kind": self.kind, "detail": self.detail, "witness": list(self.witness)}


@dataclass
class ValidityReport:
    subject: str
    violations: list[Violation] = field(default_factory=list)
    notes: list[str] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.violations

    def add(self, kind: str, detail: str, witness: tuple = ()) -> None:
        self.violations.append(Violation(kind, detail, witness))

    def __bool__(self):
        return self.ok

    def to_dict(self) -> dict:
        return {
            "subject": self.subject,
            "ok": self.ok,
            "violations": [v.to_dict() for v in self.violations],
            "notes": list(self.notes),
        }


class FinCategory:
    """A finite category with a total composition table.

    ``comp[g][f]`` is the id of ``g o f`` when ``cod(f) == dom(g)`` and ``-1``
    otherwise.  The constructor checks shapes only; use
    :func:`validate_category` for the category axioms.
    """

    __slots__ = (
        "obj_names", "mor_names", "dom", "cod", "ident", "comp", "_hom",
        "_hash", "_obj_index", "_mor_index", "__weakref__",
    )

    def __init__(
        self,
        obj_names: Sequence[str],
        mor_names: Sequence[str],
        dom: Sequence[int],
        cod: Sequence[int],
        ident: Sequence[int],
        comp: Sequence[Sequence[int]],
    ):
        n, m = len(obj_names), len(mor_names)
        if len(dom) != m or len(cod) != m:
            raise ValueError("dom/cod length mismatch")
        if len(ident) != n:
            raise ValueError("one identity per object required")
        if len(set(obj_names)) != n or len(set(mor_names)) != m:
            raise ValueError("object and morphism names must be unique")
        for x, i in enumerate(ident):
            if not 0 <= i < m or dom[i] != x or cod[i] != x:
                raise ValueError(f"identity of object {obj_names[x]!r} is not an endomorphism of it")
        if len(comp) != m or any(len(row) != m for row in comp):
            raise ValueError("composition table must be m x m")
        for g in range(m):
            for f in range(m):
                gf = comp[g][f]
                if cod[f] == dom[g]:
                    if not 0 <= gf < m:
                        raise ValueError(
                            f"composite {mor_names[g]} o {mor_names[f]} is missing")
                elif gf != -1:
                    raise ValueError(
                        f"non-composable pair {mor_names[g]} o {mor_names[f]} has a value")
        self.obj_names = tuple(obj_names)
        self.mor_names = tuple(mor_names)
        self.dom = tuple(dom)
        self.cod = tuple(cod)
        self.ident = tuple(ident)
        self.comp = tuple(tuple(row) for row in comp)
        hom: dict[tuple[int, int], list[int]] = {
            (x, y): [] for x in range(n) for y in range(n)}
        for f in range(m):
            hom[self.dom[f], self.cod[f]].append(f)
        self._hom = {k: tuple(v) for k, v in hom.items()}
        self._hash = None
        self._obj_index = {s: i for i, s in enumerate(self.obj_names)}
        self._mor_index = {s: i for i, s in enumerate(self.mor_names)}

    def __setattr__(self, key, value):
        if key in FinCategory.__slots__ and hasattr(self, key) and key != "_hash":
            raise AttributeError("FinCategory is immutable")
        object.__setattr__(self, key, value)

    @property
    def n_obj(self) -> int:
        return len(self.obj_names)

    @property
    def n_mor(self) -> int:
        return len(self.mor_names)

    @property
    def objects(self) -> range:
        return range(len(self.obj_names))

    @property
    def morphisms(self) -> range:
        return range(len(self.mor_names))

    def hom(self, x: int, y: int) -> tuple[int, ...]:
        return self._hom[x, y]

    def compose(self, *fs: int) -> int:
        """``compose(h, g, f) == h o g o f``."""
        out = fs[-1]
        for g in reversed(fs[:-1]):
            gf = self.comp[g][out]
            if gf < 0:
                raise ValueError(
                    f"{self.mor_names[g]} and {self.mor_names[out]} are not composable")
            out = gf
        return out

    def is_identity(self, f: int) -> bool:
        return self.ident[self.dom[f]] == f

    def obj(self, name: str) -> int:
        return self._obj_index[name]

    def mor(self, name: str) -> int:
        return self._mor_index[name]

    def describe(self, f: int) -> str:
        return (f"{self.mor_names[f]}: {self.obj_names[self.dom[f]]}"
                f" -> {self.obj_names[self.cod[f]]}")

    def _key(self):
        return (self.obj_names, self.mor_names, self.dom, self.cod, self.ident, self.comp)

    def __eq__(self, other):
        if self is other:
            return True
        if not isinstance(other, FinCategory):
            return NotImplemented
        return self._key() == other._key()

    def __hash__(self):
        if self._hash is None:
            object.__setattr__(self, "_hash", hash(self._key()))
        return self._hash

    def __repr__(self):
        return f"FinCategory({self.n_obj} objects, {self.n_mor} morphisms)"


def category_from_table(
    objects: Sequence[str],
    morphisms: Sequence[tuple[str, str, str]],
    identities: dict[str, str],
    composites: Iterable[tuple[str, str, str]] = (),
    *,
    complete_identities: bool = True,
) -> FinCategory:
    """Build a category from names.

    ``morphisms`` are ``(name, dom, cod)``; ``composites`` are ``(g, f, gf)``.
    With ``complete_identities`` the identity-law entries may be omitted.
    """
    oi = {o: i for i, o in enumerate(objects)}
    mi = {m[0]: i for i, m in enumerate(morphisms)}
    dom = [oi[d] for _, d, _ in morphisms]
    cod = [oi[c] for _, _, c in morphisms]
    ident = [mi[identities[o]] for o in objects]
    n = len(morphisms)
    comp = [[-1] * n for _ in range(n)]
    if complete_identities:
        for f in range(n):
            comp[ident[cod[f]]][f] = f
            comp[f][ident[dom[f]]] = f
    for g, f, gf in composites:
        comp[mi[g]][mi[f]] = mi[gf]
    return FinCategory(objects, [m[0] for m in morphisms], dom, cod, ident, comp)


def validate_category(c: FinCategory) -> ValidityReport:
    """List every identity-law, typing and associativity violation of ``c``."""
    rep = ValidityReport("category")
    for f in c.morphisms:
        if c.comp[c.ident[c.cod[f]]][f] != f:
            rep.add("identity law", f"id o {c.mor_names[f]} != {c.mor_names[f]}", (f,))
        if c.comp[f][c.ident[c.dom[f]]] != f:
            rep.add("identity law", f"{c.mor_names[f]} o id != {c.mor_names[f]}", (f,))
    for g in c.morphisms:
        for f in c.morphisms:
            gf = c.comp[g][f]
            if gf >= 0 and (c.dom[gf] != c.dom[f] or c.cod[gf] != c.cod[g]):
                rep.add("typing", f"{c.mor_names[g]} o {c.mor_names[f]} = "
                        f"{c.mor_names[gf]} has the wrong ends", (g, f))
    if any(v.kind == "typing" for v in rep.violations):
        # associativity is meaningless on an ill-typed table
        return rep
    for f in c.morphisms:
        for g in _out(c, c.cod[f]):
            gf = c.comp[g][f]
            for h in _out(c, c.cod[g]):
                if c.comp[h][gf] != c.comp[c.comp[h][g]][f]:
                    rep.add(
                        "associativity",
                        f"{c.mor_names[h]} o ({c.mor_names[g]} o {c.mor_names[f]})"
                        f" != ({c.mor_names[h]} o {c.mor_names[g]}) o {c.mor_names[f]}",
                        (h, g, f))
    return rep


def _out(c: FinCategory, x: int) -> Iterator[int]:
    for y in c.objects:
        yield from c.hom(x, y)


def _in(c: FinCategory, y: int) -> Iterator[int]:
    for x in c.objects:
        yield from c.hom(x, y)


def is_isomorphism(c: FinCategory, m: int) -> int | None:
    """Return the inverse of ``m`` if it is an isomorphism, else ``None``."""
    idd, idc = c.ident[c.dom[m]], c.ident[c.cod[m]]
    for n in c.hom(c.cod[m], c.dom[m]):
        if c.comp[n][m] == idd and c.comp[m][n] == idc:
            return n
    return None


def isomorphisms(c: FinCategory) -> frozenset[int]:
    return frozenset(m for m in c.morphisms if is_isomorphism(c, m) is not None)


def inverse(c: FinCategory, m: int) -> int:
    n = is_isomorphism(c, m)
    if n is None:
        raise ValueError(f"{c.describe(m)} is not invertible")
    return n


# ---------------------------------------------------------------- functors


@dataclass(frozen=True, eq=True)
class Functor:
    source: FinCategory
    target: FinCategory
    obj_map: tuple[int, ...]
    mor_map: tuple[int, ...]

    def __call__(self, x: int) -> int:
        raise TypeError("use F.ob(x) or F.ar(f)")

    def ob(self, x: int) -> int:
        return self.obj_map[x]

    def ar(self, f: int) -> int:
        return self.mor_map[f]

    def describe(self) -> dict:
        s, t = self.source, self.target
        return {
            "obj_map": {s.obj_names[x]: t.obj_names[y] for x, y in enumerate(self.obj_map)},
            "mor_map": {s.mor_names[f]: t.mor_names[g] for f, g in enumerate(self.mor_map)},
        }


def identity_functor(c: FinCategory) -> Functor:
    return Functor(c, c, tuple(c.objects), tuple(c.morphisms))


def compose_functors(g: Functor, f: Functor) -> Functor:
    """``g o f``."""
    if f.target != g.source:
        raise ValueError("functors are not composable")
    return Functor(
        f.source, g.target,
        tuple(g.obj_map[y] for y in f.obj_map),
        tuple(g.mor_map[m] for m in f.mor_map))


def constant_functor(c: FinCategory, d: FinCategory, y: int) -> Functor:
    return Functor(c, d, (y,) * c.n_obj, (d.ident[y],) * c.n_mor)


def validate_functor(F: Functor) -> ValidityReport:
    c, d = F.source, F.target
    rep = ValidityReport("functor")
    if len(F.obj_map) != c.n_obj or len(F.mor_map) != c.n_mor:
        rep.add("shape", "object/morphism map has wrong length")
        return rep
    for f in c.morphisms:
        g = F.mor_map[f]
        if d.dom[g] != F.obj_map[c.dom[f]] or d.cod[g] != F.obj_map[c.cod[f]]:
            rep.add("dom/cod", f"F({c.mor_names[f]}) has wrong endpoints", (f,))
    if rep.violations:
        return rep
    for x in c.objects:
        if F.mor_map[c.ident[x]] != d.ident[F.obj_map[x]]:
            rep.add("identity", f"F(id_{c.obj_names[x]}) is not an identity", (x,))
    for g in c.morphisms:
        for f in c.morphisms:
            gf = c.comp[g][f]
            if gf >= 0 and F.mor_map[gf] != d.comp[F.mor_map[g]][F.mor_map[f]]:
                rep.add("composition",
                        f"F({c.mor_names[g]} o {c.mor_names[f]}) != F(g) o F(f)", (g, f))
    return rep


class _TripleIndex:
    """Composition triples of a category grouped by the largest position.

    Used to check a partial morphism assignment as soon as all three members
    of a triple ``(g, f, g o f)`` are assigned.
    """

    def __init__(self, c: FinCategory, order: Sequence[int]):
        pos = {m: i for i, m in enumerate(order)}
        self.at: list[list[tuple[int, int, int]]] = [[] for _ in order]
        for g in c.morphisms:
            for f in c.morphisms:
                gf = c.comp[g][f]
                if gf >= 0:
                    k = max(pos[g], pos[f], pos[gf])
                    self.at[k].append((g, f, gf))


_TRIPLES: weakref.WeakKeyDictionary = weakref.WeakKeyDictionary()


def _triples(c: FinCategory) -> _TripleIndex:
    idx = _TRIPLES.get(c)
    if idx is None:
        idx = _TRIPLES[c] = _TripleIndex(c, list(c.morphisms))
    return idx


def enumerate_functors(
    c: FinCategory,
    d: FinCategory,
    budget: Budget | None = None,
    *,
    obj_map: Sequence[int | None] | None = None,
    mor_fixed: dict[int, int] | None = None,
) -> Iterator[Functor]:
    """Every functor ``c -> d`` exactly once, lexicographic on (obj_map, mor_map).

    ``obj_map`` may pin some object images (``None`` leaves one free) and
    ``mor_fixed`` pins morphism images; pinned values only prune the search.
    """
    budget = _budget(budget)
    n, m = c.n_obj, c.n_mor
    pinned_obj = list(obj_map) if obj_map is not None else [None] * n
    mor_fixed = mor_fixed or {}
    # morphisms whose endpoints are both among objects[0..k]
    ready: list[list[int]] = [[] for _ in range(n)]
    for f in c.morphisms:
        ready[max(c.dom[f], c.cod[f])].append(f)
    triples = _triples(c).at
    om = [0] * n
    mm = [0] * m

    def assign_objects(k: int) -> Iterator[Functor]:
        if k == n:
            yield from assign_morphisms(0)
            return
        choices = d.objects if pinned_obj[k] is None else (pinned_obj[k],)
        for y in choices:
            budget.tick()
            om[k] = y
            if all(_hom_ok(f) for f in ready[k]):
                yield from assign_objects(k + 1)

    def _hom_ok(f: int) -> bool:
        h = d.hom(om[c.dom[f]], om[c.cod[f]])
        if f in mor_fixed:
            return mor_fixed[f] in h
        return bool(h)

    def assign_morphisms(k: int) -> Iterator[Functor]:
        if k == m:
            yield Functor(c, d, tuple(om), tuple(mm))
            return
        x, y = c.dom[k], c.cod[k]
        if c.ident[x] == k:
            cands: Sequence[int] = (d.ident[om[x]],)
        elif k in mor_fixed:
            cands = (mor_fixed[k],)
        else:
            cands = d.hom(om[x], om[y])
        comp = d.comp
        for v in cands:
            budget.tick()
            mm[k] = v
            for g, f, gf in triples[k]:
                if comp[mm[g]][mm[f]] != mm[gf]:
                    break
            else:
                yield from assign_morphisms(k + 1)

    yield from assign_objects(0)


def all_functors(c: FinCategory, d: FinCategory, budget: Budget | None = None) -> list[Functor]:
    return list(enumerate_functors(c, d, budget))


# ------------------------------------------------- natural transformations


@dataclass(frozen=True)
class NatTransformation:
    source: Functor
    target: Functor
    components: tuple[int, ...]

    def __getitem__(self, x: int) -> int:
        return self.components[x]

    def describe(self) -> dict:
        c, d = self.source.source, self.source.target
        return {c.obj_names[x]: d.mor_names[m] for x, m in enumerate(self.components)}


def _parallel(F: Functor, G: Functor) -> None:
    if F.source != G.source or F.target != G.target:
        raise ValueError("functors are not parallel")


def identity_nat(F: Functor) -> NatTransformation:
    d = F.target
    return NatTransformation(F, F, tuple(d.ident[y] for y in F.obj_map))


def is_natural(F: Functor, G: Functor, components: Sequence[int]) -> bool:
    c, d = F.source, F.target
    for x in c.objects:
        t = components[x]
        if d.dom[t] != F.obj_map[x] or d.cod[t] != G.obj_map[x]:
            return False
    for f in c.morphisms:
        x, y = c.dom[f], c.cod[f]
        if d.comp[G.mor_map[f]][components[x]] != d.comp[components[y]][F.mor_map[f]]:
            return False
    return True


def validate_nat(eta: NatTransformation) -> ValidityReport:
    rep = ValidityReport("natural transformation")
    F, G = eta.source, eta.target
    c, d = F.source, F.target
    for x in c.objects:
        t = eta.components[x]
        if d.dom[t] != F.obj_map[x] or d.cod[t] != G.obj_map[x]:
            rep.add("component", f"component at {c.obj_names[x]} has wrong endpoints", (x,))
    if rep.violations:
        return rep
    for f in c.morphisms:
        x, y = c.dom[f], c.cod[f]
        if d.comp[G.mor_map[f]][eta.components[x]] != d.comp[eta.components[y]][F.mor_map[f]]:
            rep.add("naturality", f"square at {c.mor_names[f]} does not commute", (f,))
    return rep


def enumerate_nat_transformations(
    F: Functor,
    G: Functor,
    budget: Budget | None = None,
    *,
    isos_only: bool = False,
    fixed: dict[int, int] | None = None,
) -> Iterator[NatTransformation]:
    """All natural transformations ``F => G`` in lexicographic order of components."""
    _parallel(F, G)
    budget = _budget(budget)
    c, d = F.source, F.target
    n = c.n_obj
    fixed = fixed or {}
    ready: list[list[int]] = [[] for _ in range(n)]
    for f in c.morphisms:
        if not c.is_identity(f):
            ready[max(c.dom[f], c.cod[f])].append(f)
    isos = _iso_set(d) if isos_only else None
    comps = [0] * n
    comp = d.comp
    Fm, Gm = F.mor_map, G.mor_map

    def go(k: int) -> Iterator[NatTransformation]:
        if k == n:
            yield NatTransformation(F, G, tuple(comps))
            return
        hom = d.hom(F.obj_map[k], G.obj_map[k])
        if k in fixed:
            cands: Iterable[int] = (fixed[k],) if fixed[k] in hom else ()
        else:
            cands = hom
        for t in cands:
            budget.tick()
            if isos is not None and t not in isos:
                continue
            comps[k] = t
            for f in ready[k]:
                if comp[Gm[f]][comps[c.dom[f]]] != comp[comps[c.cod[f]]][Fm[f]]:
                    break
            else:
                yield from go(k + 1)

    yield from go(0)


_ISOS: weakref.WeakKeyDictionary = weakref.WeakKeyDictionary()


def _iso_set(d: FinCategory) -> frozenset[int]:
    s = _ISOS.get(d)
    if s is None:
        s = _ISOS[d] = isomorphisms(d)
    return s


def natural_isomorphisms(F: Functor, G: Functor, budget: Budget | None = None,
                         fixed: dict[int, int] | None = None) -> Iterator[NatTransformation]:
    return enumerate_nat_transformations(F, G, budget, isos_only=True, fixed=fixed)


def vertical(theta: NatTransformation, eta: NatTransformation) -> NatTransformation:
    """``theta o eta`` for ``eta: F => G`` and ``theta: G => H``."""
    if eta.target != theta.source:
        raise ValueError("transformations are not composable")
    d = eta.source.target
    return NatTransformation(
        eta.source, theta.target,
        tuple(d.comp[t][e] for t, e in zip(theta.components, eta.components)))


def inverse_nat(eta: NatTransformation) -> NatTransformation:
    d = eta.source.target
    return NatTransformation(eta.target, eta.source,
                             tuple(inverse(d, t) for t in eta.components))


def whisker_right(eta: NatTransformation, K: Functor) -> NatTransformation:
    """``eta * K``: precompose with ``K``; components ``eta_{K b}``."""
    return NatTransformation(
        compose_functors(eta.source, K), compose_functors(eta.target, K),
        tuple(eta.components[y] for y in K.obj_map))


def whisker_left(H: Functor, eta: NatTransformation) -> NatTransformation:
    """``H * eta``: postcompose with ``H``; components ``H(eta_x)``."""
    return NatTransformation(
        compose_functors(H, eta.source), compose_functors(H, eta.target),
        tuple(H.mor_map[t] for t in eta.components))


def is_nat_iso(eta: NatTransformation) -> bool:
    isos = _iso_set(eta.source.target)
    return all(t in isos for t in eta.components)


# ------------------------------------------------------------ constructions


def opposite(c: FinCategory) -> FinCategory:
    """Same ids, dom/cod swapped, composition transposed."""
    m = c.n_mor
    comp = [[c.comp[f][g] for f in range(m)] for g in range(m)]
    return FinCategory(c.obj_names, c.mor_names, c.cod, c.dom, c.ident, comp)


def opposite_functor(F: Functor) -> Functor:
    return Functor(opposite(F.source), opposite(F.target), F.obj_map, F.mor_map)


def full_subcategory(c: FinCategory, objs: Iterable[int]) -> tuple[FinCategory, Functor]:
    """Full subcategory on ``objs`` and its inclusion functor."""
    objs = sorted(set(objs))
    opos = {x: i for i, x in enumerate(objs)}
    mors = [f for f in c.morphisms if c.dom[f] in opos and c.cod[f] in opos]
    mpos = {f: i for i, f in enumerate(mors)}
    comp = [[-1] * len(mors) for _ in mors]
    for g in mors:
        for f in mors:
            gf = c.comp[g][f]
            if gf >= 0:
                comp[mpos[g]][mpos[f]] = mpos[gf]
    sub = FinCategory(
        [c.obj_names[x] for x in objs], [c.mor_names[f] for f in mors],
        [opos[c.dom[f]] for f in mors], [opos[c.cod[f]] for f in mors],
        [mpos[c.ident[x]] for x in objs], comp)
    return sub, Functor(sub, c, tuple(objs), tuple(mors))


def initial_objects(c: FinCategory) -> tuple[int, ...]:
    return tuple(x for x in c.objects if all(len(c.hom(x, y)) == 1 for y in c.objects))


def terminal_objects(c: FinCategory) -> tuple[int, ...]:
    return tuple(y for y in c.objects if all(len(c.hom(x, y)) == 1 for x in c.objects))


def find_initial(c: FinCategory) -> int | None:
    """Least initial object; the others are uniquely isomorphic to it."""
    found = initial_objects(c)
    return found[0] if found else None


def find_terminal(c: FinCategory) -> int | None:
    found = terminal_objects(c)
    return found[0] if found else None


def canonical_isos(c: FinCategory, objs: Sequence[int]) -> dict[tuple[int, int], int]:
    """The unique morphisms between objects of a class of initial (or terminal) objects."""
    return {(x, y): c.hom(x, y)[0] for x in objs for y in objs}


def unique_arrow(c: FinCategory, x: int, y: int) -> int:
    h = c.hom(x, y)
    if len(h) != 1:
        raise ValueError(f"expected exactly one arrow {c.obj_names[x]} -> {c.obj_names[y]}")
    return h[0]


@dataclass(frozen=True)
class Coproduct:
    obj: int
    inj1: int
    inj2: int


def mediator(c: FinCategory, cp: Coproduct, g1: int, g2: int) -> int | None:
    """The morphism ``m`` with ``m o inj1 = g1`` and ``m o inj2 = g2``, if unique."""
    hits = [m for m in c.hom(cp.obj, c.cod[g1])
            if c.comp[m][cp.inj1] == g1 and c.comp[m][cp.inj2] == g2]
    return hits[0] if len(hits) == 1 else None


def _is_coproduct(c: FinCategory, x: int, y: int, z: int, p1: int, p2: int) -> bool:
    for w in c.objects:
        for g1 in c.hom(x, w):
            for g2 in c.hom(y, w):
                n = 0
                for m in c.hom(z, w):
                    if c.comp[m][p1] == g1 and c.comp[m][p2] == g2:
                        n += 1
                        if n > 1:
                            return False
                if n != 1:
                    return False
    return True


def find_coproduct(c: FinCategory, x: int, y: int) -> Coproduct | None:
    """Least ``(Z, inj1, inj2)`` satisfying the coproduct universal property."""
    for z in c.objects:
        for p1 in c.hom(x, z):
            for p2 in c.hom(y, z):
                if _is_coproduct(c, x, y, z, p1, p2):
                    return Coproduct(z, p1, p2)
    return None


def find_product(c: FinCategory, x: int, y: int) -> Coproduct | None:
    """Product via the opposite category; ``inj1``/``inj2`` are the projections."""
    return find_coproduct(opposite(c), x, y)


def fold_map(c: FinCategory, x: int, cp: Coproduct) -> int:
    m = mediator(c, cp, c.ident[x], c.ident[x])
    assert m is not None
    return m


def is_equivalence_data(F: Functor, G: Functor, unit: NatTransformation,
                        counit: NatTransformation) -> bool:
    """``unit: id => G o F`` and ``counit: F o G => id`` natural isomorphisms."""
    return (unit.source == identity_functor(F.source)
            and unit.target == compose_functors(G, F)
            and counit.source == compose_functors(F, G)
            and counit.target == identity_functor(F.target)
            and validate_nat(unit).ok and validate_nat(counit).ok
            and is_nat_iso(unit) and is_nat_iso(counit))
