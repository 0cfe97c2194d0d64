"""Faint, weak, strong and strict localizations of finite categories.

The universal properties quantify over every category ``D``; here they are
checked against a named battery of finite test categories, and every verdict
records the battery it was obtained on.
"""
from __future__ import annotations

import hashlib
import json
from dataclasses import dataclass, field
from typing import Iterable, Sequence

from . import corpus
from .fincat import (
    Budget, FinCategory, Functor, NatTransformation, _budget, compose_functors,
    enumerate_functors, enumerate_nat_transformations, identity_functor,
    identity_nat, inverse, is_isomorphism, natural_isomorphisms, validate_category,
    validate_functor, vertical, whisker_left, whisker_right,
)
from .rewriting import (
    FWD, INV, NonConfluent, RewriteSystem, check_confluence, irreducible_words,
    letter_ends, word_name,
)


class NotLocalization(ValueError):
    pass


class MalformedZigzag(ValueError):
    pass


# ------------------------------------------------------------------ zigzags


@dataclass(frozen=True)
class Zigzag:
    """A composable word of forward morphisms and reversed weak equivalences.

    ``steps`` are ``(FWD, m)`` or ``(INV, w)`` in path order; ``INV`` steps go
    from ``cod w`` to ``dom w``.
    """

    start: int
    end: int
    steps: tuple = ()


def check_zigzag(c: FinCategory, W: frozenset, z: Zigzag) -> None:
    x = z.start
    for kind, m in z.steps:
        if kind not in (FWD, INV) or not 0 <= m < c.n_mor:
            raise MalformedZigzag(f"bad step {(kind, m)}")
        if kind == INV and m not in W:
            raise MalformedZigzag(f"{c.mor_names[m]} is reversed but not a weak equivalence")
        a, b = letter_ends(c, (kind, m))
        if a != x:
            raise MalformedZigzag("steps are not composable")
        x = b
    if x != z.end:
        raise MalformedZigzag("zigzag does not end where declared")


def evaluate_zigzag(L: Functor, W: frozenset, z: Zigzag) -> int:
    """Value of a zigzag under a functor ``L`` inverting ``W``."""
    c, d = L.source, L.target
    check_zigzag(c, W, z)
    out = d.ident[L.ob(z.start)]
    for kind, m in z.steps:
        step = L.ar(m) if kind == FWD else inverse(d, L.ar(m))
        out = d.comp[step][out]
    return out


# -------------------------------------------------------------- witnesses


@dataclass(frozen=True)
class Verdict:
    status: str                       # "verified" | "refuted" | "unknown"
    battery: str | None = None
    counterexample: dict | None = None

    @property
    def verified(self) -> bool:
        return self.status == "verified"

    def to_dict(self) -> dict:
        out = {"status": self.status}
        if self.battery is not None:
            out["battery"] = self.battery
        if self.counterexample is not None:
            out["counterexample"] = self.counterexample
        return out


UNKNOWN = Verdict("unknown")
FLAGS = ("faint", "weak", "strong", "strict")


@dataclass
class LocalizationWitness:
    """A candidate localization ``L: base -> loc`` of ``base`` at ``W``."""

    base: FinCategory
    W: frozenset
    loc: FinCategory
    L: Functor
    name: str = "witness"
    flags: dict = field(default_factory=lambda: {k: UNKNOWN for k in FLAGS})
    evidence: dict = field(default_factory=dict)

    def __post_init__(self):
        if self.L.source != self.base or self.L.target != self.loc:
            raise ValueError("L must go from base to loc")
        rep = validate_functor(self.L)
        if not rep.ok:
            raise ValueError(f"L is not a functor: {rep.violations[0]}")
        ok, bad = sends_W_to_isos(self.L, self.W)
        if not ok:
            raise NotLocalization(
                f"L does not invert {self.base.describe(bad)}")

    def report(self) -> dict:
        return {
            "name": self.name,
            "flags": {k: v.to_dict() for k, v in self.flags.items()},
            "evidence": self.evidence,
        }


def identity_witness(c: FinCategory, name: str = "identity") -> LocalizationWitness:
    """``c`` localized at its identities."""
    return LocalizationWitness(c, frozenset(c.ident), c, identity_functor(c), name)


def sends_W_to_isos(F: Functor, W: Iterable[int]) -> tuple[bool, int | None]:
    for w in sorted(W):
        if is_isomorphism(F.target, F.ar(w)) is None:
            return False, w
    return True, None


# ---------------------------------------------------------------- battery


@dataclass(frozen=True)
class Battery:
    id: str
    members: tuple        # ((name, FinCategory), ...)


def _fingerprint(c: FinCategory) -> list:
    return [list(c.obj_names), list(c.mor_names), list(c.dom), list(c.cod),
            list(c.ident), [list(r) for r in c.comp]]


def make_battery(members: Sequence[tuple[str, FinCategory]], label: str = "battery") -> Battery:
    blob = json.dumps([[n, _fingerprint(c)] for n, c in members], sort_keys=True)
    digest = hashlib.sha256(blob.encode()).hexdigest()[:10]
    return Battery(f"{label}-{digest}", tuple(members))


def default_battery(wit: LocalizationWitness | None = None,
                    names: Sequence[str] = corpus.DEFAULT_BATTERY) -> Battery:
    """The shipped small categories, plus ``loc`` and ``base`` of ``wit``."""
    members = [(n, corpus.CATEGORIES[n]()) for n in names]
    if wit is not None:
        members += [("loc", wit.loc), ("base", wit.base)]
    return make_battery(members, "default")


# ---------------------------------------------------------------- checkers


@dataclass
class CheckResult:
    condition: str
    target: str
    ok: bool
    counts: dict = field(default_factory=dict)
    counterexample: dict | None = None

    def to_dict(self) -> dict:
        out = {"condition": self.condition, "target": self.target, "ok": self.ok,
               "counts": self.counts}
        if self.counterexample is not None:
            out["counterexample"] = self.counterexample
        return out


class _Context:
    """Enumerations shared by the checks of one witness against one ``d``."""

    def __init__(self, wit: LocalizationWitness, d: FinCategory, budget: Budget | None):
        self.wit, self.d = wit, d
        self.budget = _budget(budget)
        self._inverting = None
        self._loc = None

    @property
    def inverting(self) -> list[Functor]:
        """``[base, d]_W``."""
        if self._inverting is None:
            self._inverting = [
                F for F in enumerate_functors(self.wit.base, self.d, self.budget)
                if sends_W_to_isos(F, self.wit.W)[0]]
        return self._inverting

    @property
    def loc_functors(self) -> list[tuple[Functor, Functor]]:
        """Pairs ``(G, G o L)`` for every functor ``G: loc -> d``."""
        if self._loc is None:
            self._loc = [(G, compose_functors(G, self.wit.L))
                         for G in enumerate_functors(self.wit.loc, self.d, self.budget)]
        return self._loc


def _ctx(wit, d, budget, ctx):
    return ctx if ctx is not None else _Context(wit, d, budget)


def faint_factorizations(wit: LocalizationWitness, F: Functor, budget: Budget | None = None,
                         ctx: _Context | None = None, first_only: bool = False):
    """Pairs ``(G, eta)`` with ``eta: F => G o L`` a natural isomorphism."""
    ctx = _ctx(wit, F.target, budget, ctx)
    out = []
    for G, GL in ctx.loc_functors:
        for eta in natural_isomorphisms(F, GL, ctx.budget):
            out.append((G, eta))
            if first_only:
                return out
    return out


def strict_factorizations(wit: LocalizationWitness, F: Functor,
                          budget: Budget | None = None, limit: int | None = None) -> list[Functor]:
    """Every ``G: loc -> d`` with ``G o L = F`` exactly."""
    budget = _budget(budget)
    L = wit.L
    pins: list = [None] * wit.loc.n_obj
    for x in wit.base.objects:
        y = L.ob(x)
        if pins[y] is not None and pins[y] != F.ob(x):
            return []
        pins[y] = F.ob(x)
    fixed: dict[int, int] = {}
    for m in wit.base.morphisms:
        k = L.ar(m)
        if fixed.get(k, F.ar(m)) != F.ar(m):
            return []
        fixed[k] = F.ar(m)
    out = []
    for G in enumerate_functors(wit.loc, F.target, budget, obj_map=pins, mor_fixed=fixed):
        out.append(G)
        if limit is not None and len(out) >= limit:
            break
    return out


def check_L1_faint(wit: LocalizationWitness, d: FinCategory, budget: Budget | None = None,
                   name: str = "d", ctx: _Context | None = None) -> CheckResult:
    """Every ``F`` in ``[base, d]_W`` is isomorphic to some ``G o L``."""
    ctx = _ctx(wit, d, budget, ctx)
    n = 0
    for F in ctx.inverting:
        n += 1
        if not faint_factorizations(wit, F, ctx=ctx, first_only=True):
            return CheckResult("L1", name, False, {"functors": n},
                               {"F": F.describe(), "reason": "no factorization up to iso"})
    return CheckResult("L1", name, True, {"functors": n})


def _comparison_isos(wit, G1, eta1, G2, eta2, budget, limit=2):
    """Natural isos ``eps: G1 => G2`` with ``(eps * L) o eta1 = eta2``."""
    d = G1.target
    L = wit.L
    fixed: dict[int, int] = {}
    for x in wit.base.objects:
        t = d.comp[eta2[x]][inverse(d, eta1[x])]
        y = L.ob(x)
        if fixed.get(y, t) != t:
            return []
        fixed[y] = t
    out = []
    for eps in natural_isomorphisms(G1, G2, budget, fixed=fixed):
        if vertical(whisker_right(eps, L), eta1).components == eta2.components:
            out.append(eps)
            if len(out) >= limit:
                break
    return out


def check_L2_faint(wit: LocalizationWitness, d: FinCategory, budget: Budget | None = None,
                   name: str = "d", ctx: _Context | None = None) -> CheckResult:
    """Any two factorizations of an ``F`` are related by exactly one comparison iso.

    Each factorization is compared with the first one found; comparisons
    between two arbitrary ones are then composites of these.
    """
    ctx = _ctx(wit, d, budget, ctx)
    nF = nfac = 0
    for F in ctx.inverting:
        nF += 1
        facts = faint_factorizations(wit, F, ctx=ctx)
        nfac += len(facts)
        if not facts:
            continue
        G0, e0 = facts[0]
        for G, e in facts:
            eps = _comparison_isos(wit, G0, e0, G, e, ctx.budget)
            if len(eps) != 1:
                return CheckResult(
                    "L2", name, False, {"functors": nF, "factorizations": nfac},
                    {"F": F.describe(), "G": G.describe(),
                     "reason": "no comparison iso" if not eps else "comparison iso not unique"})
    return CheckResult("L2", name, True, {"functors": nF, "factorizations": nfac})


def check_L2prime(wit: LocalizationWitness, d: FinCategory, budget: Budget | None = None,
                  name: str = "d", ctx: _Context | None = None) -> CheckResult:
    """``zeta -> zeta * L`` is a bijection ``Hom(F, G) -> Hom(F o L, G o L)``."""
    ctx = _ctx(wit, d, budget, ctx)
    L = wit.L
    counts_cache: dict = {}
    pairs = 0
    for F, FL in ctx.loc_functors:
        for G, GL in ctx.loc_functors:
            pairs += 1
            images = set()
            for zeta in enumerate_nat_transformations(F, G, ctx.budget):
                im = tuple(zeta.components[y] for y in L.obj_map)
                if im in images:
                    return CheckResult("L2'", name, False, {"pairs": pairs},
                                       {"F": F.describe(), "G": G.describe(),
                                        "reason": "whiskering is not injective"})
                images.add(im)
            key = (FL.obj_map, FL.mor_map, GL.obj_map, GL.mor_map)
            if key not in counts_cache:
                counts_cache[key] = sum(
                    1 for _ in enumerate_nat_transformations(FL, GL, ctx.budget))
            if counts_cache[key] != len(images):
                return CheckResult("L2'", name, False, {"pairs": pairs},
                                   {"F": F.describe(), "G": G.describe(),
                                    "reason": "whiskering is not surjective",
                                    "sizes": [len(images), counts_cache[key]]})
    return CheckResult("L2'", name, True, {"pairs": pairs})


def check_L1prime_strong(wit: LocalizationWitness, d: FinCategory, budget: Budget | None = None,
                         name: str = "d", ctx: _Context | None = None) -> CheckResult:
    """Every ``F`` in ``[base, d]_W`` is ``G o L`` for exactly one ``G``."""
    ctx = _ctx(wit, d, budget, ctx)
    n = 0
    for F in ctx.inverting:
        n += 1
        found = strict_factorizations(wit, F, ctx.budget, limit=2)
        if len(found) != 1:
            return CheckResult("L1'", name, False, {"functors": n},
                               {"F": F.describe(),
                                "reason": "no strict factorization" if not found
                                else "strict factorization not unique"})
    return CheckResult("L1'", name, True, {"functors": n})


def classify(wit: LocalizationWitness, battery: Battery | None = None,
             budget: Budget | None = None) -> LocalizationWitness:
    """Fill the four flags from the checks over every battery member."""
    budget = _budget(budget)
    battery = battery or default_battery(wit)
    results = {k: [] for k in ("L1", "L2", "L2'", "L1'")}
    for name, d in battery.members:
        ctx = _Context(wit, d, budget)
        results["L1"].append(check_L1_faint(wit, d, name=name, ctx=ctx))
        results["L2"].append(check_L2_faint(wit, d, name=name, ctx=ctx))
        results["L2'"].append(check_L2prime(wit, d, name=name, ctx=ctx))
        results["L1'"].append(check_L1prime_strong(wit, d, name=name, ctx=ctx))

    def verdict(conds):
        for name, _ in battery.members:
            for cond in conds:
                r = next(r for r in results[cond] if r.target == name)
                if not r.ok:
                    return Verdict("refuted", battery.id,
                                   {"condition": cond, "target": name, **r.counterexample})
        return Verdict("verified", battery.id)

    wit.flags = {
        "faint": verdict(("L1", "L2")),
        "weak": verdict(("L1", "L2'")),
        "strong": verdict(("L1'",)),
        "strict": verdict(("L1'", "L2'")),
    }
    wit.evidence = {
        "battery": battery.id,
        "members": [n for n, _ in battery.members],
        "checks": {k: [r.to_dict() for r in v] for k, v in results.items()},
        "implication_violations": implication_violations(wit),
    }
    return wit


def implication_violations(wit: LocalizationWitness) -> list[str]:
    """strict implies strong and weak; weak implies faint."""
    f = {k: v.verified for k, v in wit.flags.items()}
    bad = []
    if f["strict"] and not f["strong"]:
        bad.append("strict but not strong")
    if f["strict"] and not f["weak"]:
        bad.append("strict but not weak")
    if f["weak"] and not f["faint"]:
        bad.append("weak but not faint")
    return bad


def precomposition_profile(wit: LocalizationWitness, d: FinCategory,
                           budget: Budget | None = None) -> dict:
    """How ``- o L: Fun(loc, d) -> [base, d]_W`` behaves on objects.

    Reports whether it lands in ``[base, d]_W``, whether it is bijective on
    objects, and whether it is essentially surjective (with one preimage up to
    iso for every functor).
    """
    ctx = _Context(wit, d, budget)
    inv = ctx.inverting
    keys = {(F.obj_map, F.mor_map) for F in inv}
    images = [(GL.obj_map, GL.mor_map) for _, GL in ctx.loc_functors]
    lands = all(k in keys for k in images)
    bijective = lands and len(set(images)) == len(images) == len(keys)
    ess = all(faint_factorizations(wit, F, ctx=ctx, first_only=True) for F in inv)
    return {"lands_in_W_inverting": lands, "bijective_on_objects": bijective,
            "essentially_surjective": ess, "functors": len(inv),
            "loc_functors": len(images)}


# ------------------------------------------------- localization by rewriting


def localize_by_rewriting(c: FinCategory, W: Iterable[int],
                          budget: Budget | None = None) -> tuple[FinCategory, Functor]:
    """The localization of ``c`` at ``W`` with zigzag words as morphisms.

    Raises ``BudgetExceeded`` when completion or enumeration does not
    stabilize within budget and ``NonConfluent`` when normal forms are not
    invariant under the identifications.
    """
    budget = _budget(budget)
    rep = validate_category(c)
    if not rep.ok:
        raise ValueError(f"invalid category: {rep.violations[0]}")
    W = frozenset(W)
    rs = RewriteSystem(c, W)
    rs.complete(budget)
    q = irreducible_words(rs, budget)
    bad = check_confluence(rs, q.stabilized_at, budget)
    if bad is not None:
        raise NonConfluent(f"word {bad[2]} has ambiguous normal forms")
    words = sorted(q.words, key=lambda t: (len(t[2]), t[2], t[0], t[1]))
    index = {(s, t, w): k for k, (s, t, w) in enumerate(words)}
    names = [c.mor_names[c.ident[s]] if not w else word_name(c, w) for s, t, w in words]
    n = len(words)
    comp = [[-1] * n for _ in range(n)]
    for kg, (sg, tg, wg) in enumerate(words):
        for kf, (sf, tf, wf) in enumerate(words):
            if tf == sg:
                budget.tick()
                comp[kg][kf] = index[sf, tg, rs.normal_form(wf + wg, budget)]
    ident = [index[x, x, ()] for x in c.objects]
    loc = FinCategory(c.obj_names, names, [s for s, _, _ in words], [t for _, t, _ in words],
                      ident, comp)
    L = Functor(c, loc, tuple(c.objects),
                tuple(index[c.dom[m], c.cod[m], rs.normal_form(rs.embed(m), budget)]
                      for m in c.morphisms))
    return loc, L


def rewriting_witness(c: FinCategory, W: Iterable[int], budget: Budget | None = None,
                      name: str = "rewriting") -> LocalizationWitness:
    loc, L = localize_by_rewriting(c, W, budget)
    return LocalizationWitness(c, frozenset(W), loc, L, name)


# ------------------------------------------------------------- comparison


@dataclass
class Comparison:
    """Functors between two localizations and the isos relating them.

    ``eta1: L1 => Lt o L2`` and ``eta2: L2 => Ltp o L1``; ``eps1: Lt o Ltp => id``
    and ``eps2: Ltp o Lt => id`` are the unique comparison isos.
    """

    Ltp: Functor
    Lt: Functor
    eta1: NatTransformation
    eta2: NatTransformation
    eps1: NatTransformation
    eps2: NatTransformation
    isomorphism: bool
    checks: dict

    @property
    def ok(self) -> bool:
        return all(self.checks.values())


def compare_localizations(w1: LocalizationWitness, w2: LocalizationWitness,
                          budget: Budget | None = None) -> Comparison:
    """Construct the comparison functors between two localizations of one ``(base, W)``."""
    budget = _budget(budget)
    if w1.base != w2.base or w1.W != w2.W:
        raise ValueError("witnesses localize different data")
    for w in (w1, w2):
        if not w.flags["faint"].verified:
            raise NotLocalization(f"{w.name} is not faint-verified")
    strong = w1.flags["strong"].verified and w2.flags["strong"].verified

    def factor(wa, F):
        if strong:
            found = strict_factorizations(wa, F, budget, limit=1)
            if found:
                return found[0], identity_nat(F)
        facts = faint_factorizations(wa, F, budget, first_only=True)
        if not facts:
            raise NotLocalization(f"{wa.name} does not factor {F}")
        return facts[0]

    Ltp, eta2 = factor(w1, w2.L)        # eta2: L2 => Ltp o L1
    Lt, eta1 = factor(w2, w1.L)         # eta1: L1 => Lt o L2
    # theta1: L1 => Lt o L2 => Lt o Ltp o L1
    theta1 = vertical(whisker_left(Lt, eta2), eta1)
    theta2 = vertical(whisker_left(Ltp, eta1), eta2)
    e1 = _comparison_isos(w1, compose_functors(Lt, Ltp), theta1,
                          identity_functor(w1.loc), identity_nat(w1.L), budget)
    e2 = _comparison_isos(w2, compose_functors(Ltp, Lt), theta2,
                          identity_functor(w2.loc), identity_nat(w2.L), budget)
    checks = {"eps1_unique": len(e1) == 1, "eps2_unique": len(e2) == 1}
    if not (e1 and e2):
        raise NotLocalization("comparison isos do not exist")
    eps1, eps2 = e1[0], e2[0]
    checks["whisker1"] = vertical(whisker_right(eps1, w1.L), theta1).components == \
        identity_nat(w1.L).components
    checks["whisker2"] = vertical(whisker_right(eps2, w2.L), theta2).components == \
        identity_nat(w2.L).components
    iso = (compose_functors(Lt, Ltp) == identity_functor(w1.loc)
           and compose_functors(Ltp, Lt) == identity_functor(w2.loc))
    if strong:
        checks["strong_identities"] = (
            iso and all(w1.loc.is_identity(t) for t in eps1.components)
            and all(w2.loc.is_identity(t) for t in eps2.components)
            and all(w2.loc.is_identity(t) for t in eta2.components)
            and all(w1.loc.is_identity(t) for t in eta1.components))
    return Comparison(Ltp, Lt, eta1, eta2, eps1, eps2, iso, checks)
