"""Small named categories used as instances and as the default battery."""
from __future__ import annotations

from typing import Sequence

from .fincat import FinCategory, category_from_table


def poset(elements: Sequence[str], covers: Sequence[tuple[str, str]]) -> FinCategory:
    """The poset generated by ``covers`` (pairs ``a <= b``) as a category."""
    idx = {e: i for i, e in enumerate(elements)}
    n = len(elements)
    leq = [[i == j for j in range(n)] for i in range(n)]
    for a, b in covers:
        leq[idx[a]][idx[b]] = True
    for k in range(n):
        for i in range(n):
            for j in range(n):
                if leq[i][k] and leq[k][j]:
                    leq[i][j] = True
    for i in range(n):
        for j in range(n):
            if i != j and leq[i][j] and leq[j][i]:
                raise ValueError("covers must generate a partial order")
    morphisms = []
    names = {}
    for i in range(n):
        for j in range(n):
            if leq[i][j]:
                name = f"id_{elements[i]}" if i == j else f"{elements[i]}->{elements[j]}"
                names[i, j] = name
                morphisms.append((name, elements[i], elements[j]))
    composites = [
        (names[j, k], names[i, j], names[i, k])
        for (i, j) in names for (j2, k) in names if j2 == j
    ]
    return category_from_table(
        elements, morphisms, {e: f"id_{e}" for e in elements}, composites,
        complete_identities=False)


def monoid(elements: Sequence[str], table: dict[tuple[str, str], str], obj: str = "*") -> FinCategory:
    """One-object category; ``table[(g, f)]`` is ``g o f`` and ``elements[0]`` the unit."""
    morphisms = [(e, obj, obj) for e in elements]
    composites = [(g, f, table[g, f]) for g in elements for f in elements
                  if (g, f) in table]
    return category_from_table([obj], morphisms, {obj: elements[0]}, composites)


def cyclic_group(n: int, obj: str = "*") -> FinCategory:
    elements = ["e"] + [f"s{k}" if n > 2 else "s" for k in range(1, n)]
    table = {(elements[a], elements[b]): elements[(a + b) % n]
             for a in range(n) for b in range(n)}
    return monoid(elements, table, obj)


def adjoin_bounds(c: FinCategory, bottom: str = "0", top: str = "*") -> FinCategory:
    """Freely add an initial object ``bottom`` and a terminal object ``top``."""
    objs = [bottom, *c.obj_names, top]
    morphisms = [(f"id_{bottom}", bottom, bottom)]
    composites = []
    for x in c.obj_names:
        morphisms.append((f"{bottom}->{x}", bottom, x))
    for f in c.morphisms:
        morphisms.append((c.mor_names[f], c.obj_names[c.dom[f]], c.obj_names[c.cod[f]]))
    for x in c.obj_names:
        morphisms.append((f"{x}->{top}", x, top))
    morphisms.append((f"{bottom}->{top}", bottom, top))
    morphisms.append((f"id_{top}", top, top))
    for g in c.morphisms:
        for f in c.morphisms:
            gf = c.comp[g][f]
            if gf >= 0:
                composites.append((c.mor_names[g], c.mor_names[f], c.mor_names[gf]))
        x, y = c.obj_names[c.dom[g]], c.obj_names[c.cod[g]]
        composites.append((c.mor_names[g], f"{bottom}->{x}", f"{bottom}->{y}"))
        composites.append((f"{y}->{top}", c.mor_names[g], f"{x}->{top}"))
    for x in c.obj_names:
        composites.append((f"{x}->{top}", f"{bottom}->{x}", f"{bottom}->{top}"))
    ids = {bottom: f"id_{bottom}", top: f"id_{top}"}
    ids.update({x: c.mor_names[c.ident[i]] for i, x in enumerate(c.obj_names)})
    return category_from_table(objs, morphisms, ids, composites)


def terminal_category() -> FinCategory:
    return category_from_table(["o"], [("id_o", "o", "o")], {"o": "id_o"})


def discrete(names: Sequence[str] = ("a", "b")) -> FinCategory:
    return category_from_table(
        names, [(f"id_{x}", x, x) for x in names], {x: f"id_{x}" for x in names})


def arrow() -> FinCategory:
    return category_from_table(
        ["a", "b"], [("id_a", "a", "a"), ("id_b", "b", "b"), ("f", "a", "b")],
        {"a": "id_a", "b": "id_b"})


def iso2() -> FinCategory:
    return category_from_table(
        ["a", "b"],
        [("id_a", "a", "a"), ("id_b", "b", "b"), ("u", "a", "b"), ("v", "b", "a")],
        {"a": "id_a", "b": "id_b"},
        [("v", "u", "id_a"), ("u", "v", "id_b")])


def z2() -> FinCategory:
    return cyclic_group(2)


def idempotent_monoid() -> FinCategory:
    return monoid(["1", "e"], {("e", "e"): "e"})


def parallel_pair() -> FinCategory:
    return category_from_table(
        ["a", "b"],
        [("id_a", "a", "a"), ("id_b", "b", "b"), ("f", "a", "b"), ("g", "a", "b")],
        {"a": "id_a", "b": "id_b"})


def split_idempotent() -> FinCategory:
    """``s: a -> b``, ``r: b -> a`` with ``r o s = id_a``; ``e = s o r``."""
    return category_from_table(
        ["a", "b"],
        [("id_a", "a", "a"), ("id_b", "b", "b"), ("s", "a", "b"), ("r", "b", "a"),
         ("e", "b", "b")],
        {"a": "id_a", "b": "id_b"},
        [("r", "s", "id_a"), ("s", "r", "e"), ("e", "s", "s"), ("r", "e", "r"),
         ("e", "e", "e")])


def chain(n: int) -> FinCategory:
    names = [str(k) for k in range(n)]
    return poset(names, list(zip(names, names[1:])))


def diamond() -> FinCategory:
    return poset(["bot", "x", "y", "top"],
                 [("bot", "x"), ("bot", "y"), ("x", "top"), ("y", "top")])


def z2_plus() -> FinCategory:
    """Z2 on an object ``G`` with a freely added initial ``0`` and terminal ``*``."""
    return adjoin_bounds(cyclic_group(2, obj="G"))


CATEGORIES = {
    "TERMINAL": terminal_category,
    "DISC2": discrete,
    "ARROW": arrow,
    "ISO2": iso2,
    "Z2": z2,
    "Z3": lambda: cyclic_group(3),
    "IDEM": idempotent_monoid,
    "PAR": parallel_pair,
    "SPLIT": split_idempotent,
    "CHAIN3": lambda: chain(3),
    "DIAMOND": diamond,
    "Z2PLUS": z2_plus,
}

# Categories with at most two objects and five morphisms.
DEFAULT_BATTERY = ("TERMINAL", "DISC2", "ARROW", "ISO2", "Z2", "Z3", "IDEM", "PAR", "SPLIT")
