"""Exhaustive search for model structures on small finite categories.

Prints, per category, the number of model structures found and those whose
homotopy relation is non-discrete or that admit a cofibrant replacement
functor different from the local one.
"""
import itertools
import sys

from hocat import corpus
from hocat.fincat import isomorphisms
from hocat.model import (
    ModelData, _lifting_violation, _retract_violation, homotopy_classes,
    local_cofibrant_replace, ModelInconsistency,
)


def subsets(c, base):
    free = [f for f in c.morphisms if f not in base]
    for bits in itertools.product((0, 1), repeat=len(free)):
        yield frozenset(base | {f for f, b in zip(free, bits) if b})


def two_of_three(c, W):
    for g in c.morphisms:
        for f in c.morphisms:
            gf = c.comp[g][f]
            if gf >= 0 and (f in W) + (g in W) + (gf in W) == 2:
                return False
    return True


def factor(c, f, left, right):
    x, y = c.dom[f], c.cod[f]
    for z in c.objects:
        for a in c.hom(x, z):
            if a in left:
                for b in c.hom(z, y):
                    if b in right and c.comp[b][a] == f:
                        return a, b
    return None


def search(c):
    isos = isomorphisms(c)
    Ws = [W for W in subsets(c, isos) if two_of_three(c, W) and _retract_violation(c, W) is None]
    closed = [S for S in subsets(c, isos) if _retract_violation(c, S) is None]
    found = []
    for W in Ws:
        for Cof in closed:
            for Fib in closed:
                tf, tc = Fib & W, Cof & W
                if _lifting_violation(c, Cof, tf) or _lifting_violation(c, tc, Fib):
                    continue
                f1 = [factor(c, f, Cof, tf) for f in c.morphisms]
                f2 = [factor(c, f, tc, Fib) for f in c.morphisms]
                if None in f1 or None in f2:
                    continue
                found.append((W, Cof, Fib, tuple(f1), tuple(f2)))
    return found


def main(names):
    from hocat.fincat import find_initial, find_terminal
    for name in names:
        c = corpus.CATEGORIES[name]() if name in corpus.CATEGORIES else eval(name, vars(corpus))
        x0, x1 = find_initial(c), find_terminal(c)
        res = search(c)
        print(f"{name}: {len(res)} model structures")
        for W, Cof, Fib, f1, f2 in res:
            md = ModelData(c, W, Cof, Fib, x0, x1, f1, f2)
            fc = md.fc_objects()
            try:
                big = [(c.obj_names[x], c.obj_names[y], cl) for x in fc for y in fc
                       for cl in homotopy_classes(md, x, y) if len(cl) > 1]
            except ModelInconsistency as e:
                big = f"inconsistent: {e}"
            alt_q = []
            for x in c.objects:
                cx = local_cofibrant_replace(md, x)[0]
                for y in md.cofibrant_objects():
                    if y != cx and any(q in md.trivfib for q in c.hom(y, x)):
                        alt_q.append((c.obj_names[x], c.obj_names[y]))
            if big or alt_q:
                fmt = lambda s: sorted(c.mor_names[f] for f in s if not c.is_identity(f))
                print("  W", fmt(W), "Cof", fmt(Cof), "Fib", fmt(Fib),
                      "fc", [c.obj_names[x] for x in fc], "nondiscrete", big, "altQ", alt_q)


if __name__ == "__main__":
    main(sys.argv[1:] or ["CHAIN3", "DIAMOND", "Z2PLUS"])
