import dataclasses

import pytest

from hocat import corpus
from hocat.fincat import identity_functor, opposite
from hocat.instances import model_from_classes
from hocat.model import (
    InvalidSquare, NoCoproduct, check_trivfib_correspondence,
    check_whitehead, cocone_cylinders, collapse_model, cylinders, homotopy_classes,
    left_homotopic, lift_Cf, lifts, local_cofibrant_replace, local_fibrant_replace,
    opposite_model, right_homotopic, solve_lifting, triv_model, validate_model,
)


def corrupted_collapse():
    md = collapse_model(corpus.diamond(), "BAD")
    return dataclasses.replace(md, Fib=frozenset(md.cat.morphisms), _cache={})


def test_shipped_models_validate(models):
    for key, md in models.items():
        rep = validate_model(md)
        assert rep.ok, (key, [str(v) for v in rep.violations])


def test_lifting_violation_is_reported_with_a_square():
    md = corrupted_collapse()
    c = md.cat
    rep = validate_model(md)
    kinds = {v.kind for v in rep.violations}
    assert "lifting" in kinds
    v = next(v for v in rep.violations if v.kind == "lifting")
    top, l, bottom, p = v.witness
    # the square commutes and has no filler
    assert c.comp[p][top] == c.comp[bottom][l]
    assert lifts(md, top, l, bottom, p) == []


def test_isomorphism_missing_from_class_is_reported():
    md = triv_model(corpus.z2_plus())
    bad = dataclasses.replace(md, W=frozenset(md.cat.ident), _cache={})
    assert "isomorphisms" in {v.kind for v in validate_model(bad).violations}


def test_two_out_of_three_violation():
    d = corpus.diamond()
    md = triv_model(d)
    bad = dataclasses.replace(md, W=md.W | {d.mor("bot->x"), d.mor("x->top")}, _cache={})
    assert "2-out-of-3" in {v.kind for v in validate_model(bad).violations}


def test_broken_factorization_is_reported():
    md = triv_model(corpus.diamond())
    f1 = list(md.fact1)
    f1[0] = f1[1]
    bad = dataclasses.replace(md, fact1=tuple(f1), _cache={})
    assert "factorization" in {v.kind for v in validate_model(bad).violations}


def test_opposite_model_is_dual(models):
    for key, md in models.items():
        op = opposite_model(md)
        assert validate_model(op).ok, key
        assert op.cat == opposite(md.cat)
        assert op.cofibrant_objects() == md.fibrant_objects()
        assert op.fibrant_objects() == md.cofibrant_objects()


def test_local_replacements_fix_cofibrant_and_fibrant_objects(models):
    for md in models.values():
        c = md.cat
        for x in md.cofibrant_objects():
            assert local_cofibrant_replace(md, x) == (x, c.ident[x])
        for x in md.fibrant_objects():
            assert local_fibrant_replace(md, x) == (x, c.ident[x])
        for x in c.objects:
            y, p = local_cofibrant_replace(md, x)
            assert md.is_cofibrant(y) and p in md.trivfib and c.cod[p] == x


def test_lift_Cf_is_a_least_filler(models):
    for md in models.values():
        c = md.cat
        for f in c.morphisms:
            h = lift_Cf(md, f)
            cx, gx = local_cofibrant_replace(md, c.dom[f])
            cy, gy = local_cofibrant_replace(md, c.cod[f])
            assert c.comp[gy][h] == c.comp[f][gx]
            assert h == min(m for m in c.hom(cx, cy) if c.comp[gy][m] == c.comp[f][gx])


def test_solve_lifting_rejects_bad_squares():
    md = triv_model(corpus.diamond())
    c = md.cat
    m = c.mor
    with pytest.raises(InvalidSquare):
        # does not commute
        solve_lifting(md, m("bot->x"), m("id_bot"), m("bot->y"), m("x->top"))
    with pytest.raises(InvalidSquare):
        # edges do not meet
        solve_lifting(md, m("x->top"), m("bot->x"), m("bot->y"), m("y->top"))
    # TRIV: Cof∩W are the isomorphisms, so an arbitrary pair is refused
    with pytest.raises(InvalidSquare):
        solve_lifting(md, m("bot->x"), m("bot->y"), m("y->top"), m("x->top"))
    assert solve_lifting(md, m("bot->x"), m("id_bot"), m("bot->x"), m("id_x")) == m("bot->x")


def test_cylinders_need_a_coproduct():
    md = triv_model(corpus.z2_plus())
    G = md.cat.obj("G")
    with pytest.raises(NoCoproduct):
        cylinders(md, G)
    cyl = cocone_cylinders(md, G)
    assert cyl and all(md.cat.comp[c.w][c.i1] == md.cat.ident[G] for c in cyl)


def test_cocone_cylinders_agree_with_literal_ones():
    md = collapse_model(corpus.diamond())
    c = md.cat
    for x in c.objects:
        try:
            lit = {(z.i1, z.i2) for z in cylinders(md, x)}
        except NoCoproduct:
            continue
        coc = {(z.i1, z.i2) for z in cocone_cylinders(md, x)}
        assert lit <= coc


def test_homotopy_is_trivial_in_triv_models():
    md = triv_model(corpus.z2_plus())
    c = md.cat
    for x in md.fc_objects():
        for y in md.fc_objects():
            assert all(len(cl) == 1 for cl in homotopy_classes(md, x, y))
    s, e = c.mor("s"), c.ident[c.obj("G")]
    assert not left_homotopic(md, s, e) and not right_homotopic(md, s, e)
    with pytest.raises(ValueError):
        left_homotopic(md, s, c.ident[c.obj("*")])


def test_whitehead(models):
    for key, md in models.items():
        rep = check_whitehead(md)
        assert rep.ok, (key, [str(v) for v in rep.violations])


def test_trivfib_correspondence(models):
    for key, md in models.items():
        rep = check_trivfib_correspondence(md)
        assert rep.ok, (key, [str(v) for v in rep.violations])


def test_twist_model_q_differs_from_local_replacement(models):
    md = models["TWIST_Z2PLUS"]
    c = md.cat
    G = c.obj("G")
    assert md.q[G] == c.mor("s")
    assert local_cofibrant_replace(md, G)[1] == c.ident[G]
    assert md.Q == identity_functor(c)


def test_model_from_classes_without_replacements():
    md = model_from_classes(corpus.diamond(), ["bot->y", "x->top"], ["bot->x", "y->top"],
                            corpus.diamond().mor_names)
    assert md.Q is None and validate_model(md).ok
    assert [md.cat.obj_names[x] for x in md.cofibrant_objects()] == ["bot", "x"]

