
import pytest

from hocat import corpus
from hocat.derived import (
    DerivedSetting, MissingQ, PreconditionFailed, UniversalPair, certify_universal_pair,
    check_precondition, compare_KF, compare_KS, comparison_iso, derive_F, derive_K_kan,
    derive_K_quillen, derive_S, relate_quasi_inverses, right_kan_extension,
)
from hocat.fincat import (
    Functor, NatTransformation, compose_functors, constant_functor, enumerate_functors,
    identity_functor, is_nat_iso, is_natural, opposite_functor,
)
from hocat.instances import model_from_classes
from hocat.model import local_fibrant_replace, opposite_model

POSETS = ["TERMINAL", "DISC2", "ARROW", "CHAIN3", "DIAMOND"]


def leq(c, a, b):
    return bool(c.hom(a, b))


def meet(d, S):
    """Greatest lower bound of ``S`` in a poset category, or None."""
    lower = [m for m in d.objects if all(leq(d, m, s) for s in S)]
    top = [m for m in lower if all(leq(d, l, m) for l in lower)]
    return top[0] if top else None


def poset_ran(P, F):
    """Oracle: pointwise meets ``Ran F (b) = meet {F a : b <= P a}``."""
    B, d = P.target, F.target
    return [meet(d, [F.ob(a) for a in P.source.objects if leq(B, b, P.ob(a))])
            for b in B.objects]


def is_greatest(P, F, ext):
    """Brute-force universality in posets: ``G o P <= F`` implies ``G <= ext``."""
    B, d = P.target, F.target
    if not all(leq(d, ext.ob(P.ob(a)), F.ob(a)) for a in P.source.objects):
        return False
    for G in enumerate_functors(B, d):
        if all(leq(d, G.ob(P.ob(a)), F.ob(a)) for a in P.source.objects):
            if not all(leq(d, G.ob(b), ext.ob(b)) for b in B.objects):
                return False
    return True


@pytest.mark.parametrize("a,b,e", [
    ("DISC2", "ARROW", "DIAMOND"), ("DISC2", "TERMINAL", "DIAMOND"),
    ("ARROW", "CHAIN3", "DIAMOND"), ("DISC2", "TERMINAL", "DISC2"),
    ("CHAIN3", "ARROW", "CHAIN3"), ("DISC2", "DIAMOND", "CHAIN3"),
])
def test_kan_extension_matches_poset_oracle(a, b, e):
    A, B, D = (corpus.CATEGORIES[n]() for n in (a, b, e))
    n = 0
    for P in enumerate_functors(A, B):
        for F in enumerate_functors(A, D):
            want = poset_ran(P, F)
            pair = right_kan_extension(P, F)
            if None in want:
                assert pair is None
                continue
            n += 1
            assert pair is not None and pair.complete
            assert list(pair.ext.obj_map) == want
            assert is_greatest(P, F, pair.ext)
    assert n > 0 or e == "DISC2"


def test_kan_extension_examples():
    d2, d = corpus.discrete(), corpus.diamond()
    t = corpus.terminal_category()
    P = constant_functor(d2, t, 0)
    x, y = d.obj("x"), d.obj("y")
    F = Functor(d2, d, (x, y), (d.ident[x], d.ident[y]))
    pair = right_kan_extension(P, F)
    assert d.obj_names[pair.ext.ob(0)] == "bot"
    assert [d.mor_names[m] for m in pair.counit.components] == ["bot->x", "bot->y"]
    # along the identity the extension is the functor itself
    ar = corpus.arrow()
    for G in enumerate_functors(ar, d):
        p = right_kan_extension(identity_functor(ar), G)
        assert p.ext == G and all(d.is_identity(m) for m in p.counit.components)


def test_absent_kan_extension():
    d2 = corpus.discrete()
    t = corpus.terminal_category()
    assert right_kan_extension(constant_functor(d2, t, 0), identity_functor(d2)) is None


def test_tampered_pair_fails_certificate():
    d2, d = corpus.discrete(), corpus.diamond()
    t = corpus.terminal_category()
    P = constant_functor(d2, t, 0)
    top, bot = d.obj("top"), d.obj("bot")
    F = constant_functor(d2, d, top)
    good = right_kan_extension(P, F)
    assert good.ext.ob(0) == top
    # bot with its cone is a cone over F but not the limit
    ext = constant_functor(t, d, bot)
    comps = (d.hom(bot, top)[0],) * 2
    bad = certify_universal_pair(UniversalPair(
        P, F, ext, NatTransformation(compose_functors(ext, P), F, comps)))
    assert not bad.complete and bad.failure["solutions"] == 0


def test_comparison_iso_between_equivalent_pairs():
    d2, d = corpus.discrete(), corpus.diamond()
    t = corpus.terminal_category()
    P = constant_functor(d2, t, 0)
    F = Functor(d2, d, (d.obj("x"), d.obj("y")), (d.ident[d.obj("x")], d.ident[d.obj("y")]))
    p = right_kan_extension(P, F)
    th = comparison_iso(p, p)
    assert len(th) == 1 and is_nat_iso(th[0])


def admissible(md_m, md_n):
    out = []
    for F in enumerate_functors(md_m.cat, md_n.cat):
        try:
            check_precondition(F, md_m, md_n)
        except PreconditionFailed:
            continue
        out.append(F)
    return out


def test_precondition_failure_names_the_weak_equivalence(models):
    col, triv = models["COLLAPSE_DIAMOND"], models["TRIV_DIAMOND"]
    F = Functor(col.cat, triv.cat, tuple(col.cat.objects), tuple(col.cat.morphisms))
    with pytest.raises(PreconditionFailed) as e:
        derive_K_quillen(F, col, triv)
    assert e.value.counterexample == "bot->x"
    const = constant_functor(col.cat, triv.cat, triv.cat.obj("top"))
    res = derive_K_quillen(const, col, triv)
    assert res.extras["certificate_complete"]


def test_missing_q():
    d = corpus.diamond()
    md = model_from_classes(d, ["bot->y", "x->top"], ["bot->x", "y->top"], d.mor_names)
    F = identity_functor(d)
    with pytest.raises(MissingQ):
        derive_K_quillen(F, md, md, route="q")
    with pytest.raises(MissingQ):
        derive_S(F, md, md)
    # the local route needs no Q
    assert derive_K_quillen(F, md, md).extras["certificate_complete"]


def test_K_on_triv_is_the_functor_itself(models):
    md = models["TRIV_DIAMOND"]
    st = DerivedSetting(md, md)
    for F in admissible(md, md):
        res = derive_K_quillen(F, md, md, setting=st)
        assert list(res.functor.obj_map) == list(F.obj_map)
        assert all(st.hoN.cat.is_identity(m) for m in res.transformation.components)


@pytest.mark.parametrize("key", ["TRIV_Z2PLUS", "COLLAPSE_DIAMOND", "MIXED_DIAMOND"])
def test_first_and_last_faint_factorizations_are_comparable(models, key):
    md = models[key]
    st = DerivedSetting(md, md)
    for F in admissible(md, md)[:8]:
        a = derive_F(F, md, md, setting=st)
        b = derive_F(F, md, md, setting=st, pick="last")
        P, T = a.extras["P"], a.extras["T"]
        pa = UniversalPair(P, T, a.functor, a.transformation)
        pb = UniversalPair(P, T, b.functor, b.transformation)
        th = comparison_iso(pa, pb)
        assert len(th) == 1 and is_nat_iso(th[0])
        assert a.extras["iota_iso"] and a.extras["nu_natural"]


def test_K_kan_pointwise_agrees(models):
    md = models["MIXED_DIAMOND"]
    st = DerivedSetting(md, md)
    for F in admissible(md, md)[:10]:
        res = derive_K_kan(F, md, md, setting=st)
        assert res.extras["certificate_complete"]
        if res.extras["pointwise"] is not None:
            assert res.extras["pointwise_comparison"]


def test_S_with_explicit_quasi_inverse(models):
    md = models["TWIST_Z2PLUS"]
    st = DerivedSetting(md, md)
    for F in admissible(md, md):
        s = derive_S(F, md, md, setting=st)
        assert s.extras["strict_equation"] and s.extras["quasi_inverse_ok"] and s.extras["nu_natural"]
        I = s.extras["HoQ"]
        e = derive_S(F, md, md, quasi_inverse=I, setting=st)
        assert e.extras["quasi_inverse_ok"] and e.functor == s.functor
        kappa = relate_quasi_inverses(s.extras["HoF"], I, I)
        assert kappa is not None and is_nat_iso(kappa)


def test_relate_distinct_quasi_inverses(models):
    md = models["TWIST_Z2PLUS"]
    st = DerivedSetting(md, md)
    F = identity_functor(md.cat)
    s = derive_S(F, md, md, setting=st)
    I = s.extras["HoQ"]
    loc_c = st.ho_c[0]
    others = [J for J in enumerate_functors(st.hoM.cat, loc_c)
              if derive_S(F, md, md, quasi_inverse=J, setting=st).extras["quasi_inverse_ok"]]
    assert I in others
    for J in others:
        kappa = relate_quasi_inverses(s.extras["HoF"], I, J)
        assert kappa is not None and is_nat_iso(kappa)
        assert is_natural(kappa.source, kappa.target, kappa.components)


@pytest.mark.parametrize("key", ["TRIV_DIAMOND", "COLLAPSE_DIAMOND", "MIXED_DIAMOND",
                                 "TRIV_Z2PLUS"])
def test_dual_derivation_uses_fibrant_replacement(models, key):
    md = models[key]
    op = opposite_model(md)
    F = identity_functor(md.cat)
    Fop = opposite_functor(F)
    res = derive_K_quillen(Fop, op, op)
    assert res.extras["certificate_complete"]
    for x in md.cat.objects:
        assert res.functor.ob(x) == F.ob(local_fibrant_replace(md, x)[0])


@pytest.mark.parametrize("key", ["TRIV_Z2PLUS", "TWIST_Z2PLUS", "CHAIN3_MODEL"])
def test_comparisons_pass(models, key):
    md = models[key]
    st = DerivedSetting(md, md)
    for F in admissible(md, md):
        kf = compare_KF(F, md, md, setting=st)
        ks = compare_KS(F, md, md, setting=st)
        assert kf.ok, kf.checks
        assert ks.ok, ks.checks
        assert ks.details["routes_coincide"] == (key != "TWIST_Z2PLUS")
