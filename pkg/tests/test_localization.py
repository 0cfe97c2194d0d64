import pytest

from hocat import corpus
from hocat.fincat import (
    Functor, category_from_table, constant_functor, enumerate_functors, identity_functor,
    is_isomorphism,
)
from hocat.instances import marked
from hocat.localization import (
    FLAGS, FWD, INV, LocalizationWitness, MalformedZigzag, NotLocalization, Zigzag,
    check_L1_faint, check_L1prime_strong, check_L2_faint, check_L2prime, classify,
    compare_localizations, default_battery, evaluate_zigzag, faint_factorizations,
    identity_witness, implication_violations, make_battery, precomposition_profile,
    rewriting_witness, sends_W_to_isos, strict_factorizations,
)

SMALL = make_battery([(n, corpus.CATEGORIES[n]())
                      for n in ("TERMINAL", "DISC2", "ARROW", "ISO2", "Z2")], "small")


def flags(wit):
    return {k: v.status for k, v in wit.flags.items()}


def terminal_witness():
    a = corpus.arrow()
    t = corpus.terminal_category()
    return LocalizationWitness(a, marked("A", a, ["f"]).W, t, constant_functor(a, t, 0),
                               "ARROW->point")


def test_identity_witness_is_strict():
    for name in ("ARROW", "SPLIT", "Z2"):
        wit = classify(identity_witness(corpus.CATEGORIES[name]()), SMALL)
        assert flags(wit) == {k: "verified" for k in FLAGS}
        assert wit.flags["strict"].battery == SMALL.id


def test_rewriting_witness_is_strict():
    a = corpus.arrow()
    wit = classify(rewriting_witness(a, marked("A", a, ["f"]).W), SMALL)
    assert flags(wit) == {k: "verified" for k in FLAGS}


def test_equivalent_but_not_isomorphic_target_is_weak_not_strong():
    wit = classify(terminal_witness(), SMALL)
    assert flags(wit) == {"faint": "verified", "weak": "verified",
                          "strong": "refuted", "strict": "refuted"}
    ce = wit.flags["strong"].counterexample
    assert ce["condition"] == "L1'"
    assert implication_violations(wit) == []


def test_non_localization_is_refuted():
    # the identity of ARROW with W = {f}: f is not inverted
    a = corpus.arrow()
    with pytest.raises(NotLocalization):
        LocalizationWitness(a, marked("A", a, ["f"]).W, a, identity_functor(a), "bad")
    # ARROW -> ISO2 with W = identities: functors not inverting f cannot factor
    i2 = corpus.iso2()
    F = next(F for F in enumerate_functors(a, i2) if F.ar(a.mor("f")) == i2.mor("u"))
    wit = classify(LocalizationWitness(a, frozenset(a.ident), i2, F, "ARROW->ISO2"), SMALL)
    assert not wit.flags["faint"].verified
    assert implication_violations(wit) == []


def test_individual_checks_agree_with_classify():
    wit = terminal_witness()
    d = corpus.iso2()
    assert check_L1_faint(wit, d).ok
    assert check_L2_faint(wit, d).ok
    assert check_L2prime(wit, d).ok
    assert not check_L1prime_strong(wit, d).ok


def test_factorizations_of_inverting_functors():
    a = corpus.arrow()
    wit = rewriting_witness(a, marked("A", a, ["f"]).W)
    d = corpus.split_idempotent()
    for F in enumerate_functors(a, d):
        strict = strict_factorizations(wit, F)
        faint = faint_factorizations(wit, F)
        if is_isomorphism(d, F.ar(a.mor("f"))) is not None:
            assert len(strict) == 1 and faint
        else:
            assert not strict and not faint


def test_precomposition_profile_of_strict_witness():
    a = corpus.arrow()
    wit = rewriting_witness(a, marked("A", a, ["f"]).W)
    prof = precomposition_profile(wit, corpus.split_idempotent())
    assert prof["lands_in_W_inverting"] and prof["bijective_on_objects"]
    prof = precomposition_profile(terminal_witness(), corpus.iso2())
    assert prof["essentially_surjective"] and not prof["bijective_on_objects"]


def test_zigzag_evaluation():
    a = corpus.arrow()
    W = marked("A", a, ["f"]).W
    loc, L = rewriting_witness(a, W).loc, rewriting_witness(a, W).L
    f = a.mor("f")
    z = Zigzag(a.obj("a"), a.obj("a"), ((FWD, f), (INV, f)))
    assert loc.is_identity(evaluate_zigzag(L, W, z))
    z = Zigzag(a.obj("b"), a.obj("a"), ((INV, f),))
    assert loc.mor_names[evaluate_zigzag(L, W, z)] == "f^-1"
    with pytest.raises(MalformedZigzag):
        evaluate_zigzag(L, W, Zigzag(a.obj("a"), a.obj("a"), ((INV, f),)))
    with pytest.raises(MalformedZigzag):
        evaluate_zigzag(L, frozenset(a.ident), Zigzag(a.obj("b"), a.obj("a"), ((INV, f),)))


def test_compare_localizations():
    a = corpus.arrow()
    W = marked("A", a, ["f"]).W
    rw = classify(rewriting_witness(a, W), SMALL)
    tw = classify(terminal_witness(), SMALL)
    cmp = compare_localizations(rw, tw)
    assert cmp.ok and not cmp.isomorphism
    same = compare_localizations(rw, classify(rewriting_witness(a, W, name="again"), SMALL))
    assert same.ok and same.isomorphism and same.checks["strong_identities"]


def test_compare_requires_faint():
    a = corpus.arrow()
    W = marked("A", a, ["f"]).W
    with pytest.raises(NotLocalization):
        compare_localizations(rewriting_witness(a, W), terminal_witness())


def test_default_battery_contains_witness_categories():
    wit = terminal_witness()
    b = default_battery(wit)
    names = [n for n, _ in b.members]
    assert names[-2:] == ["loc", "base"] and "SPLIT" in names
    assert b.id == default_battery(terminal_witness()).id


def test_sends_W_to_isos_reports_first_offender():
    a = corpus.arrow()
    ok, bad = sends_W_to_isos(identity_functor(a), [a.mor("f")])
    assert not ok and bad == a.mor("f")
    assert sends_W_to_isos(identity_functor(a), a.ident) == (True, None)


def test_junk_component_is_reported_per_condition():
    # ISO2 plus a disconnected ARROW that nothing maps into
    j = category_from_table(
        ["a", "b", "c", "d"],
        [("id_a", "a", "a"), ("id_b", "b", "b"), ("u", "a", "b"), ("v", "b", "a"),
         ("id_c", "c", "c"), ("id_d", "d", "d"), ("g", "c", "d")],
        {"a": "id_a", "b": "id_b", "c": "id_c", "d": "id_d"},
        [("v", "u", "id_a"), ("u", "v", "id_b")])
    a = corpus.arrow()
    wit = LocalizationWitness(a, marked("A", a, ["f"]).W, j,
                              Functor(a, j, (0, 1), (0, 1, 2)), "junk")
    d = corpus.split_idempotent()
    # factorizations exist (the junk goes anywhere) but are not unique up to unique iso
    assert check_L1_faint(wit, d).ok
    assert not check_L2_faint(wit, d).ok
    classify(wit, SMALL)
    assert wit.flags["faint"].status == "refuted"
    assert implication_violations(wit) == []
