"""Multipliers: projections, dimensional splitness, boundaries, classifier."""

from __future__ import annotations

import json
import pathlib

import pytest

from tpw.catkit import UsageError
from tpw.multkit import (Classifier, MULTIPLIER_SPECS, SliceObj, classify,
                         default_bound, identity_multiplier, make_multiplier)
from tpw.catkit import make_category

GOLDEN = json.loads((pathlib.Path(__file__).parent.parent / "fig7.json").read_text())


def mult(spec):
    return make_multiplier(spec)


def test_multiplier_functoriality_all():
    for spec in MULTIPLIER_SPECS:
        m = mult(spec)
        bound = 1 if spec == "cchm" else 2
        base = m.base
        objs = base.objects_up_to(bound)
        for v in objs:
            assert m.on_mor(base.identity(v)) == base.identity(m.on_obj(v))
            for w in objs:
                for f in base.hom(v, w):
                    for x in objs:
                        for g in base.hom(w, x):
                            assert m.on_mor(base.compose(g, f)) == \
                                base.compose(m.on_mor(g), m.on_mor(f))


def test_unit_iso_and_proj2_naturality():
    for spec in MULTIPLIER_SPECS:
        m = mult(spec)
        base = m.base
        u = m.unit_iso()
        assert u.dom == m.on_obj(base.terminal()) and u.cod == m.U
        bound = 1 if spec == "cchm" else 2
        objs = base.objects_up_to(bound)
        for v in objs:
            for w in objs:
                for f in base.hom(v, w):
                    assert base.compose(m.proj2(w), m.on_mor(f)) == m.proj2(v)


def test_proj2_examples():
    m = mult("cartesian-cube(2)")
    w = m.base.obj(1)
    assert m.proj2(w).payload == (("v", 1),)  # literal second projection

    ident = identity_multiplier(make_category("cartesian-cube(2)"))
    w = ident.base.obj(1)
    assert ident.proj2(w) == ident.base.hom(w, ident.base.terminal())[0]

    t = mult("twisted-cube")
    w = t.base.obj(1)
    # left copy of W to 0, right copy to 1
    assert t.proj2(w).payload == (0, 0, 1, 1)


def test_fresh_weaken():
    m = mult("cartesian-cube(2)")
    s = m.fresh_weaken(m.base.obj(1))
    assert s.obj.payload == 2 and s.psi == m.proj2(m.base.obj(1))

    cb = mult("cube-bot")
    s = cb.fresh_weaken(cb.base.obj(1))
    assert cb.base.is_bot(s.obj) and s.psi == cb.base.identity(cb.base.bot())


def test_dim_split_examples():
    m = mult("cartesian-cube(2)")
    idU = m.base.identity(m.U)
    assert m.is_dim_split(idU, 3)["verdict"] == "yes"
    from tpw.catkit import MorNF
    zero = MorNF(m.base.obj(0), m.U, (("c", 0),))
    assert m.is_dim_split(zero, 3)["verdict"] == "no_upto"
    p2 = m.proj2(m.base.obj(1))
    assert m.is_dim_split(p2, 3)["verdict"] == "yes"


def test_boundary_examples():
    m = mult("cartesian-cube(2)")
    # at the point, the boundary of the interval is the two endpoints
    b = m.boundary(m.base.obj(0), 3)
    assert sorted(f.payload for f in b) == [((("c", 0),))[0:1][0] and (("c", 0),), (("c", 1),)]
    assert len(b) == 2
    # the generic point (j/i) is not on the boundary
    b1 = m.boundary(m.base.obj(1), 3)
    assert (("v", 0),) not in {f.payload for f in b1}
    # identity multiplier: empty boundary everywhere
    ident = identity_multiplier(make_category("cartesian-cube(2)"))
    for v in ident.base.objects_up_to(2):
        assert ident.boundary(v, 2) == ()


def test_boundary_subpresheaf_closure():
    for spec in ("cartesian-cube(2)", "affine-cube(2)", "simplex"):
        m = mult(spec)
        bound = 2 if spec != "simplex" else 3
        objs = m.base.objects_up_to(bound)
        for v in objs:
            bd = set(m.boundary(v, bound))
            for psi in bd:
                for v2 in objs:
                    for phi in m.base.hom(v2, v):
                        comp = m.base.compose(psi, phi)
                        assert m.is_dim_split(comp, bound)["verdict"] != "yes"


def test_simplex_exists_partiality():
    m = mult("simplex")
    from tpw.catkit import MorNF
    const1 = MorNF(m.base.obj(2), m.U, (1, 1))
    with pytest.raises(UsageError):
        m.exists.on_obj(SliceObj(m.base.obj(2), const1))


def test_twisted_exists_table():
    m = mult("twisted-cube")
    base = m.base
    w = base.obj(1)
    from tpw.catkit import MorNF
    c0 = MorNF(w, m.U, (0, 0))
    c1 = MorNF(w, m.U, (1, 1))
    assert m.exists.on_obj(SliceObj(w, c0)) == w      # W^op has the same carrier
    assert m.exists.on_obj(SliceObj(w, c1)) == w
    prism = m.fresh_weaken(w)
    assert m.exists.on_obj(prism) == w
    # the op-action on a const-0 slice morphism is conjugation by reversal
    chi = base.identity(w)
    f = m.exists.on_mor(SliceObj(w, c0), SliceObj(w, c0), chi)
    assert f == base.identity(w)


def test_exists_examples_cartesian_identity():
    for spec in ("cartesian-cube(2)", "finord(4)"):
        m = mult(spec)
        for s in m.slice_objects(2):
            assert m.exists.on_obj(s) == s.obj
    ident = identity_multiplier(make_category("cartesian-cube(2)"))
    for s in ident.slice_objects(2):
        assert ident.exists.on_obj(s) == s.obj


def test_affine_exists_drops_used_variable():
    m = mult("affine-cube(2)")
    from tpw.catkit import MorNF
    v = m.base.obj(2)
    psi = MorNF(v, m.U, (("v", 0),))
    assert m.exists.on_obj(SliceObj(v, psi)).payload == 1
    eps = MorNF(v, m.U, (("c", 1),))
    assert m.exists.on_obj(SliceObj(v, eps)).payload == 2


@pytest.mark.parametrize("spec", MULTIPLIER_SPECS)
def test_classify_matches_golden_row(spec):
    row = classify(mult(spec), default_bound(spec))
    got = {k: v["verdict"] for k, v in row["properties"].items()}
    assert got == GOLDEN["rows"][spec], (spec, got)


def test_identity_multiplier_row_all_yes():
    row = classify(identity_multiplier(make_category("cartesian-cube(2)")), 2)
    for prop, verdict in row["properties"].items():
        if prop == "spooky":
            assert verdict["verdict"] == "no"
        else:
            assert verdict["verdict"] == "yes", prop


def test_classifier_attaches_witnesses():
    row = classify(mult("cchm"), 2)
    ce = row["properties"]["connection_free"]["counterexample"]
    assert "&" in ce["psi"] or "|" in ce["psi"]  # a connection map
    row2 = classify(mult("cube-bot"), 2)
    assert "counterexample" in row2["properties"]["cancellative"]


def test_quantifiable_mismatched_presentation():
    m = mult("cartesian-cube(2)")
    other = mult("affine-cube(2)")
    c = Classifier(m, 2)
    with pytest.raises(UsageError):
        c.verify_quantifiable(impl=other.exists)


def test_appending_multiplier_unit_laws():
    # ⊤(x)U is U on the nose for every shipped presentation
    for spec in MULTIPLIER_SPECS:
        m = mult(spec)
        assert m.on_obj(m.base.terminal()) == m.U
