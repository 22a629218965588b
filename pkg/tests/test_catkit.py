"""Base category presentations: enumeration, canonical forms, laws."""

from __future__ import annotations

import itertools

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from tpw.catkit import (AffineCube, CartesianCube, CCHMCube, Clocks, CubeBot,
                        DepthCube, FinOrd, MorNF, Simplex, TwistedCube,
                        UsageError, make_category)
from tpw.catkit import cchm as dm

ALL_CATS = [
    (CartesianCube(2), 2),
    (AffineCube(2), 2),
    (CCHMCube(), 2),
    (DepthCube(1), 2),
    (Clocks(1), 2),
    (TwistedCube(), 4),
    (FinOrd(4), 3),
    (Simplex(), 3),
    (CubeBot(), 2),
]


def brute_cartesian_hom_count(n, m, a):
    return (n + a) ** m


def brute_affine_homs(n, m, a):
    """Independent oracle: raw enumeration under the injectivity side-condition."""
    opts = [("v", i) for i in range(n)] + [("c", e) for e in range(a)]
    out = []
    for entries in itertools.product(opts, repeat=m):
        vs = [e for e in entries if e[0] == "v"]
        if len(vs) == len(set(vs)):
            out.append(entries)
    return out


def test_cartesian_objects_enumeration():
    c = CartesianCube(2)
    assert [o.payload for o in c.objects_up_to(2)] == [0, 1, 2]


def test_finord_objects():
    assert [o.payload for o in FinOrd(3).objects_up_to(99)] == [0, 1, 2]


def test_twisted_objects_sizes():
    t = TwistedCube()
    assert [t.size(o) for o in t.objects_up_to(4)] == [1, 2, 4]


def test_cartesian_hom_count_oracle():
    c = CartesianCube(2)
    for n in range(3):
        for m in range(3):
            assert len(c.hom(c.obj(n), c.obj(m))) == brute_cartesian_hom_count(n, m, 2)


def test_affine_hom_matches_bruteforce():
    a = AffineCube(2)
    for n in range(3):
        for m in range(3):
            got = {f.payload for f in a.hom(a.obj(n), a.obj(m))}
            assert got == set(brute_affine_homs(n, m, 2))
    assert len(a.hom(a.obj(1), a.obj(1))) == 3  # {j/i, 0/i, 1/i}


def test_identity_in_hom():
    for cat, bound in ALL_CATS:
        for v in cat.objects_up_to(bound):
            assert cat.identity(v) in cat.hom(v, v)


def test_compose_examples():
    c = CartesianCube(2)
    f = MorNF(c.obj(0), c.obj(1), (("c", 0),))
    g = MorNF(c.obj(1), c.obj(1), (("v", 0),))
    assert c.compose(g, f).payload == (("c", 0),)

    h = CCHMCube()
    jk = dm.meet(dm.var(0), dm.var(1))
    g2 = MorNF(h.obj(2), h.obj(1), (jk,))
    f2 = MorNF(h.obj(1), h.obj(2), (dm.const(1), dm.var(0)))
    assert h.compose(g2, f2).payload == (dm.var(0),)

    fo = FinOrd(4)
    (f01,) = fo.hom(fo.obj(0), fo.obj(1))
    (f12,) = fo.hom(fo.obj(1), fo.obj(2))
    assert fo.compose(f12, f01) == fo.hom(fo.obj(0), fo.obj(2))[0]


def test_compose_endpoint_mismatch():
    c = CartesianCube(2)
    f = c.identity(c.obj(1))
    g = c.identity(c.obj(2))
    with pytest.raises(UsageError):
        c.compose(g, f)


def test_terminals():
    assert CartesianCube(2).terminal().payload == 0
    assert FinOrd(4).terminal().payload == 3
    assert Simplex().terminal().payload == 1
    for cat, bound in ALL_CATS:
        assert cat.terminal_is_terminal(bound)


def test_check_laws_all_presentations():
    for cat, bound in ALL_CATS:
        rep = cat.check_laws(bound, assoc_budget=50_000, samples=300)
        assert rep["violations"] == [], (cat.name, rep["violations"][:3])


def test_spooky_verdicts():
    assert Clocks(1).is_spooky(2)["verdict"] == "yes"
    assert Clocks(1).is_spooky(2)["witness"] == "clocks(1):(0,)"
    assert AffineCube(0).is_spooky(2)["verdict"] == "yes"
    assert AffineCube(2).is_spooky(2)["verdict"] == "no_upto"
    assert CCHMCube().is_spooky(2)["verdict"] == "no_upto"
    assert FinOrd(4).is_spooky(3)["verdict"] == "yes"
    # the freely adjoined initial object is not an epi witness
    assert CubeBot().is_spooky(2)["verdict"] == "no_upto"


def test_de_morgan_algebra_sizes_and_laws():
    assert len(dm.de_morgan_elements(0)) == 2
    assert len(dm.de_morgan_elements(1)) == 6
    assert len(dm.de_morgan_elements(2)) == 168  # Dedekind(4) antichains
    elems = dm.de_morgan_elements(1)
    for a in elems:
        assert dm.neg(dm.neg(a)) == a
        for b in elems:
            assert dm.neg(dm.join(a, b)) == dm.meet(dm.neg(a), dm.neg(b))
            assert dm.join(a, dm.meet(a, b)) == a  # absorption
    i = dm.var(0)
    assert dm.meet(i, dm.neg(i)) != dm.const(0)  # de Morgan, not Boolean


def test_twisted_closure_under_composition_and_op():
    t = TwistedCube()
    objs = t.objects_up_to(4)
    for a in objs:
        for b in objs:
            homs = {x.payload for x in t.hom(a, b)}
            for f in t.hom(a, b):
                assert t.op(f).payload in homs
            for c in objs:
                codomain = {x.payload for x in t.hom(a, c)}
                for g in t.hom(b, c):
                    for f in t.hom(a, b):
                        assert t.compose(g, f).payload in codomain


def test_twisted_global_points_count():
    t = TwistedCube()
    for lvl in range(3):
        assert len(t.global_points(t.obj(lvl))) == 1 << lvl


def test_cube_bot_initiality():
    cb = CubeBot()
    bot = cb.bot()
    for v in cb.objects_up_to(2):
        assert len(cb.hom(bot, v)) == 1
        if v != bot:
            assert len(cb.hom(v, bot)) == 0


def test_make_category_roundtrip():
    for spec in ["cartesian-cube(2)", "affine-cube(0)", "cchm", "depth-cube(1)",
                 "clocks(2)", "twisted-cube", "finord(4)", "simplex", "cube-bot"]:
        cat = make_category(spec)
        assert cat.terminal() is not None
    with pytest.raises(UsageError):
        make_category("banana(3)")


def test_depth_cube_degree_condition():
    d = DepthCube(1)
    lo, hi = d.obj((0,)), d.obj((1,))
    # a degree-0 slot accepts any variable; a degree-1 slot needs degree >= 1
    assert len(d.hom(hi, lo)) == 3   # {v, 0, 1}
    assert len(d.hom(lo, hi)) == 2   # {0, 1} only


def test_clocks_label_condition():
    c = Clocks(2)
    lo, hi = c.obj((0,)), c.obj((2,))
    assert len(c.hom(lo, hi)) == 1   # 0 <= 2
    assert len(c.hom(hi, lo)) == 0   # no constants, no admissible variable


@settings(max_examples=60, deadline=None)
@given(st.data())
def test_associativity_randomized(data):
    cat, bound = data.draw(st.sampled_from(ALL_CATS))
    objs = cat.objects_up_to(bound)
    a, b, c, d = (data.draw(st.sampled_from(objs)) for _ in range(4))
    fs, gs, hs = cat.hom(a, b), cat.hom(b, c), cat.hom(c, d)
    if not (fs and gs and hs):
        return
    f = data.draw(st.sampled_from(fs))
    g = data.draw(st.sampled_from(gs))
    h = data.draw(st.sampled_from(hs))
    assert cat.compose(cat.compose(h, g), f) == cat.compose(h, cat.compose(g, f))


def test_enumeration_deterministic():
    for cat, bound in ALL_CATS:
        objs1 = cat.objects_up_to(bound)
        objs2 = type(cat).__dict__ and cat.objects_up_to(bound)
        assert objs1 == objs2
        for v in objs1:
            for w in objs1:
                assert cat.hom(v, w) == cat.hom(v, w)
