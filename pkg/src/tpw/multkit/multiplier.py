"""Multipliers: endofunctors -(x)U on a base category with ⊤(x)U ≅ U.

Each shipped presentation provides its multiplier with the canonical
structure it actually has: the natural second projection always; a
natural first projection, product pairing, swap and diagonal when the
multiplier is (or is known to be) a cartesian product; and the
quantifier implementation from the worked examples.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable, Optional

from ..catkit import (AffineCube, BaseCategory, CartesianCube, CCHMCube,
                      Clocks, CubeBot, DepthCube, FinOrd, MorNF, ObjId,
                      Simplex, TwistedCube, UsageError)
from ..catkit.cubes import C, V
from ..catkit import cchm as dm
from ..catkit.orders import _opf


@dataclass(frozen=True)
class SliceObj:
    """An object of the slice W/U: a base object with a map to U."""
    obj: ObjId
    psi: MorNF  # cod = U


class ExistsImpl:
    """Per-presentation left adjoint to the fresh weakening functor."""

    def __init__(self, on_obj, on_mor, unit, counit, cat: str = ""):
        self.on_obj: Callable[[SliceObj], ObjId] = on_obj
        self.on_mor: Callable[[SliceObj, SliceObj, MorNF], MorNF] = on_mor
        self.unit: Callable[[SliceObj], MorNF] = unit      # V -> F(∃(V,ψ))
        self.counit: Callable[[ObjId], MorNF] = counit     # ∃(⌊U⌋W) -> W
        self.cat = cat


class Multiplier:
    def __init__(self, name: str, base: BaseCategory, target: ObjId,
                 on_obj, on_mor,
                 pi1: Optional[Callable[[ObjId], MorNF]] = None,
                 pairing=None, swap=None, diag=None,
                 exists: Optional[ExistsImpl] = None):
        self.name = name
        self.base = base
        self.U = target
        self._on_obj = on_obj
        self._on_mor = on_mor
        self.pi1 = pi1
        self.pairing = pairing   # (f: X->W, g: X->U) -> X -> W(x)U
        self.swap = swap         # FF(W) -> FF(W)
        self.diag = diag         # F(W) -> FF(W)
        self.exists = exists

    def on_obj(self, w: ObjId) -> ObjId:
        return self._on_obj(w)

    def on_mor(self, f: MorNF) -> MorNF:
        return self._on_mor(f)

    def unit_iso(self) -> MorNF:
        # all shipped presentations realize ⊤(x)U as U on the nose
        t = self.base.terminal()
        ft = self.on_obj(t)
        if ft != self.U:
            raise UsageError(f"{self.name}: ⊤(x)U = {ft!r} is not U = {self.U!r}")
        return self.base.identity(self.U)

    def proj2(self, w: ObjId) -> MorNF:
        """π₂ : W(x)U -> U, the unit iso composed with !_W (x) U."""
        bang = self.base.hom(w, self.base.terminal())[0]
        return self.base.compose(self.unit_iso(), self.on_mor(bang))

    def fresh_weaken(self, w: ObjId) -> SliceObj:
        return SliceObj(self.on_obj(w), self.proj2(w))

    def slice_objects(self, bound: int) -> list[SliceObj]:
        out = []
        for v in self.base.objects_up_to(bound):
            for psi in self.base.hom(v, self.U):
                out.append(SliceObj(v, psi))
        return out

    def slice_homs(self, a: SliceObj, b: SliceObj) -> tuple[MorNF, ...]:
        return tuple(h for h in self.base.hom(a.obj, b.obj)
                     if self.base.compose(b.psi, h) == a.psi)

    # -- dimensional splitness and boundaries --------------------------------

    def is_dim_split(self, psi: MorNF, bound: int) -> dict:
        """Does π₂ : W(x)U -> U factor over ψ for some enumerated W?

        When every enumerated object has a global point, splitness of ψ
        as an epi is equivalent and is checked directly (exact).
        """
        if psi.cod != self.U:
            raise UsageError("is_dim_split expects a morphism into U")
        if self.base.all_objects_have_points(bound):
            idU = self.base.identity(self.U)
            for s in self.base.hom(self.U, psi.dom):
                if self.base.compose(psi, s) == idU:
                    t = self.base.terminal()
                    chi = self.base.compose(s, self.unit_iso())
                    return {"verdict": "yes", "witness_w": t, "witness_chi": chi,
                            "method": "split-epi"}
            return {"verdict": "no_upto", "bound": bound, "method": "split-epi"}
        for w in self.base.objects_up_to(bound):
            p2 = self.proj2(w)
            for chi in self.base.hom(self.on_obj(w), psi.dom):
                if self.base.compose(psi, chi) == p2:
                    return {"verdict": "yes", "witness_w": w, "witness_chi": chi,
                            "method": "witness-search"}
        return {"verdict": "no_upto", "bound": bound, "method": "witness-search"}

    def boundary(self, v: ObjId, bound: int) -> tuple[MorNF, ...]:
        """The maps V -> U that are not dimensionally split (∂U at V)."""
        return tuple(psi for psi in self.base.hom(v, self.U)
                     if self.is_dim_split(psi, bound)["verdict"] != "yes")


# ---------------------------------------------------------------------------
# constructors per presentation
# ---------------------------------------------------------------------------


def _append_multiplier(base, fresh_entry_maker, name, fresh_obj_extend,
                       cartesian: bool, exists_kind: str):
    """Cube-style multipliers that append one fresh dimension."""

    def on_obj(w):
        return fresh_obj_extend(w)

    def on_mor(f):
        n = _obj_dims(base, f.dom)
        return MorNF(on_obj(f.dom), on_obj(f.cod),
                     tuple(f.payload) + (fresh_entry_maker(n),))

    def pi1(w):
        n = _obj_dims(base, w)
        return MorNF(on_obj(w), w, tuple(_var_entry(base, w, i) for i in range(n)))

    pairing = swap = diag = None
    if cartesian:
        def pairing(f, g):
            return MorNF(f.dom, on_obj(f.cod), tuple(f.payload) + tuple(g.payload))

        def swap(w):
            n = _obj_dims(base, w)
            ffw = on_obj(on_obj(w))
            ents = [_var_entry(base, ffw, i) for i in range(n)]
            return MorNF(ffw, ffw, tuple(ents) + (_var_entry(base, ffw, n + 1),
                                                  _var_entry(base, ffw, n)))

        def diag(w):
            n = _obj_dims(base, w)
            fw = on_obj(w)
            ents = [_var_entry(base, fw, i) for i in range(n)]
            u = _var_entry(base, fw, n)
            return MorNF(fw, on_obj(fw), tuple(ents) + (u, u))

    exists = _make_exists(base, on_obj, on_mor, pi1, pairing, exists_kind)
    target = on_obj(base.terminal())
    return Multiplier(name, base, target, on_obj, on_mor, pi1=pi1,
                      pairing=pairing, swap=swap, diag=diag, exists=exists)


def _obj_dims(base, w):
    if isinstance(base, (CartesianCube, AffineCube, CCHMCube)):
        return w.payload
    if isinstance(base, (DepthCube, Clocks)):
        return len(w.payload)
    raise UsageError("dims undefined")


def _var_entry(base, w, i):
    if isinstance(base, CCHMCube):
        return dm.var(i)
    return (V, i)


def _make_exists(base, on_obj, on_mor, pi1, pairing, kind):
    if kind == "cartesian":
        def e_obj(s: SliceObj) -> ObjId:
            return s.obj

        def e_mor(a: SliceObj, b: SliceObj, chi: MorNF) -> MorNF:
            return chi

        def unit(s: SliceObj) -> MorNF:
            return pairing(base.identity(s.obj), s.psi)

        def counit(w: ObjId) -> MorNF:
            return pi1(w)

        return ExistsImpl(e_obj, e_mor, unit, counit, cat=base.name)

    if kind == "affine":
        def u_entry(psi: MorNF):
            return psi.payload[0]

        def drop_obj(v: ObjId, j: int) -> ObjId:
            return ObjId(v.cat, v.payload - 1)

        def e_obj(s: SliceObj) -> ObjId:
            tag, x = u_entry(s.psi)
            return drop_obj(s.obj, x) if tag == V else s.obj

        def reindex(entry, j):
            tag, x = entry
            if tag == V and x > j:
                return (V, x - 1)
            return entry

        def e_mor(a: SliceObj, b: SliceObj, chi: MorNF) -> MorNF:
            ta, xa = u_entry(a.psi)
            tb, xb = u_entry(b.psi)
            if ta == C and tb == C:
                return MorNF(e_obj(a), e_obj(b), chi.payload)
            if ta == C and tb == V:
                ents = tuple(e for k, e in enumerate(chi.payload) if k != xb)
                return MorNF(e_obj(a), e_obj(b), ents)
            if ta == V and tb == V:
                ents = tuple(reindex(e, xa)
                             for k, e in enumerate(chi.payload) if k != xb)
                return MorNF(e_obj(a), e_obj(b), ents)
            raise UsageError("no slice morphism from a variable to a constant fiber")

        def unit(s: SliceObj) -> MorNF:
            tag, x = u_entry(s.psi)
            n = s.obj.payload
            if tag == C:
                ents = tuple((V, i) for i in range(n)) + ((C, x),)
                return MorNF(s.obj, on_obj(s.obj), ents)
            ents = tuple((V, i if i < x else i + 1) for i in range(n - 1)) + ((V, x),)
            return MorNF(s.obj, on_obj(e_obj(s)), ents)

        def counit(w: ObjId) -> MorNF:
            return base.identity(w)

        return ExistsImpl(e_obj, e_mor, unit, counit, cat=base.name)

    raise UsageError(f"unknown exists kind {kind}")


def cartesian_cube_multiplier(arity: int = 2) -> Multiplier:
    base = CartesianCube(arity)
    return _append_multiplier(
        base, lambda n: (V, n), f"{base.name} x (i:I)",
        lambda w: ObjId(base.name, w.payload + 1), cartesian=True,
        exists_kind="cartesian")


def cchm_multiplier() -> Multiplier:
    base = CCHMCube()
    return _append_multiplier(
        base, lambda n: dm.var(n), "cchm x (i:I)",
        lambda w: ObjId(base.name, w.payload + 1), cartesian=True,
        exists_kind="cartesian")


def affine_cube_multiplier(arity: int = 2) -> Multiplier:
    base = AffineCube(arity)
    m = _append_multiplier(
        base, lambda n: (V, n), f"{base.name} * (i:I)",
        lambda w: ObjId(base.name, w.payload + 1), cartesian=False,
        exists_kind="affine")

    def swap(w):
        n = w.payload
        ffw = ObjId(base.name, n + 2)
        ents = tuple((V, i) for i in range(n)) + ((V, n + 1), (V, n))
        return MorNF(ffw, ffw, ents)

    m.swap = swap
    return m


def depth_cube_multiplier(depth: int = 1, degree: int | None = None) -> Multiplier:
    base = DepthCube(depth)
    k = depth if degree is None else degree

    def extend(w):
        return ObjId(base.name, tuple(w.payload) + (k,))

    return _append_multiplier(base, lambda n: (V, n), f"{base.name} x (i:I_{k})",
                              extend, cartesian=True, exists_kind="cartesian")


def clocks_multiplier(max_label: int = 2, label: int = 0) -> Multiplier:
    base = Clocks(max_label)

    def extend(w):
        return ObjId(base.name, tuple(w.payload) + (label,))

    return _append_multiplier(base, lambda n: (V, n),
                              f"{base.name} x (i:clk_{label})",
                              extend, cartesian=True, exists_kind="cartesian")


def finord_multiplier(n: int = 4, i: int | None = None) -> Multiplier:
    base = FinOrd(n)
    i = n - 2 if i is None else i
    target = base.obj(i)

    def on_obj(w):
        return base.obj(min(w.payload, i))

    def on_mor(f):
        return MorNF(on_obj(f.dom), on_obj(f.cod), ("le",))

    def pi1(w):
        return MorNF(on_obj(w), w, ("le",))

    def pairing(f, g):
        return MorNF(f.dom, on_obj(f.cod), ("le",))

    def swap(w):
        ffw = on_obj(on_obj(w))
        return base.identity(ffw)

    def diag(w):
        return base.identity(on_obj(w))

    def e_obj(s):
        return s.obj

    def e_mor(a, b, chi):
        return chi

    def unit(s):
        return MorNF(s.obj, on_obj(s.obj), ("le",))

    def counit(w):
        return MorNF(on_obj(w), w, ("le",))

    return Multiplier(f"finord({n}) min(-,{i})", base, target, on_obj, on_mor,
                      pi1=pi1, pairing=pairing, swap=swap, diag=diag,
                      exists=ExistsImpl(e_obj, e_mor, unit, counit, cat=base.name))


def twisted_multiplier() -> Multiplier:
    base = TwistedCube()

    def on_obj(w):
        return base.obj(w.payload + 1)

    def on_mor(f):
        sm, sn = base.size(f.dom), base.size(f.cod)
        left = _opf(f.payload, sm, sn)
        right = tuple(sn + y for y in f.payload)
        return MorNF(on_obj(f.dom), on_obj(f.cod), left + right)

    U = base.obj(1)

    def classify_psi(psi: MorNF) -> str:
        vals = set(psi.payload)
        if vals == {0}:
            return "const0"
        if vals == {1}:
            return "const1"
        return "split"

    def e_obj(s: SliceObj) -> ObjId:
        kind = classify_psi(s.psi)
        if kind == "split":
            return base.obj(s.obj.payload - 1)
        return s.obj

    def e_mor(a: SliceObj, b: SliceObj, chi: MorNF) -> MorNF:
        ka, kb = classify_psi(a.psi), classify_psi(b.psi)
        sa, sb = base.size(a.obj), base.size(b.obj)
        if ka == "const0" and kb == "const0":
            return MorNF(e_obj(a), e_obj(b), _opf(chi.payload, sa, sb))
        if ka == "const1" and kb == "const1":
            return MorNF(e_obj(a), e_obj(b), chi.payload)
        if kb == "split":
            hb = sb // 2
            if ka == "const0":
                return MorNF(e_obj(a), e_obj(b), _opf(chi.payload, sa, hb))
            if ka == "const1":
                return MorNF(e_obj(a), e_obj(b), tuple(y - hb for y in chi.payload))
            ha = sa // 2
            return MorNF(e_obj(a), e_obj(b),
                         tuple(chi.payload[ha + x] - hb for x in range(ha)))
        raise UsageError(f"no twisted slice morphism {ka} -> {kb}")

    def unit(s: SliceObj) -> MorNF:
        kind = classify_psi(s.psi)
        sz = base.size(s.obj)
        if kind == "const0":
            return MorNF(s.obj, on_obj(s.obj), tuple(range(sz)))
        if kind == "const1":
            return MorNF(s.obj, on_obj(s.obj), tuple(sz + x for x in range(sz)))
        return base.identity(s.obj)

    def counit(w: ObjId) -> MorNF:
        return base.identity(w)

    return Multiplier("twisted-cube (x) X", base, U, on_obj, on_mor,
                      exists=ExistsImpl(e_obj, e_mor, unit, counit, cat=base.name))


def simplex_multiplier() -> Multiplier:
    base = Simplex()

    def on_obj(w):
        return base.obj(w.payload + 1)

    def on_mor(f):
        sw = f.cod.payload
        return MorNF(on_obj(f.dom), on_obj(f.cod), tuple(f.payload) + (sw,))

    U = base.obj(2)

    def e_obj(s: SliceObj) -> ObjId:
        p = sum(1 for y in s.psi.payload if y == 0)
        if p == 0:
            raise UsageError(
                "simplex quantifier undefined: the slice map is constantly 1")
        return base.obj(p)

    def e_mor(a: SliceObj, b: SliceObj, chi: MorNF) -> MorNF:
        pa = e_obj(a).payload
        return MorNF(e_obj(a), e_obj(b), chi.payload[:pa])

    def unit(s: SliceObj) -> MorNF:
        p = e_obj(s).payload
        ents = tuple(x if s.psi.payload[x] == 0 else p
                     for x in range(s.obj.payload))
        return MorNF(s.obj, base.obj(p + 1), ents)

    def counit(w: ObjId) -> MorNF:
        return base.identity(w)

    return Multiplier("simplex (+)< [0]", base, U, on_obj, on_mor,
                      exists=ExistsImpl(e_obj, e_mor, unit, counit, cat=base.name))


def cube_bot_multiplier() -> Multiplier:
    base = CubeBot()
    bot = base.bot()

    def on_obj(w):
        return bot

    def on_mor(f):
        return base.identity(bot)

    def pi1(w):
        return base.hom(bot, w)[0]

    def pairing(f, g):
        return base.identity(bot)

    def swap(w):
        return base.identity(bot)

    def diag(w):
        return base.identity(bot)

    def e_obj(s):
        return bot

    def e_mor(a, b, chi):
        return base.identity(bot)

    def unit(s):
        return base.identity(bot)

    def counit(w):
        return base.hom(bot, w)[0]

    return Multiplier("cube-bot x bot", base, bot, on_obj, on_mor, pi1=pi1,
                      pairing=pairing, swap=swap, diag=diag,
                      exists=ExistsImpl(e_obj, e_mor, unit, counit, cat=base.name))


def identity_multiplier(base: BaseCategory) -> Multiplier:
    t = base.terminal()

    def on_obj(w):
        return w

    def on_mor(f):
        return f

    def pi1(w):
        return base.identity(w)

    def pairing(f, g):
        return f

    def swap(w):
        return base.identity(w)

    def diag(w):
        return base.identity(w)

    def e_obj(s):
        return s.obj

    def e_mor(a, b, chi):
        return chi

    def unit(s):
        return base.identity(s.obj)

    def counit(w):
        return base.identity(w)

    return Multiplier(f"identity on {base.name}", base, t, on_obj, on_mor,
                      pi1=pi1, pairing=pairing, swap=swap, diag=diag,
                      exists=ExistsImpl(e_obj, e_mor, unit, counit, cat=base.name))


def make_multiplier(spec: str) -> Multiplier:
    """Resolve a multiplier by its category spec, e.g. 'affine-cube(2)'.

    Each of the nine presentations carries the single multiplier studied
    for it; 'identity(<cat>)' gives the identity multiplier on that base.
    """
    import re
    m = re.match(r"^\s*identity\s*\(\s*(.+?)\s*\)\s*$", spec)
    if m:
        from ..catkit import make_category
        return identity_multiplier(make_category(m.group(1)))
    m = re.match(r"^\s*([a-z-]+)\s*(?:\(\s*([0-9,\s]*)\s*\))?\s*$", spec)
    if not m:
        raise UsageError(f"cannot parse multiplier spec {spec!r}")
    name, args_s = m.group(1), m.group(2)
    args = [int(a) for a in args_s.split(",")] if args_s else []
    if name == "cartesian-cube":
        return cartesian_cube_multiplier(args[0] if args else 2)
    if name == "affine-cube":
        return affine_cube_multiplier(args[0] if args else 2)
    if name == "cchm":
        return cchm_multiplier()
    if name == "depth-cube":
        return depth_cube_multiplier(args[0] if args else 1)
    if name == "clocks":
        return clocks_multiplier(*(args or [2]))
    if name == "twisted-cube":
        return twisted_multiplier()
    if name == "finord":
        return finord_multiplier(args[0] if args else 4,
                                 args[1] if len(args) > 1 else None)
    if name == "simplex":
        return simplex_multiplier()
    if name == "cube-bot":
        return cube_bot_multiplier()
    raise UsageError(f"unknown multiplier spec {spec!r}")


MULTIPLIER_SPECS = ("cartesian-cube(2)", "affine-cube(2)", "cchm",
                    "depth-cube(1)", "clocks(2)", "twisted-cube",
                    "finord(4)", "simplex", "cube-bot")
