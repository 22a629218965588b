"""The quantifier adjoint chain Sigma_u -| fresh_u -| lolli_u -| transp_u
over a shape context, together with the weakening/function substitution
functors, flat, the amazing right adjoint, and the theorem checks.

Functor assignment (dictated by the base adjunction exists -| floor and
the unit/counit table):
    Sigma_u  = lan along exists              Psh(el Xi,u) -> Psh(el Xi)
    fresh_u  = precompose exists             Psh(el Xi)   -> Psh(el Xi,u)
    lolli_u  = precompose floor              Psh(el Xi,u) -> Psh(el Xi)
    transp_u = ran along floor               Psh(el Xi)   -> Psh(el Xi,u)
transp and lolli never need the quantifier implementation, so they stay
total even where exists is partial (the simplex join).
"""

from __future__ import annotations

from ..catkit import UsageError
from ..multkit import Multiplier, SliceObj
from .fincat import Arrow, FinCat, FunctorData, truncate_base
from .presheaf import (FinPsh, NatTrans, _key, elements, flat,
                       flat_on_nat, identity_nat, nats_equal,
                       sample_presheaf, terminal_psh, empty_psh)
from .kan import (ResourceBudgetError, lan, lan_counit, lan_unit, precompose,
                  precompose_on_nat, ran, ran_counit, ran_on_nat, ran_unit,
                  RanPsh, LanPsh)
from .tensor import TensorPsh, boundary_subobject, tensor_presheaf


def full_subcat(c: FinCat, objs) -> FinCat:
    objs = tuple(o for o in c.objects if o in set(objs))
    return FinCat(f"{c.name}|sub", objs, c.hom, c.compose, c.identity,
                  fmt_obj=c.fmt_obj, fmt_arrow=c.fmt_arrow)


def restrict_psh(p: FinPsh, sub: FinCat, name=None) -> FinPsh:
    return FinPsh(sub, {a: p.cells(a) for a in sub.objects},
                  lambda f, x: p.restrict(f, x), name=name or f"{p.name}|")


class QuantifierChain:
    """All chain data for one multiplier over one shape context Xi.

    `ambient` is the truncation the element categories live on; `n` is
    the verified region (objects V with V(x)U still inside the ambient
    truncation), so lolli/transp are honest on el_n.
    """

    def __init__(self, m: Multiplier, xi: FinPsh | None = None,
                 ambient: int | None = None, ran_budget: int = 4_000):
        self.m = m
        base = m.base
        if xi is None:
            if ambient is None:
                raise UsageError("need xi or ambient bound")
            self.trunc = truncate_base(base, ambient)
            xi = terminal_psh(self.trunc)
        else:
            self.trunc = xi.index
        self.xi = xi
        self.ran_budget = ran_budget
        self.xiu = tensor_presheaf(xi, m)
        self.el = elements(self.trunc, xi)
        self.el_u = elements(self.trunc, self.xiu)
        trunc_objs = set(self.trunc.objects)
        n_objs = [e for e in self.el.objects if m.on_obj(e[0]) in trunc_objs]
        if len(n_objs) == len(self.el.objects):
            self.el_n = self.el
        else:
            self.el_n = full_subcat(self.el, n_objs)
        self.floor = self._floor_functor()
        self.exists_fun = self._exists_functor()

    # -- the two base functors between element categories ----------------------

    def _floor_functor(self) -> FunctorData:
        m, xiu = self.m, self.xiu

        def on_obj(e):
            v, x = e
            fv = m.on_obj(v)
            return (fv, xiu.cls(fv, (v, x, m.base.identity(fv))))

        def on_arrow(a):
            f = a.tag.tag  # underlying MorNF
            ff = m.on_mor(f)
            d, c = on_obj(a.dom), on_obj(a.cod)
            return Arrow(d, c, Arrow(d[0], c[0], ff))

        return FunctorData("floor", self.el_n, self.el_u, on_obj, on_arrow)

    def _exists_functor(self) -> FunctorData | None:
        m, xi = self.m, self.xi
        if m.exists is None:
            return None
        impl = m.exists
        base = m.base
        trunc = self.trunc

        def slice_of(e):
            v, cell = e
            return SliceObj(v, self.xiu.u_leg(cell))

        def on_obj(e):
            v, cell = e
            w, x, psi = cell
            s = slice_of(e)
            eobj = impl.on_obj(s)
            target = SliceObj(m.on_obj(w), m.proj2(w))
            down = base.compose(impl.counit(w), impl.on_mor(s, target, psi))
            arr = Arrow(eobj, w, down)
            return (eobj, xi.restrict(arr, x))

        def on_arrow(a):
            g = a.tag.tag
            s_dom, s_cod = slice_of(a.dom), slice_of(a.cod)
            under = impl.on_mor(s_dom, s_cod, g)
            d, c = on_obj(a.dom), on_obj(a.cod)
            return Arrow(d, c, Arrow(d[0], c[0], under))

        try:
            for e in self.el_u.objects:
                on_obj(e)
        except UsageError:
            return None
        return FunctorData("exists", self.el_u, self.el, on_obj, on_arrow)

    # -- the four functors -------------------------------------------------------

    def fresh(self, p: FinPsh) -> FinPsh:
        if self.exists_fun is not None:
            return precompose(self.exists_fun, p, name=f"fresh({p.name})")
        fl = lan(self.floor, restrict_psh(p, self.el_n))
        fl.name = f"fresh({p.name})"
        return fl

    def lolli(self, q: FinPsh) -> FinPsh:
        return precompose(self.floor, q, name=f"lolli({q.name})")

    def transp(self, p: FinPsh) -> RanPsh:
        r = ran(self.floor, restrict_psh(p, self.el_n), budget=self.ran_budget)
        r.name = f"transp({p.name})"
        return r

    def sigma(self, q: FinPsh) -> FinPsh:
        if self.exists_fun is None:
            raise UsageError(f"{self.m.name}: Sigma needs a total quantifier")
        s = lan(self.exists_fun, q)
        s.name = f"sigma({q.name})"
        return s

    # -- units and counits --------------------------------------------------------

    def const(self, p: FinPsh) -> NatTrans:
        """unit of fresh -| lolli: P|n => lolli(fresh P)."""
        pn = restrict_psh(p, self.el_n)
        lf = self.lolli(self.fresh(p))
        if self.exists_fun is not None:
            comps = {}
            for c in self.el_n.objects:
                eps = self._base_counit(c)
                comps[c] = {x: p.restrict(eps, x) for x in p.cells(c)}
            return NatTrans(pn, lf, comps, "const")
        fl = self.fresh(p)
        eta = lan_unit(self.floor, restrict_psh(p, self.el_n), fl)
        return NatTrans(pn, lf, eta.components, "const")

    def app(self, q: FinPsh) -> NatTrans:
        """counit of fresh -| lolli: fresh(lolli Q) => Q."""
        fl = self.fresh(self.lolli(q))
        if self.exists_fun is not None:
            comps = {}
            for e in self.el_u.objects:
                eta = self._base_unit(e)
                comps[e] = {y: q.restrict(eta, y) for y in fl.cells(e)}
            return NatTrans(fl, q, comps, "app")
        cu = lan_counit(self.floor, q, fl)
        return NatTrans(fl, q, cu.components, "app")

    def reindex(self, q: FinPsh) -> NatTrans:
        """unit of lolli -| transp: Q => transp(lolli Q)."""
        return ran_unit(self.floor, q, self.transp(self.lolli(q)))

    def unmerid(self, p: FinPsh) -> NatTrans:
        """counit of lolli -| transp: lolli(transp P) => P|n."""
        rc = ran_counit(self.floor, restrict_psh(p, self.el_n), self.transp(p))
        return rc

    def sigma_unit(self, q: FinPsh) -> NatTrans:
        """unit of sigma -| fresh: Q => fresh(sigma Q)."""
        return lan_unit(self.exists_fun, q, self.sigma(q))

    def sigma_counit(self, p: FinPsh) -> NatTrans:
        """counit of sigma -| fresh: sigma(fresh P) => P."""
        return lan_counit(self.exists_fun, p, lan(self.exists_fun, self.fresh(p)))

    def _base_unit(self, e) -> Arrow:
        """eta_e : e -> floor(exists e) in el_u."""
        m = self.m
        v, cell = e
        s = SliceObj(v, self.xiu.u_leg(cell))
        under = m.exists.unit(s)
        return Arrow(e, self.floor.on_obj(self.exists_fun.on_obj(e)),
                     Arrow(v, under.cod, under))

    def _base_counit(self, c) -> Arrow:
        """eps_c : exists(floor c) -> c in el."""
        m = self.m
        v, x = c
        under = m.exists.counit(v)
        return Arrow(self.exists_fun.on_obj(self.floor.on_obj(c)), c,
                     Arrow(under.dom, v, under))

    # -- weakening / function substitution (natural pi1 required) -------------------

    def wkn_functor(self) -> FunctorData:
        m, xi = self.m, self.xi
        if m.pi1 is None:
            raise UsageError(f"{m.name}: weakening needs a natural first projection")

        def on_obj(e):
            v, cell = e
            w, x, psi = cell
            down = m.base.compose(m.pi1(w), psi)
            return (v, xi.restrict(Arrow(v, w, down), x))

        def on_arrow(a):
            return Arrow(on_obj(a.dom), on_obj(a.cod), a.tag)

        return FunctorData("wknsub", self.el_u, self.el, on_obj, on_arrow)

    def wkn(self, p: FinPsh) -> FinPsh:
        return precompose(self.wkn_functor(), p, name=f"wkn({p.name})")

    def func(self, q: FinPsh) -> RanPsh:
        r = ran(self.wkn_functor(), q, budget=self.ran_budget)
        r.name = f"func({q.name})"
        return r

    def wkn_unit(self, p: FinPsh) -> NatTrans:
        return ran_unit(self.wkn_functor(), p, self.func(self.wkn(p)))

    def wkn_counit(self, q: FinPsh) -> NatTrans:
        return ran_counit(self.wkn_functor(), q, self.func(q))

    # -- spoil / cospoil (semicartesian comparison) ----------------------------------

    def spoil_arrow(self, e) -> Arrow:
        """t_e : wknsub(e) -> exists(e) in el; precomposition with the
        family turns fresh into wkn. Canonically pi1 after the
        quantifier unit, so naturality is inherited."""
        m = self.m
        v, cell = e
        s = SliceObj(v, self.xiu.u_leg(cell))
        eobj = m.exists.on_obj(s)
        u = m.base.compose(m.pi1(eobj), m.exists.unit(s))
        return Arrow(self.wkn_functor().on_obj(e),
                     self.exists_fun.on_obj(e), Arrow(v, eobj, u))

    def spoil(self, p: FinPsh) -> NatTrans:
        """fresh P => wkn P."""
        fr, wk = self.fresh(p), self.wkn(p)
        comps = {}
        for e in self.el_u.objects:
            t = self.spoil_arrow(e)
            comps[e] = {y: p.restrict(t, y) for y in fr.cells(e)}
        return NatTrans(fr, wk, comps, "spoil")

    def spoilconst(self, q: FinPsh) -> NatTrans:
        """q|n => lolli(wkn q): const followed by lolli(spoil)."""
        c = self.const(q)
        sp = self.spoil(q)
        lsp = precompose_on_nat(self.floor, sp, self.lolli(self.fresh(q)),
                                self.lolli(self.wkn(q)))
        return c.then(lsp)

    def kappa(self, p: FinPsh) -> NatTrans:
        """flat p => lolli(wkn(flat p)); an iso on genuine global sections."""
        return self.spoilconst(flat(restrict_psh(p, self.el)))

    def zeta(self, p: FinPsh) -> NatTrans:
        """flat(func(transp p)) => flat(p): global sections of the amazing
        right adjoint composite collapse back."""
        co = self.cospoil(self.transp(p))
        um = self.unmerid(p)
        return flat_on_nat(co.then(um))

    def cospoil(self, q: FinPsh) -> NatTrans:
        """func Q => lolli Q, evaluation at the canonical comma object."""
        fq, lq = self.func(q), self.lolli(q)
        wf = self.wkn_functor()
        comps = {}
        for c in self.el_n.objects:
            e0 = self.floor.on_obj(c)
            v, x = c
            w0 = wf.on_obj(e0)
            g0 = Arrow(w0, c, Arrow(self.m.on_obj(v), v, self.m.pi1(v)))
            comps[c] = {fam: fq.value(c, fam, e0, g0) for fam in fq.cells(c)}
        return NatTrans(restrict_psh(fq, self.el_n), lq, comps, "cospoil")
