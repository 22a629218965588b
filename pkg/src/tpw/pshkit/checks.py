"""Mechanical verification of the semantic theorems: adjunction chain
triangles, the quantification theorem, pole, boundary-iso, and the
amazing right adjoint with its global-sections isomorphisms."""

from __future__ import annotations

from ..catkit import UsageError
from ..multkit import Multiplier
from .chain import QuantifierChain, restrict_psh
from .fincat import FinCat
from .kan import (lan, lan_on_nat, precompose_on_nat, ran_on_nat,
                  ResourceBudgetError)
from .presheaf import (FinPsh, NatTrans, empty_psh, enumerate_nats,
                       flat, flat_on_nat, global_sections, identity_nat,
                       nats_equal, sample_presheaf, terminal_psh, _key)
from .tensor import boundary_subobject


def sample_family(index: FinCat, count: int, seed: int,
                  include_extremes: bool = True) -> list[FinPsh]:
    out = []
    if include_extremes:
        out.append(terminal_psh(index))
        out.append(empty_psh(index))
    for k in range(count):
        out.append(sample_presheaf(index, seed + 31 * k))
    return out


def _result(name, ok, detail=None):
    r = {"check": name, "status": "pass" if ok else "fail"}
    if detail is not None:
        r["detail"] = detail
    return r


# -- adjunction chain -------------------------------------------------------------


def check_adjunction_chain(m: Multiplier, ambient: int, samples: int = 4,
                           seed: int = 0) -> dict:
    """Triangle identities for Sigma -| fresh -| lolli -| transp.

    Exact (no truncation caveat) whenever the element categories are not
    cut down, e.g. on finord; elsewhere the fresh/lolli triangles need
    the full category and are reported as skipped.
    """
    ch = QuantifierChain(m, ambient=ambient)
    results = []
    ps = sample_family(ch.el, samples, seed)
    qs = sample_family(ch.el_u, samples, seed + 7)
    exact = ch.el_n is ch.el and ch.exists_fun is not None

    # lolli -| transp: both triangles, available at every truncation
    for i, q in enumerate(qs):
        lq = ch.lolli(q)
        eta = ch.reindex(q)                       # q => transp(lolli q)
        l_eta = precompose_on_nat(ch.floor, eta, lq, ch.lolli(eta.tgt))
        eps = ch.unmerid(lq)                      # lolli(transp(lolli q)) => lolli q
        comp = l_eta.then(eps)
        results.append(_result(f"lolli-transp:L-triangle:q{i}",
                               nats_equal(comp, identity_nat(lq))))
    for i, p in enumerate(ps):
        tp = ch.transp(p)
        eps = ch.unmerid(p)                       # lolli(transp p) => p|n
        eta = ch.reindex(tp)                      # transp p => transp(lolli(transp p))
        r_eps = ran_on_nat(ch.floor, eps, ch.transp(ch.lolli(tp)), tp)
        comp = eta.then(r_eps)
        results.append(_result(f"lolli-transp:R-triangle:p{i}",
                               nats_equal(comp, identity_nat(tp))))

    if exact:
        # fresh -| lolli
        for i, p in enumerate(ps):
            fp = ch.fresh(p)
            eta = ch.const(p)                     # p => lolli(fresh p)
            f_eta = precompose_on_nat(ch.exists_fun, eta, fp, ch.fresh(eta.tgt))
            eps = ch.app(fp)                      # fresh(lolli(fresh p)) => fresh p
            comp = f_eta.then(eps)
            results.append(_result(f"fresh-lolli:L-triangle:p{i}",
                                   nats_equal(comp, identity_nat(fp))))
        for i, q in enumerate(qs):
            lq = ch.lolli(q)
            eps = ch.app(q)                       # fresh(lolli q) => q
            eta = ch.const(lq)                    # lolli q => lolli(fresh(lolli q))
            l_eps = precompose_on_nat(ch.floor, eps, ch.lolli(eps.src), lq)
            comp = eta.then(l_eps)
            results.append(_result(f"fresh-lolli:R-triangle:q{i}",
                                   nats_equal(comp, identity_nat(lq))))
        # sigma -| fresh
        for i, q in enumerate(qs):
            sq = ch.sigma(q)
            eta = ch.sigma_unit(q)                # q => fresh(sigma q)
            s_eta = lan_on_nat(ch.exists_fun, eta, lan(ch.exists_fun, q),
                               lan(ch.exists_fun, eta.tgt))
            eps = ch.sigma_counit(sq)             # sigma(fresh(sigma q)) => sigma q
            comp = s_eta.then(eps)
            results.append(_result(f"sigma-fresh:L-triangle:q{i}",
                                   nats_equal(comp, identity_nat(sq))))
        for i, p in enumerate(ps):
            fp = ch.fresh(p)
            eps = ch.sigma_counit(p)              # sigma(fresh p) => p
            eta = ch.sigma_unit(fp)               # fresh p => fresh(sigma(fresh p))
            f_eps = precompose_on_nat(ch.exists_fun, eps, ch.fresh(eps.src), fp)
            comp = eta.then(f_eps)
            results.append(_result(f"sigma-fresh:R-triangle:p{i}",
                                   nats_equal(comp, identity_nat(fp))))
    else:
        results.append({"check": "fresh-lolli+sigma-fresh",
                        "status": "skipped",
                        "detail": "needs the untruncated element category"})

    ok = all(r["status"] != "fail" for r in results)
    return {"theorem": "adjunction-chain", "multiplier": m.name,
            "ambient": ambient, "exact": exact, "samples": samples,
            "seed": seed, "status": "pass" if ok else "fail",
            "results": results}


# -- quantification theorem ---------------------------------------------------------


def check_quantification(m: Multiplier, ambient: int, flags: dict,
                         samples: int = 10, seed: int = 0) -> dict:
    """The three branches of the quantification theorem, gated on the
    classifier flags for this multiplier."""
    ch = QuantifierChain(m, ambient=ambient)
    results = []
    ps = sample_family(ch.el, samples, seed, include_extremes=False)

    if flags.get("cancellative") == "yes" and flags.get("affine") == "yes":
        for i, p in enumerate(ps):
            c = ch.const(p)
            results.append(_result(f"const-bijective:p{i}",
                                   not c.check_natural() and
                                   c.is_componentwise_bijection()))
            u = ch.unmerid(p)
            results.append(_result(f"unmerid-bijective:p{i}",
                                   not u.check_natural() and
                                   u.is_componentwise_bijection()))

    if flags.get("weakening") == "yes" and m.pi1 is not None:
        for i, p in enumerate(ps[:3]):
            sp = ch.spoil(p)
            results.append(_result(f"spoil-natural:p{i}", not sp.check_natural()))
        try:
            for i, p in enumerate(ps[:2]):
                co = ch.cospoil(ch.fresh(p))
                results.append(_result(f"cospoil-natural:p{i}",
                                       not co.check_natural()))
        except ResourceBudgetError as e:
            results.append({"check": "cospoil", "status": "skipped",
                            "detail": str(e)})

    if flags.get("cartesian") == "yes":
        for i, p in enumerate(ps):
            fr, wk = ch.fresh(p), ch.wkn(p)
            same = all(fr.cells(e) == wk.cells(e) for e in ch.el_u.objects)
            results.append(_result(f"fresh=wkn:p{i}", same))
        for i, p in enumerate(ps):
            try:
                co = ch.cospoil(ch.fresh(p))
                results.append(_result(
                    f"lolli=func:p{i}",
                    not co.check_natural() and co.is_componentwise_bijection()))
            except ResourceBudgetError as e:
                results.append({"check": f"lolli=func:p{i}", "status": "skipped",
                                "detail": str(e)})

    ok = all(r["status"] != "fail" for r in results)
    return {"theorem": "quantification", "multiplier": m.name,
            "ambient": ambient, "samples": samples, "seed": seed,
            "flags": {k: flags.get(k) for k in
                      ("cancellative", "affine", "weakening", "cartesian")},
            "status": "pass" if ok else "fail", "results": results}


# -- pole and boundary-iso -----------------------------------------------------------


def check_pole(m: Multiplier, ambient: int, samples: int = 10,
               seed: int = 0) -> dict:
    """On boundary cells, every transpension has exactly one section."""
    ch = QuantifierChain(m, ambient=ambient)
    bd = boundary_subobject(ch.xiu, m, ambient)
    results = []
    boundary_cells = [(v, cell) for v in ch.trunc.objects
                      for cell in bd.cells(v)]
    for i, a in enumerate(sample_family(ch.el, samples, seed)):
        ta = ch.transp(a)
        bad = [e for e in boundary_cells if len(ta.cells(e)) != 1]
        results.append(_result(
            f"pole:sample{i}", not bad,
            detail=None if not bad else ch.el_u.fmt_obj(bad[0])))
    ok = all(r["status"] == "pass" for r in results)
    return {"theorem": "pole", "multiplier": m.name, "ambient": ambient,
            "boundary_cells": len(boundary_cells), "samples": samples,
            "seed": seed, "status": "pass" if ok else "fail",
            "results": results}


def check_boundary_iso(m: Multiplier, ambient: int) -> dict:
    """(u in bd U) and transp(Empty) classify the same cells of Xi(x)yU."""
    ch = QuantifierChain(m, ambient=ambient)
    bd = boundary_subobject(ch.xiu, m, ambient)
    t_empty = ch.transp(empty_psh(ch.el))
    mism = []
    for e in ch.el_u.objects:
        v, cell = e
        in_bd = cell in bd.cells(v)
        inhab = len(t_empty.cells(e)) > 0
        if in_bd != inhab:
            mism.append({"cell": ch.el_u.fmt_obj(e), "boundary": in_bd,
                         "transp_empty_inhabited": inhab})
    return {"theorem": "boundary-iso", "multiplier": m.name,
            "ambient": ambient, "cells": len(ch.el_u.objects),
            "status": "pass" if not mism else "fail",
            "counterexamples": mism[:5]}


# -- flat and the amazing right adjoint ------------------------------------------------


def check_surd(m: Multiplier, ambient: int, samples: int = 10, seed: int = 0,
               nat_cap: int = 60_000) -> dict:
    """The amazing right adjoint: hom(lolli(wkn G), D) ~ hom(G, func(transp D))
    by explicit mutually inverse transposition, plus the kappa and zeta
    global-sections isomorphisms."""
    ch = QuantifierChain(m, ambient=ambient)
    results = []

    def surd(d):
        return ch.func(ch.transp(d))

    def lwkn(g):
        return ch.lolli(ch.wkn(g))

    rng_pairs = [(seed + 13 * k, seed + 17 * k + 5) for k in range(samples)]
    for i, (s1, s2) in enumerate(rng_pairs):
        g = sample_presheaf(ch.el, s1, generators=1, identifications=2)
        d = sample_presheaf(ch.el_n, s2, generators=1, identifications=2)
        lg = lwkn(g)
        rd = surd(d)
        try:
            down = enumerate_nats(lg, d, cap=nat_cap)
            up = enumerate_nats(restrict_psh(g, ch.el), rd, cap=nat_cap)
        except UsageError as e:
            results.append({"check": f"transpose:s{i}", "status": "skipped",
                            "detail": str(e)})
            continue
        if len(down) != len(up):
            results.append(_result(f"transpose-count:s{i}", False,
                                   {"down": len(down), "up": len(up)}))
            continue
        # transpose: h |-> func(transp h) . eta_total
        eta1 = ch.wkn_unit(g)
        wg = ch.wkn(g)
        eta2 = ch.reindex(wg)
        f_eta2 = ran_on_nat(ch.wkn_functor(), eta2, ch.func(wg),
                            ch.func(eta2.tgt))
        eta_total = eta1.then(f_eta2)
        ok = True
        seen = set()
        for h in down:
            rh = ran_on_nat(ch.wkn_functor(), ran_on_nat(ch.floor, h,
                            ch.transp(lg), ch.transp(d)),
                            ch.func(ch.transp(lg)), rd)
            k = eta_total.then(rh)
            key = tuple(sorted((repr(a), repr(x), repr(k.at(a, x)))
                               for a in g.index.objects for x in g.cells(a)))
            if key in seen:
                ok = False
                break
            seen.add(key)
            # back down: eps_total . lolli(wkn k)
            wk = precompose_on_nat(ch.wkn_functor(), k, wg, ch.wkn(rd))
            lwk = precompose_on_nat(ch.floor, wk, lg, ch.lolli(ch.wkn(rd)))
            eps1 = ch.wkn_counit(ch.transp(d))
            leps1 = precompose_on_nat(ch.floor, eps1, ch.lolli(eps1.src),
                                      ch.lolli(ch.transp(d)))
            eps_total = leps1.then(ch.unmerid(d))
            back = lwk.then(eps_total)
            if not nats_equal(back, h):
                ok = False
                break
        results.append(_result(f"transpose-bijection:s{i}", ok and len(seen) == len(down)))

    # kappa / zeta on genuinely global sections
    for i in range(3):
        p = sample_presheaf(ch.el, seed + 101 * i, generators=2, identifications=1)
        kappa = ch.kappa(p)
        results.append(_result(f"kappa:s{i}", not kappa.check_natural() and
                               kappa.is_componentwise_bijection()))
        zeta = ch.zeta(p)
        results.append(_result(f"zeta:s{i}", not zeta.check_natural() and
                               zeta.is_componentwise_bijection()))
    ok = all(r["status"] != "fail" for r in results)
    return {"theorem": "surd", "multiplier": m.name, "ambient": ambient,
            "samples": samples, "seed": seed,
            "status": "pass" if ok else "fail", "results": results}
