"""Pointwise Kan extensions along finite functors, with explicit
units/counits for lan -| precompose -| ran.

Colimits of sets are computed by union-find over zigzag generators,
limits by backtracking enumeration of compatible families. Comma
categories exceeding the configured budget raise ResourceBudgetError
naming the offending object; nothing is silently approximated.
"""

from __future__ import annotations

from ..catkit import UsageError
from .fincat import Arrow, FinCat, FunctorData
from .presheaf import FinPsh, NatTrans, _key, materialize


class ResourceBudgetError(UsageError):
    pass


def precompose(f: FunctorData, q: FinPsh, name: str | None = None) -> FinPsh:
    """(f*Q)(c) = Q(f c); restriction along a is Q(f a)."""
    if q.index is not f.cod:
        raise UsageError(f"{q.name} is not a presheaf over cod({f.name})")
    carriers = {c: q.cells(f.on_obj(c)) for c in f.dom.objects}
    return FinPsh(f.dom, carriers,
                  lambda a, x: q.restrict(f.on_arrow(a), x),
                  name=name or f"{f.name}*({q.name})")


class _UnionFind:
    def __init__(self):
        self.parent = {}

    def find(self, x):
        p = self.parent
        while p.get(x, x) != x:
            p[x] = p.get(p[x], p[x])
            x = p[x]
        return x

    def union(self, x, y):
        rx, ry = self.find(x), self.find(y)
        if rx != ry:
            lo, hi = sorted((rx, ry), key=_key)
            self.parent[hi] = lo


class LanPsh(FinPsh):
    """lan_f(P) over cod(f): pointwise coends via union-find.

    Cells at d are classes of generators (c, phi : d -> f c, x in P(c))
    modulo (c2, f(g).phi, x2) ~ (c1, phi, P(g) x2) for g : c1 -> c2.
    """

    def __init__(self, f: FunctorData, p: FinPsh, budget: int = 60_000):
        if p.index is not f.dom:
            raise UsageError(f"{p.name} is not a presheaf over dom({f.name})")
        self.f = f
        self.p = p
        d_cat, c_cat = f.cod, f.dom
        self._uf = {}
        self._canon = {}
        carriers = {}
        for d in d_cat.objects:
            gens = []
            for c in c_cat.objects:
                for phi in d_cat.hom(d, f.on_obj(c)):
                    for x in p.cells(c):
                        gens.append((c, phi, x))
            if len(gens) > budget:
                raise ResourceBudgetError(
                    f"lan comma category at {d_cat.fmt_obj(d)} has {len(gens)} "
                    f"generators (budget {budget})")
            uf = _UnionFind()
            for c1 in c_cat.objects:
                for c2 in c_cat.objects:
                    for g in c_cat.hom(c1, c2):
                        fg = f.on_arrow(g)
                        for phi1 in d_cat.hom(d, f.on_obj(c1)):
                            phi2 = d_cat.compose(fg, phi1)
                            for x2 in p.cells(c2):
                                uf.union((c2, phi2, x2),
                                         (c1, phi1, p.restrict(g, x2)))
            reps = {}
            for gen in gens:
                reps.setdefault(uf.find(gen), gen)
            self._uf[d] = uf
            self._canon[d] = reps
            carriers[d] = tuple(sorted(reps.values(), key=_key))
        super().__init__(d_cat, carriers, self._restr, name=f"lan[{f.name}]({p.name})")

    def cls(self, d, gen):
        return self._canon[d][self._uf[d].find(gen)]

    def _restr(self, a: Arrow, cell):
        # a : d' -> d in cod(f); (c, phi, x) |-> (c, phi . a, x)
        c, phi, x = cell
        return self.cls(a.dom, (c, self.f.cod.compose(phi, a), x))


class RanPsh(FinPsh):
    """ran_f(P) over cod(f): compatible families over the comma (f | d).

    A cell at d assigns to each (c, phi : f c -> d) an element of P(c),
    naturally in c; stored as a tuple parallel to the sorted comma index.
    """

    def __init__(self, f: FunctorData, p: FinPsh, budget: int = 4_000,
                 family_cap: int = 300_000):
        if p.index is not f.dom:
            raise UsageError(f"{p.name} is not a presheaf over dom({f.name})")
        self.f = f
        self.p = materialize(p)
        p = self.p
        d_cat, c_cat = f.cod, f.dom
        self._comma = {}
        self._pos = {}
        carriers = {}
        for d in d_cat.objects:
            idx = []
            for c in c_cat.objects:
                for phi in d_cat.hom(f.on_obj(c), d):
                    idx.append((c, phi))
            if len(idx) > budget:
                raise ResourceBudgetError(
                    f"ran comma category at {d_cat.fmt_obj(d)} has {len(idx)} "
                    f"objects (budget {budget})")
            idx.sort(key=_key)
            self._comma[d] = idx
            self._pos[d] = {k: i for i, k in enumerate(idx)}
            carriers[d] = tuple(self._families(d, family_cap))
        super().__init__(d_cat, carriers, self._restr, name=f"ran[{f.name}]({p.name})")

    def _constraints(self, d):
        """(i, j, g) with comma[i] = (c1, phi2 . f g) for comma[j] = (c2, phi2)."""
        idx = self._comma[d]
        pos = self._pos[d]
        out = []
        c_cat, d_cat = self.f.dom, self.f.cod
        for j, (c2, phi2) in enumerate(idx):
            for c1 in c_cat.objects:
                for g in c_cat.hom(c1, c2):
                    phi1 = d_cat.compose(phi2, self.f.on_arrow(g))
                    i = pos[(c1, phi1)]
                    out.append((i, j, g))
        return out

    def _families(self, d, cap):
        idx = self._comma[d]
        if not idx:
            return [()]
        n = len(idx)
        by_i: dict = {}   # vals[i] = P(g)(vals[j])
        det_from: dict = {}
        for (i, j, g) in self._constraints(d):
            if i == j:
                continue
            by_i.setdefault(i, []).append((j, g))
            det_from.setdefault(j, []).append((i, g))

        # connected components of the constraint graph; each is solved by
        # branching on one root and propagating, so the search tree per
        # component is linear in the candidate count
        comp = list(range(n))

        def find(x):
            while comp[x] != x:
                comp[x] = comp[comp[x]]
                x = comp[x]
            return x

        for (i, js) in by_i.items():
            for (j, _g) in js:
                ri, rj = find(i), find(j)
                if ri != rj:
                    comp[max(ri, rj)] = min(ri, rj)
        groups: dict = {}
        for k in range(n):
            groups.setdefault(find(k), []).append(k)
        ordered_groups = [sorted(g) for _r, g in sorted(groups.items())]

        def solve_component(members):
            members = list(members)
            adj: dict = {k: set() for k in members}
            for k in members:
                for (j, _g) in by_i.get(k, ()):
                    adj[k].add(j)
                    adj[j].add(k)
                for (i, _g) in det_from.get(k, ()):
                    adj[k].add(i)
                    adj[i].add(k)
            solutions = []
            vals: dict = {}

            def neighbors_ok(k):
                x = vals[k]
                for (j, g) in by_i.get(k, ()):
                    if j in vals and x != self.p.restrict(g, vals[j]):
                        return False
                for (i, g) in det_from.get(k, ()):
                    if i in vals and vals[i] != self.p.restrict(g, vals[k]):
                        return False
                return True

            def propagate(frontier):
                """Assign every position forced by the frontier; return the
                newly assigned keys or None on conflict."""
                new = []
                stack = list(frontier)
                while stack:
                    j = stack.pop()
                    for (i, g) in det_from.get(j, ()):
                        x = self.p.restrict(g, vals[j])
                        if i in vals:
                            if vals[i] != x:
                                for k in new:
                                    del vals[k]
                                return None
                        else:
                            vals[i] = x
                            if not neighbors_ok(i):
                                for k in new + [i]:
                                    del vals[k]
                                return None
                            new.append(i)
                            stack.append(i)
                return new

            def rec():
                undet = [k for k in members if k not in vals]
                if not undet:
                    solutions.append({k: vals[k] for k in members})
                    return
                # branch next to determined positions so constraints bind early
                k = next((u for u in undet if any(n in vals for n in adj[u])),
                         undet[0])
                for x in self.p.cells(idx[k][0]):
                    vals[k] = x
                    if neighbors_ok(k):
                        new = propagate([k])
                        if new is not None:
                            rec()
                            for kk in new:
                                del vals[kk]
                    del vals[k]

            rec()
            return solutions

        per_group = []
        total = 1
        for g in ordered_groups:
            sols = solve_component(g)
            if not sols:
                return []
            per_group.append((g, sols))
            total *= len(sols)
            if total > cap:
                raise ResourceBudgetError(
                    f"ran family count at {self.f.cod.fmt_obj(d)} exceeds {cap}")

        out = []

        def assemble(gi, acc):
            if gi == len(per_group):
                out.append(tuple(acc[k] for k in range(n)))
                return
            g, sols = per_group[gi]
            for sol in sols:
                acc.update(sol)
                assemble(gi + 1, acc)

        assemble(0, {})
        return sorted(out, key=_key)

    def value(self, d, family, c, phi):
        return family[self._pos[d][(c, phi)]]

    def make_family(self, d, assign) -> tuple:
        return tuple(assign(c, phi) for (c, phi) in self._comma[d])

    def _restr(self, a: Arrow, family):
        # a : d' -> d; family' at (c, phi : f c -> d') is family at (c, a . phi)
        d_cat = self.f.cod
        return self.make_family(
            a.dom, lambda c, phi: self.value(a.cod, family, c,
                                             d_cat.compose(a, phi)))


def lan(f: FunctorData, p: FinPsh, budget: int = 60_000) -> LanPsh:
    return LanPsh(f, p, budget)


def ran(f: FunctorData, p: FinPsh, budget: int = 4_000) -> RanPsh:
    return RanPsh(f, p, budget)


# -- units and counits ---------------------------------------------------------


def lan_unit(f: FunctorData, p: FinPsh, lp: LanPsh) -> NatTrans:
    """p => f*(lan_f p), x at c |-> [(c, id_{fc}, x)]."""
    fstar = precompose(f, lp)
    comps = {c: {x: lp.cls(f.on_obj(c), (c, f.cod.identity(f.on_obj(c)), x))
                 for x in p.cells(c)} for c in f.dom.objects}
    return NatTrans(p, fstar, comps, "lan-unit")


def lan_counit(f: FunctorData, q: FinPsh, lq: LanPsh) -> NatTrans:
    """lan_f(f*q) => q, [(c, phi, y)] |-> q(phi)(y)."""
    comps = {}
    for d in f.cod.objects:
        comps[d] = {}
        for cell in lq.cells(d):
            c, phi, y = cell
            comps[d][cell] = q.restrict(phi, y)
    return NatTrans(lq, q, comps, "lan-counit")


def ran_unit(f: FunctorData, q: FinPsh, rq: RanPsh) -> NatTrans:
    """q => ran_f(f*q), y at d |-> family (c, phi) -> q(phi)(y)."""
    comps = {}
    for d in f.cod.objects:
        comps[d] = {y: rq.make_family(d, lambda c, phi: q.restrict(phi, y))
                    for y in q.cells(d)}
    return NatTrans(q, rq, comps, "ran-unit")


def ran_counit(f: FunctorData, p: FinPsh, rp: RanPsh) -> NatTrans:
    """f*(ran_f p) => p, family at c |-> family(c, id_{fc})."""
    fstar = precompose(f, rp)
    comps = {c: {fam: rp.value(f.on_obj(c), fam, c,
                               f.cod.identity(f.on_obj(c)))
                 for fam in fstar.cells(c)} for c in f.dom.objects}
    return NatTrans(fstar, p, comps, "ran-counit")


def lan_on_nat(f: FunctorData, alpha: NatTrans, lsrc: LanPsh, ltgt: LanPsh) -> NatTrans:
    comps = {}
    for d in f.cod.objects:
        comps[d] = {}
        for cell in lsrc.cells(d):
            c, phi, x = cell
            comps[d][cell] = ltgt.cls(d, (c, phi, alpha.at(c, x)))
    return NatTrans(lsrc, ltgt, comps, f"lan({alpha.name})")


def ran_on_nat(f: FunctorData, alpha: NatTrans, rsrc: RanPsh, rtgt: RanPsh) -> NatTrans:
    comps = {}
    for d in f.cod.objects:
        comps[d] = {}
        for fam in rsrc.cells(d):
            comps[d][fam] = rtgt.make_family(
                d, lambda c, phi: alpha.at(c, rsrc.value(d, fam, c, phi)))
    return NatTrans(rsrc, rtgt, comps, f"ran({alpha.name})")


def precompose_on_nat(f: FunctorData, alpha: NatTrans,
                      psrc: FinPsh, ptgt: FinPsh) -> NatTrans:
    comps = {c: {x: alpha.at(f.on_obj(c), x) for x in psrc.cells(c)}
             for c in f.dom.objects}
    return NatTrans(psrc, ptgt, comps, f"{f.name}*({alpha.name})")
