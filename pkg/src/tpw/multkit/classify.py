"""The multiplier property classifier: one Fig.-7-style row per multiplier.

Verdicts are bound-relative where the defining quantifier ranges over
the whole (usually infinite) base category: `exact=False` marks a
certification only up to the enumeration bound. Every verdict carries a
witness or counterexample.
"""

from __future__ import annotations

from ..catkit import MorNF, ObjId, UsageError
from .multiplier import Multiplier, SliceObj

PROPERTIES = ("spooky", "weakening", "exchange", "contraction", "cartesian",
              "cancellative", "affine", "connection_free", "quantifiable")


def yes(exact=False, **kw):
    return {"verdict": "yes", "exact": exact, **kw}


def no(exact=False, **kw):
    return {"verdict": "no", "exact": exact, **kw}




class Classifier:
    def __init__(self, m: Multiplier, bound: int,
                 hom_budget: int = 40_000, pair_budget: int = 400_000):
        self.m = m
        self.base = m.base
        self.bound = bound
        self.hom_budget = hom_budget
        self.pair_budget = pair_budget
        self.objs = self.base.objects_up_to(bound)
        self._hom_cache: dict = {}
        self._pi1_cands: dict = {}

    # -- helpers --------------------------------------------------------------

    def hom(self, v, w):
        key = (v, w)
        if key not in self._hom_cache:
            self._hom_cache[key] = self.base.hom(v, w)
        return self._hom_cache[key]

    def fmt(self, f: MorNF) -> str:
        return self.base.format_mor(f)

    def enumerated_morphisms(self):
        for v in self.objs:
            for w in self.objs:
                yield from self.hom(v, w)

    def pi1_candidates(self, w: ObjId) -> list[MorNF]:
        """First-projection candidates at one object: components of the
        canonical natural family when the presentation has one, otherwise
        all c : W(x)U -> W jointly monic with π₂ (tested over enumerated
        parallel pairs)."""
        if w in self._pi1_cands:
            return self._pi1_cands[w]
        m = self.m
        if m.pi1 is not None:
            out = [m.pi1(w)]
        else:
            fw = m.on_obj(w)
            p2 = m.proj2(w)
            out = []
            try:
                cands = self.base.hom(fw, w)
            except UsageError:
                cands = ()
            for c in cands:
                monic = True
                for x in self.objs:
                    hx = self.base.hom(x, fw)
                    if len(hx) ** 2 > self.pair_budget:
                        continue
                    seen = {}
                    for g in hx:
                        key = (self.base.compose(c, g), self.base.compose(p2, g))
                        if key in seen and seen[key] != g:
                            monic = False
                            break
                        seen[key] = g
                    if not monic:
                        break
                if monic:
                    out.append(c)
        self._pi1_cands[w] = out
        return out

    def _natural_family(self, domain_fn, constraint_fn):
        """Backtracking search for a family (x_w)_w, one per enumerated
        object, satisfying binary naturality constraints."""
        objs = self.objs
        assignment: dict = {}

        def consistent(idx):
            w = objs[idx]
            for j in range(idx + 1):
                v = objs[j]
                if not constraint_fn(assignment, v, w) or not constraint_fn(assignment, w, v):
                    return False
            return True

        def rec(idx):
            if idx == len(objs):
                return dict(assignment)
            w = objs[idx]
            for cand in domain_fn(w):
                assignment[w] = cand
                if consistent(idx):
                    res = rec(idx + 1)
                    if res is not None:
                        return res
                del assignment[w]
            return None

        return rec(0)

    # -- spooky ---------------------------------------------------------------

    def is_spooky(self):
        r = self.base.is_spooky(self.bound)
        if r["verdict"] == "yes":
            return yes(exact=True, witness=r["witness"])
        return no(bound=self.bound)

    # -- semicartesian / weakening ---------------------------------------------

    def is_semicartesian(self):
        m = self.m
        if m.pi1 is not None:
            bad = self._pi1_naturality_counterexample(m.pi1)
            if bad is None:
                return yes(witness="canonical natural first projection",
                           bound=self.bound)
            return no(counterexample=self.fmt(bad), note="canonical pi1 not natural")
        # search for a natural family
        fam = self._natural_family(
            lambda w: self.base.hom(m.on_obj(w), w),
            self._pi1_constraint)
        if fam is not None:
            return yes(witness={repr(w): self.fmt(c) for w, c in fam.items()},
                       bound=self.bound, method="natural")
        # pointwise fallback: per-object first projections jointly monic with π₂
        missing = [w for w in self.objs if not self.pi1_candidates(w)]
        if not missing:
            return yes(bound=self.bound, method="pointwise",
                       note="no natural family; jointly monic projections "
                            "exist at every enumerated object")
        return no(counterexample=repr(missing[0]), bound=self.bound,
                  note="no first projection jointly monic with the second")

    def _pi1_constraint(self, assignment, v, w):
        if v not in assignment or w not in assignment:
            return True
        xv, xw = assignment[v], assignment[w]
        for f in self.hom(v, w):
            if self.base.compose(xw, self.m.on_mor(f)) != self.base.compose(f, xv):
                return False
        return True

    def _pi1_naturality_counterexample(self, pi1):
        for v in self.objs:
            for w in self.objs:
                for f in self.hom(v, w):
                    if self.base.compose(pi1(w), self.m.on_mor(f)) != \
                            self.base.compose(f, pi1(v)):
                        return f
        return None

    # -- cartesian -------------------------------------------------------------

    def is_cartesian(self):
        m = self.m
        if m.pairing is not None and m.pi1 is not None:
            skipped = []
            for w in self.objs:
                fw = m.on_obj(w)
                p1, p2 = m.pi1(w), m.proj2(w)
                for x in self.objs:
                    fs, gs = self.hom(x, w), self.hom(x, m.U)
                    if len(fs) * len(gs) > self.hom_budget:
                        skipped.append((repr(x), repr(w)))
                        continue
                    for f in fs:
                        for g in gs:
                            h = m.pairing(f, g)
                            if self.base.compose(p1, h) != f or \
                                    self.base.compose(p2, h) != g:
                                return no(counterexample={"f": self.fmt(f),
                                                          "g": self.fmt(g)})
                    try:
                        hx = self.base.hom(x, fw)
                    except UsageError:
                        skipped.append((repr(x), repr(fw)))
                        continue
                    if len(hx) > self.hom_budget:
                        skipped.append((repr(x), repr(fw)))
                        continue
                    seen = {}
                    for h in hx:
                        key = (self.base.compose(p1, h), self.base.compose(p2, h))
                        if key in seen:
                            return no(counterexample={"h1": self.fmt(seen[key]),
                                                      "h2": self.fmt(h)},
                                      note="pairing not unique")
                        seen[key] = h
            out = yes(witness="canonical product structure", bound=self.bound)
            if skipped:
                out["note"] = f"{len(skipped)} oversized hom-sets skipped"
            return out
        # no canonical product: a natural first projection making every
        # (W(x)U, π₁, π₂) a product would be required
        fam = self._natural_family(
            lambda w: [c for c in self._product_pi1s(w)],
            self._pi1_constraint)
        if fam is not None:
            return yes(witness={repr(w): self.fmt(c) for w, c in fam.items()},
                       bound=self.bound)
        return no(bound=self.bound,
                  note="no natural first projection with the product property")

    def _product_pi1s(self, w):
        """Candidates c at w such that (F(w), c, π₂) is a product cone."""
        m = self.m
        fw = m.on_obj(w)
        p2 = m.proj2(w)
        try:
            cands = self.base.hom(fw, w)
        except UsageError:
            return []
        out = []
        for c in cands:
            ok = True
            for x in self.objs:
                hx = self.base.hom(x, fw)
                pairs = {}
                for h in hx:
                    key = (self.base.compose(c, h), self.base.compose(p2, h))
                    if key in pairs:
                        ok = False
                        break
                    pairs[key] = h
                if not ok:
                    break
                for f in self.hom(x, w):
                    for g in self.hom(x, m.U):
                        if (f, g) not in pairs:
                            ok = False
                            break
                    if not ok:
                        break
                if not ok:
                    break
            if ok:
                out.append(c)
        return out

    # -- cancellative ----------------------------------------------------------

    def is_cancellative(self):
        m = self.m
        skipped = 0
        for v in self.objs:
            for w in self.objs:
                fs = self.hom(v, w)
                if len(fs) > self.pair_budget:
                    skipped += 1
                    continue
                seen = {}
                for f in fs:
                    key = m.on_mor(f)
                    if key in seen:
                        return no(counterexample={"f": self.fmt(seen[key]),
                                                  "g": self.fmt(f)},
                                  note="distinct maps collapse under -(x)U")
                    seen[key] = f
        out = yes(bound=self.bound)
        if skipped:
            out["note"] = f"{skipped} oversized hom-sets skipped"
        return out

    # -- affine (fullness of the fresh weakening) -------------------------------

    def is_affine(self):
        m = self.m
        skipped = 0
        for v in self.objs:
            for w in self.objs:
                fv, fw = m.on_obj(v), m.on_obj(w)
                try:
                    hs = self.base.hom(fv, fw)
                except UsageError:
                    skipped += 1
                    continue
                if len(hs) > self.pair_budget:
                    skipped += 1
                    continue
                image = {m.on_mor(f) for f in self.hom(v, w)}
                p2v, p2w = m.proj2(v), m.proj2(w)
                for h in hs:
                    if self.base.compose(p2w, h) == p2v and h not in image:
                        return no(counterexample=self.fmt(h),
                                  note="slice morphism not of the form f(x)U")
        out = yes(bound=self.bound)
        if skipped:
            out["note"] = f"{skipped} oversized hom-sets skipped"
        return out

    # -- connection-free ---------------------------------------------------------

    def is_connection_free(self):
        m = self.m
        for v in self.objs:
            for psi in self.hom(v, m.U):
                if m.is_dim_split(psi, self.bound)["verdict"] != "yes":
                    continue
                found = False
                for w in self.objs:
                    fw = m.on_obj(w)
                    p2 = m.proj2(w)
                    for h in self.base.isos(v, fw):
                        if self.base.compose(p2, h) == psi:
                            found = True
                            break
                    if found:
                        break
                if not found:
                    return no(counterexample={"object": repr(v),
                                              "psi": self.fmt(psi)},
                              note="dimensionally split slice object outside "
                                   "the essential image")
        return yes(bound=self.bound)

    # -- exchange / contraction ---------------------------------------------------

    def _exchange_conditions(self, w, s) -> bool:
        m = self.m
        fw = m.on_obj(w)
        outer = m.proj2(fw)
        for c in self.pi1_candidates(fw):
            inner = self.base.compose(m.proj2(w), c)
            if self.base.compose(outer, s) == inner and \
                    self.base.compose(inner, s) == outer:
                return True
        return False

    def has_exchange(self):
        m = self.m
        if m.swap is not None:
            bad = self._family_naturality_counterexample(
                m.swap, lambda f: m.on_mor(m.on_mor(f)),
                lambda f: m.on_mor(m.on_mor(f)))
            if bad is None and all(
                    self.base.compose(m.swap(w), m.swap(w)) ==
                    self.base.identity(m.on_obj(m.on_obj(w))) and
                    self._exchange_conditions(w, m.swap(w))
                    for w in self.objs):
                return yes(witness="canonical swap", bound=self.bound)
        def domain(w):
            ffw = m.on_obj(m.on_obj(w))
            out = []
            try:
                cands = self.base.hom(ffw, ffw)
            except UsageError:
                return []
            for s in cands:
                if self.base.compose(s, s) == self.base.identity(ffw) and \
                        self._exchange_conditions(w, s):
                    out.append(s)
            return out

        def constraint(assignment, v, w):
            if v not in assignment or w not in assignment:
                return True
            sv, sw = assignment[v], assignment[w]
            for f in self.hom(v, w):
                ff = m.on_mor(m.on_mor(f))
                if self.base.compose(sw, ff) != self.base.compose(ff, sv):
                    return False
            return True

        fam = self._natural_family(domain, constraint)
        if fam is not None:
            return yes(witness={repr(w): self.fmt(s) for w, s in fam.items()},
                       bound=self.bound)
        return no(bound=self.bound,
                  note="no natural involution swapping the two projections")

    def _contraction_conditions(self, w, d) -> bool:
        m = self.m
        fw = m.on_obj(w)
        idf = self.base.identity(fw)
        ok_outer = any(self.base.compose(c, d) == idf
                       for c in self.pi1_candidates(fw))
        ok_inner = any(self.base.compose(m.on_mor(c), d) == idf
                       for c in self.pi1_candidates(w))
        return ok_outer and ok_inner

    def has_contraction(self):
        m = self.m
        if m.diag is not None:
            bad = self._family_naturality_counterexample(
                m.diag, m.on_mor, lambda f: m.on_mor(m.on_mor(f)))
            if bad is None and all(self._contraction_conditions(w, m.diag(w))
                                   for w in self.objs):
                return yes(witness="canonical diagonal", bound=self.bound)
        def domain(w):
            fw, ffw = m.on_obj(w), m.on_obj(m.on_obj(w))
            try:
                cands = self.base.hom(fw, ffw)
            except UsageError:
                return []
            return [d for d in cands if self._contraction_conditions(w, d)]

        def constraint(assignment, v, w):
            if v not in assignment or w not in assignment:
                return True
            dv, dw = assignment[v], assignment[w]
            for f in self.hom(v, w):
                if self.base.compose(dw, m.on_mor(f)) != \
                        self.base.compose(m.on_mor(m.on_mor(f)), dv):
                    return False
            return True

        fam = self._natural_family(domain, constraint)
        if fam is not None:
            return yes(witness={repr(w): self.fmt(d) for w, d in fam.items()},
                       bound=self.bound)
        return no(bound=self.bound,
                  note="no natural copy map split by both projections")

    def _family_naturality_counterexample(self, family, lift_dom, lift_cod):
        for v in self.objs:
            for w in self.objs:
                for f in self.hom(v, w):
                    if self.base.compose(family(w), lift_dom(f)) != \
                            self.base.compose(lift_cod(f), family(v)):
                        return f
        return None

    # -- quantifiable ---------------------------------------------------------------

    def verify_quantifiable(self, impl=None, slice_cap: int = 48,
                            hom_cap: int = 2500):
        m = self.m
        impl = impl or m.exists
        if impl is None:
            return no(note="no quantifier implementation shipped")
        if impl.cat and impl.cat != self.base.name:
            raise UsageError(
                f"quantifier implementation for {impl.cat!r} used on {self.base.name!r}")
        skipped = []
        slices = []
        for v in self.objs:
            for psi in self.hom(v, m.U):
                s = SliceObj(v, psi)
                try:
                    impl.on_obj(s)
                except UsageError as e:
                    skipped.append(str(e))
                    continue
                slices.append(s)

        def slice_homs_capped(a, b):
            hs = self.hom(a.obj, b.obj)
            if len(hs) > hom_cap:
                raise UsageError(f"hom cap at {a.obj!r} -> {b.obj!r}")
            return tuple(h for h in hs
                         if self.base.compose(b.psi, h) == a.psi)

        # functoriality on identities and composable slice morphism pairs;
        # the composition scan runs over a deterministic prefix of slices
        for s in slices:
            e = impl.on_obj(s)
            if impl.on_mor(s, s, self.base.identity(s.obj)) != self.base.identity(e):
                return no(counterexample=repr(s.obj), note="∃ breaks identities")
        fun_slices = slices[:slice_cap]
        if len(slices) > slice_cap:
            skipped.append(f"composition scan capped at {slice_cap} slice objects")
        for a in fun_slices:
            for b in fun_slices:
                try:
                    hab = slice_homs_capped(a, b)
                except UsageError as exc:
                    skipped.append(str(exc))
                    continue
                if not hab:
                    continue
                for c in fun_slices:
                    try:
                        hbc = slice_homs_capped(b, c)
                    except UsageError as exc:
                        skipped.append(str(exc))
                        continue
                    for g in hbc:
                        for f in hab:
                            lhs = impl.on_mor(a, c, self.base.compose(g, f))
                            rhs = self.base.compose(impl.on_mor(b, c, g),
                                                    impl.on_mor(a, b, f))
                            if lhs != rhs:
                                return no(counterexample={"f": self.fmt(f),
                                                          "g": self.fmt(g)},
                                          note="∃ breaks composition")
        # the adjunction bijection hom(∃(V,ψ), W) ≅ slice((V,ψ), ⌊U⌋W)
        for s in slices:
            e = impl.on_obj(s)
            eta = impl.unit(s)
            for w in self.objs:
                fw = m.on_obj(w)
                target = SliceObj(fw, m.proj2(w))
                try:
                    down = self.hom(e, w)
                    if len(down) > hom_cap:
                        raise UsageError(f"hom cap at {e!r} -> {w!r}")
                    up = slice_homs_capped(s, target)
                except UsageError as exc:
                    skipped.append(str(exc))
                    continue
                if len(down) != len(up):
                    return no(counterexample={"slice": repr(s.obj),
                                              "w": repr(w),
                                              "hom": len(down), "slice_homs": len(up)})
                eps = impl.counit(w)
                for g in down:
                    t = self.base.compose(m.on_mor(g), eta)
                    if self.base.compose(m.proj2(w), t) != s.psi:
                        return no(counterexample=self.fmt(g),
                                  note="transpose is not a slice morphism")
                    back = self.base.compose(eps, impl.on_mor(s, target, t))
                    if back != g:
                        return no(counterexample=self.fmt(g),
                                  note="transposition not inverse")
                for h in up:
                    g = self.base.compose(eps, impl.on_mor(s, target, h))
                    t = self.base.compose(m.on_mor(g), eta)
                    if t != h:
                        return no(counterexample=self.fmt(h),
                                  note="transposition not inverse")
        out = yes(bound=self.bound)
        if skipped:
            out["note"] = f"skipped: {sorted(set(skipped))[:3]}"
        return out

    # -- the row ---------------------------------------------------------------------

    def classify(self) -> dict:
        row = {
            "spooky": self.is_spooky(),
            "weakening": self.is_semicartesian(),
            "exchange": self.has_exchange(),
            "contraction": self.has_contraction(),
            "cartesian": self.is_cartesian(),
            "cancellative": self.is_cancellative(),
            "affine": self.is_affine(),
            "connection_free": self.is_connection_free(),
            "quantifiable": self.verify_quantifiable(),
        }
        if row["affine"]["verdict"] == "yes" and row["cartesian"]["verdict"] == "yes":
            if any(self.m.on_obj(w) != w for w in self.objs):
                raise AssertionError(
                    "classifier inconsistency: affine and cartesian multiplier "
                    "that is not the identity")
        return {"category": self.base.name, "multiplier": self.m.name,
                "bound": self.bound, "properties": row}


def classify(m: Multiplier, bound: int, **kw) -> dict:
    return Classifier(m, bound, **kw).classify()
