"""Strictification of partial isomorphisms, and the glueing/welding type
formers built from it: pullback-then-strictify and pushout-then-strictify."""

from __future__ import annotations

from ..catkit import UsageError
from .fincat import FinCat
from .presheaf import FinPsh, NatTrans, _key


class PropSieve:
    """A proposition over the index: a downward-closed set of objects
    (a subobject of the terminal presheaf)."""

    def __init__(self, index: FinCat, objects):
        self.index = index
        self.objects = frozenset(objects)
        for b in self.objects:
            for a in index.objects:
                if any(True for _ in index.hom(a, b)) and a not in self.objects:
                    raise UsageError(
                        f"proposition not downward closed: {a!r} maps into {b!r}")

    def __contains__(self, a):
        return a in self.objects

    @classmethod
    def true(cls, index: FinCat):
        return cls(index, index.objects)

    @classmethod
    def false(cls, index: FinCat):
        return cls(index, ())


def strictify(a: FinPsh, phi: PropSieve, t: FinPsh, iso: dict,
              name: str = "strict") -> FinPsh:
    """A presheaf equal to t *on the nose* over phi and isomorphic to a
    globally; iso maps a-cells to t-cells at each phi-object and must be
    a componentwise bijection natural over phi."""
    idx = a.index
    for c in phi.objects:
        m = iso[c]
        if sorted(map(_key, m.keys())) != sorted(map(_key, a.cells(c))) or \
                sorted(map(_key, m.values())) != sorted(map(_key, t.cells(c))):
            raise UsageError(f"partial iso is not bijective at {idx.fmt_obj(c)}")
    carriers = {c: (t.cells(c) if c in phi else a.cells(c))
                for c in idx.objects}

    def restr(f, x):
        if f.cod in phi:
            return t.restrict(f, x)          # phi downward closed: dom in phi
        ax = a.restrict(f, x)
        if f.dom in phi:
            return iso[f.dom][ax]            # crossing into phi goes through i
        return ax

    return FinPsh(idx, carriers, restr, name=name)


def strict_iso(a: FinPsh, phi: PropSieve, s: FinPsh, iso: dict) -> NatTrans:
    """The canonical iso a ~ strictify(a, phi, t, iso); the identity off
    phi and the given iso on it (so it literally equals iso over phi)."""
    comps = {c: ({x: iso[c][x] for x in a.cells(c)} if c in phi
                 else {x: x for x in a.cells(c)})
             for c in a.index.objects}
    return NatTrans(a, s, comps, "strict")


def pushout_along_snd(phi: PropSieve, a: FinPsh, t: FinPsh, g: dict,
                      name: str = "pushout") -> FinPsh:
    """The pushout of t <-(g)- phi x a -(snd)-> a, computed componentwise
    and presented strictly: t-cells over phi, a-cells elsewhere, with
    crossing restrictions routed through g."""
    idx = a.index

    def restr(f, x):
        if f.cod in phi:
            return t.restrict(f, x)
        ax = a.restrict(f, x)
        if f.dom in phi:
            return g[f.dom][ax]
        return ax

    carriers = {c: (t.cells(c) if c in phi else a.cells(c))
                for c in idx.objects}
    return FinPsh(idx, carriers, restr, name=name)


def weld(a: FinPsh, phi: PropSieve, t: FinPsh, g: dict,
         name: str = "weld") -> FinPsh:
    """Weld: extend t along g : a -> t given over phi. Equal to t on phi
    strictly; g must be natural over phi (checked by the functoriality
    of the result)."""
    for c in phi.objects:
        m = g[c]
        if set(map(_key, m.keys())) != set(map(_key, a.cells(c))):
            raise UsageError(f"weld map not total at {a.index.fmt_obj(c)}")
    return pushout_along_snd(phi, a, t, g, name=name)


def glue(a: FinPsh, phi: PropSieve, t: FinPsh, f: dict,
         name: str = "glue") -> FinPsh:
    """Glue: extend t along f : t -> a given over phi, by strictifying
    the pullback of a -> (phi -> a) <- (phi -> t).

    A cell over c outside phi is an a-cell together with a compatible
    family of t-cells over every phi-stage below c that f maps to its
    restrictions; over phi it is a t-cell on the nose.
    """
    idx = a.index
    comma = {}
    for c in idx.objects:
        pairs = []
        for c2 in idx.objects:
            if c2 in phi:
                for h in idx.hom(c2, c):
                    pairs.append((c2, h))
        comma[c] = sorted(pairs, key=_key)

    def families(c, x):
        pairs = comma[c]
        out = [{}]
        for (c2, h) in pairs:
            nxt = []
            want = a.restrict(h, x)
            for fam in out:
                for tc in t.cells(c2):
                    if f[c2][tc] != want:
                        continue
                    ok = True
                    for (c3, h3), t3 in fam.items():
                        for k in idx.hom(c3, c2):
                            if idx.compose(h, k) == h3 and \
                                    t.restrict(k, tc) != t3:
                                ok = False
                                break
                        for k in idx.hom(c2, c3):
                            if idx.compose(h3, k) == h and \
                                    t.restrict(k, t3) != tc:
                                ok = False
                                break
                        if not ok:
                            break
                    if ok:
                        nxt.append({**fam, (c2, h): tc})
            out = nxt
        return [tuple(sorted(fam.items(), key=_key)) for fam in out]

    carriers = {}
    for c in idx.objects:
        if c in phi:
            carriers[c] = t.cells(c)
        else:
            carriers[c] = tuple(sorted(
                ((x, fam) for x in a.cells(c) for fam in families(c, x)),
                key=_key))

    def restr(h, cell):
        if h.cod in phi:
            return t.restrict(h, cell)
        x, fam = cell
        famd = dict(fam)
        if h.dom in phi:
            return famd[(h.dom, h)]
        x2 = a.restrict(h, cell[0])
        sub = tuple(sorted((((c2, k), famd[(c2, idx.compose(h, k))])
                            for (c2, k) in comma[h.dom]), key=_key))
        return (x2, sub)

    return FinPsh(idx, carriers, restr, name=name)
