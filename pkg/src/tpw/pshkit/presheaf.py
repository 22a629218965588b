"""Finite presheaves and natural transformations over a FinCat index."""

from __future__ import annotations

import random

from ..catkit import UsageError
from .fincat import Arrow, FinCat


def _key(x):
    return repr(x)


class FinPsh:
    """Finite presheaf: per-object carriers, per-arrow restriction maps.

    `carriers[a]` is a tuple of hashable cells; `restr[arrow]` maps
    cells at arrow.cod to cells at arrow.dom (contravariant).
    """

    def __init__(self, index: FinCat, carriers: dict, restr_fn, name: str = "P"):
        self.index = index
        self.carriers = {a: tuple(carriers.get(a, ())) for a in index.objects}
        self._restr_fn = restr_fn
        self._restr_cache: dict = {}
        self.name = name

    def cells(self, a) -> tuple:
        return self.carriers[a]

    def restrict(self, f: Arrow, cell):
        key = (f, cell)
        if key not in self._restr_cache:
            self._restr_cache[key] = self._restr_fn(f, cell)
        return self._restr_cache[key]

    def total_size(self) -> int:
        return sum(len(c) for c in self.carriers.values())

    def check_functorial(self) -> list:
        bad = []
        for a in self.index.objects:
            ida = self.index.identity(a)
            for x in self.cells(a):
                if self.restrict(ida, x) != x:
                    bad.append(("identity", a, x))
        for a in self.index.objects:
            for b in self.index.objects:
                for f in self.index.hom(a, b):
                    for x in self.cells(b):
                        fx = self.restrict(f, x)
                        if fx not in self.cells(a):
                            bad.append(("image", f, x))
                    for c in self.index.objects:
                        for g in self.index.hom(b, c):
                            gf = self.index.compose(g, f)
                            for x in self.cells(c):
                                if self.restrict(gf, x) != \
                                        self.restrict(f, self.restrict(g, x)):
                                    bad.append(("compose", f, g, x))
        return bad

    def to_json(self) -> dict:
        restr = {}
        for a in self.index.objects:
            for b in self.index.objects:
                for f in self.index.hom(a, b):
                    restr[self.index.fmt_arrow(f)] = [
                        [_key(x), _key(self.restrict(f, x))] for x in self.cells(b)]
        return {"index": self.index.name,
                "carriers": {self.index.fmt_obj(a): [_key(x) for x in self.cells(a)]
                             for a in self.index.objects},
                "restrictions": restr}


class NatTrans:
    def __init__(self, src: FinPsh, tgt: FinPsh, components: dict, name: str = "a"):
        self.src = src
        self.tgt = tgt
        self.components = components  # obj -> {cell -> cell}
        self.name = name

    def at(self, a, cell):
        return self.components[a][cell]

    def check_natural(self) -> list:
        bad = []
        for a in self.src.index.objects:
            for x in self.src.cells(a):
                if self.at(a, x) not in self.tgt.cells(a):
                    bad.append(("image", a, x))
        for a in self.src.index.objects:
            for b in self.src.index.objects:
                for f in self.src.index.hom(a, b):
                    for x in self.src.cells(b):
                        if self.at(a, self.src.restrict(f, x)) != \
                                self.tgt.restrict(f, self.at(b, x)):
                            bad.append((f, x))
        return bad

    def is_componentwise_bijection(self) -> bool:
        for a in self.src.index.objects:
            vals = [self.at(a, x) for x in self.src.cells(a)]
            if len(set(vals)) != len(vals) or len(vals) != len(self.tgt.cells(a)):
                return False
        return True

    def then(self, other: "NatTrans") -> "NatTrans":
        comps = {a: {x: other.at(a, self.at(a, x)) for x in self.src.cells(a)}
                 for a in self.src.index.objects}
        return NatTrans(self.src, other.tgt, comps, f"{other.name}.{self.name}")


def identity_nat(p: FinPsh) -> NatTrans:
    return NatTrans(p, p, {a: {x: x for x in p.cells(a)} for a in p.index.objects},
                    "id")


def nats_equal(s: NatTrans, t: NatTrans) -> bool:
    for a in s.src.index.objects:
        for x in s.src.cells(a):
            if s.at(a, x) != t.at(a, x):
                return False
    return True


class _TablePsh(FinPsh):
    def __init__(self, index, carriers, table, name):
        super().__init__(index, carriers, lambda f, x: table[f][x], name=name)
        self._table = table

    def restrict(self, f, cell):
        return self._table[f][cell]


def materialize(p: FinPsh) -> FinPsh:
    """Precompute all restriction maps; useful before limit-heavy passes."""
    if isinstance(p, _TablePsh):
        return p
    table = {}
    for a in p.index.objects:
        for b in p.index.objects:
            for f in p.index.hom(a, b):
                table[f] = {x: p.restrict(f, x) for x in p.cells(b)}
    return _TablePsh(p.index, dict(p.carriers), table, p.name)


def terminal_psh(c: FinCat) -> FinPsh:
    return FinPsh(c, {a: ("*",) for a in c.objects}, lambda f, x: "*", name="1")


def empty_psh(c: FinCat) -> FinPsh:
    return FinPsh(c, {}, lambda f, x: x, name="0")


def yoneda(c: FinCat, w) -> FinPsh:
    if w not in c.objects:
        raise UsageError(f"{w!r} is not an object of {c.name}")
    carriers = {a: c.hom(a, w) for a in c.objects}
    return FinPsh(c, carriers, lambda f, h: c.compose(h, f), name=f"y{w!r}")


def elements(c: FinCat, p: FinPsh) -> FinCat:
    """The category of elements: objects (a, x in P(a)); a morphism
    (a, y) -> (b, x) is an arrow f : a -> b with P(f)(x) = y."""
    objs = tuple((a, x) for a in c.objects for x in p.cells(a))

    def hom_fn(e1, e2):
        (a, y), (b, x) = e1, e2
        return tuple(Arrow(e1, e2, f) for f in c.hom(a, b)
                     if p.restrict(f, x) == y)

    def compose_fn(g, f):
        return Arrow(f.dom, g.cod, c.compose(g.tag, f.tag))

    def id_fn(e):
        return Arrow(e, e, c.identity(e[0]))

    def fmt_obj(e):
        return f"({c.fmt_obj(e[0])}, {_key(e[1])})"

    return FinCat(f"el({p.name})", objs, hom_fn, compose_fn, id_fn,
                  fmt_obj=fmt_obj,
                  fmt_arrow=lambda ar: f"{c.fmt_arrow(ar.tag)} @ {fmt_obj(ar.dom)}->{fmt_obj(ar.cod)}")


def projection_functor(c: FinCat, p: FinPsh, el: FinCat):
    from .fincat import FunctorData
    return FunctorData(f"pr[{p.name}]", el, c,
                       lambda e: e[0], lambda ar: ar.tag)


def coproduct_of_representables(c: FinCat, picks: list) -> FinPsh:
    carriers = {a: tuple((i, h) for i, w in enumerate(picks)
                         for h in c.hom(a, w)) for a in c.objects}

    def restr(f, cell):
        i, h = cell
        return (i, c.compose(h, f))

    return FinPsh(c, carriers, restr, name=f"copr{len(picks)}")


def quotient(p: FinPsh, pairs: list) -> FinPsh:
    """Quotient a presheaf by identifications, closed under restriction."""
    parent: dict = {}

    def find(x):
        while parent.get(x, x) != x:
            parent[x] = parent.get(parent[x], parent[x])
            x = parent[x]
        return x

    def union(x, y):
        rx, ry = find(x), find(y)
        if rx != ry:
            lo, hi = sorted((rx, ry), key=_key)
            parent[hi] = lo
            return True
        return False

    work = list(pairs)
    while work:
        (a, x, y) = work.pop()
        if union((a, x), (a, y)):
            for b in p.index.objects:
                for f in p.index.hom(b, a):
                    work.append((b, p.restrict(f, x), p.restrict(f, y)))

    reps: dict = {}
    for a in p.index.objects:
        seen = {}
        for x in p.cells(a):
            r = find((a, x))
            seen.setdefault(r, x)
        reps[a] = seen

    def canon(a, x):
        return reps[a][find((a, x))]

    carriers = {a: tuple(sorted(set(canon(a, x) for x in p.cells(a)), key=_key))
                for a in p.index.objects}

    def restr(f, cell):
        return canon(f.dom, p.restrict(f, cell))

    return FinPsh(p.index, carriers, restr, name=f"{p.name}/~")


def sample_presheaf(c: FinCat, seed: int, generators: int = 2,
                    identifications: int = 2, name: str | None = None) -> FinPsh:
    """Seeded finite colimit of representables: functorial by construction."""
    rng = random.Random(seed)
    objs = sorted(c.objects, key=_key)
    picks = [rng.choice(objs) for _ in range(max(1, generators))]
    p = coproduct_of_representables(c, picks)
    pairs = []
    for _ in range(identifications):
        a = rng.choice(objs)
        cells = p.cells(a)
        if len(cells) >= 2:
            x, y = rng.sample(list(cells), 2)
            pairs.append((a, x, y))
    q = quotient(p, pairs)
    q.name = name or f"sample{seed}"
    return q


def enumerate_nats(p: FinPsh, q: FinPsh, cap: int = 200_000) -> list[NatTrans]:
    """All natural transformations p => q by backtracking with naturality
    constraints; raises UsageError if the search space exceeds `cap`."""
    objs = list(p.index.objects)
    space = 1
    for a in objs:
        na, nb = len(p.cells(a)), len(q.cells(a))
        space *= max(1, nb ** na)
        if space > cap:
            raise UsageError(f"natural transformation search exceeds cap at {a!r}")
    out = []
    comps: dict = {}

    def consistent(idx):
        b = objs[idx]
        for j in range(idx + 1):
            a = objs[j]
            for f in p.index.hom(a, b):
                for x in p.cells(b):
                    if comps[a][p.restrict(f, x)] != q.restrict(f, comps[b][x]):
                        return False
            if a != b:
                for f in p.index.hom(b, a):
                    for x in p.cells(a):
                        if comps[b][p.restrict(f, x)] != q.restrict(f, comps[a][x]):
                            return False
        return True

    def rec(idx):
        if idx == len(objs):
            out.append(NatTrans(p, q, {a: dict(m) for a, m in comps.items()}))
            return
        a = objs[idx]
        cells = p.cells(a)
        targets = q.cells(a)
        if not cells:
            comps[a] = {}
            if consistent(idx):
                rec(idx + 1)
            del comps[a]
            return

        def assign(k, m):
            if k == len(cells):
                comps[a] = m
                if consistent(idx):
                    rec(idx + 1)
                del comps[a]
                return
            for t in targets:
                m[cells[k]] = t
                assign(k + 1, m)
            if cells[k] in m:
                del m[cells[k]]

        assign(0, {})

    rec(0)
    return out


def product_psh(p: FinPsh, q: FinPsh) -> FinPsh:
    carriers = {a: tuple((x, y) for x in p.cells(a) for y in q.cells(a))
                for a in p.index.objects}

    def restr(f, cell):
        x, y = cell
        return (p.restrict(f, x), q.restrict(f, y))

    return FinPsh(p.index, carriers, restr, name=f"{p.name}x{q.name}")


def global_sections(p: FinPsh) -> tuple:
    """Compatible families over every object: the limit of p."""
    objs = list(p.index.objects)
    out = []
    vals = {}

    def ok(a):
        for b in objs:
            if b not in vals:
                continue
            for f in p.index.hom(a, b):
                if vals[a] != p.restrict(f, vals[b]):
                    return False
            for f in p.index.hom(b, a):
                if vals[b] != p.restrict(f, vals[a]):
                    return False
        return True

    def rec(k):
        if k == len(objs):
            out.append(tuple(vals[a] for a in objs))
            return
        a = objs[k]
        cells = p.cells(a)
        if not cells:
            return
        for x in cells:
            vals[a] = x
            if ok(a):
                rec(k + 1)
            del vals[a]

    rec(0)
    return tuple(sorted(out, key=_key))


def flat(p: FinPsh) -> FinPsh:
    """Constant presheaf on the global sections (truncation-relative)."""
    secs = global_sections(p)
    return FinPsh(p.index, {a: secs for a in p.index.objects},
                  lambda f, s: s, name=f"flat({p.name})")


def flat_on_nat(alpha: NatTrans) -> NatTrans:
    fsrc, ftgt = flat(alpha.src), flat(alpha.tgt)
    objs = list(alpha.src.index.objects)

    def push(sec):
        return tuple(alpha.at(a, x) for a, x in zip(objs, sec))

    comps = {a: {s: push(s) for s in fsrc.cells(a)} for a in objs}
    return NatTrans(fsrc, ftgt, comps, f"flat({alpha.name})")
