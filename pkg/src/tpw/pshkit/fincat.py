"""Materialized finite categories: truncated bases and categories of elements.

Everything downstream (presheaves, Kan extensions) works against this
one interface, so truncated base categories and element categories are
interchangeable indices.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Any, Callable

from ..catkit import BaseCategory, MorNF, UsageError


@dataclass(frozen=True, eq=False)
class Arrow:
    dom: Any
    cod: Any
    tag: Any

    def __repr__(self):
        return f"<{self.tag!r}:{self.dom!r}->{self.cod!r}>"

    def __eq__(self, other):
        if self is other:
            return True
        return isinstance(other, Arrow) and self.tag == other.tag \
            and self.dom == other.dom and self.cod == other.cod

    def __hash__(self):
        h = getattr(self, "_h", None)
        if h is None:
            h = hash((self.dom, self.cod, self.tag))
            object.__setattr__(self, "_h", h)
        return h


class FinCat:
    """A finite category with explicit object list and hom enumeration."""

    def __init__(self, name: str, objects: tuple, hom_fn, compose_fn, id_fn,
                 fmt_obj=None, fmt_arrow=None):
        self.name = name
        self.objects = tuple(objects)
        self._hom_fn = hom_fn
        self._compose_fn = compose_fn
        self._id_fn = id_fn
        self._hom_cache: dict = {}
        self._comp_cache: dict = {}
        self.fmt_obj = fmt_obj or repr
        self.fmt_arrow = fmt_arrow or repr

    def hom(self, a, b) -> tuple[Arrow, ...]:
        key = (a, b)
        if key not in self._hom_cache:
            self._hom_cache[key] = tuple(self._hom_fn(a, b))
        return self._hom_cache[key]

    def identity(self, a) -> Arrow:
        return self._id_fn(a)

    def compose(self, g: Arrow, f: Arrow) -> Arrow:
        if f.cod != g.dom:
            raise UsageError(f"cannot compose {f!r} then {g!r}")
        key = (g, f)
        if key not in self._comp_cache:
            self._comp_cache[key] = self._compose_fn(g, f)
        return self._comp_cache[key]

    def all_arrows(self):
        for a in self.objects:
            for b in self.objects:
                yield from self.hom(a, b)

    def check_laws(self) -> list:
        bad = []
        for a in self.objects:
            ida = self.identity(a)
            if ida not in self.hom(a, a):
                bad.append(("identity-missing", a))
        for f in self.all_arrows():
            if self.compose(f, self.identity(f.dom)) != f or \
                    self.compose(self.identity(f.cod), f) != f:
                bad.append(("identity", f))
        for a in self.objects:
            for b in self.objects:
                for f in self.hom(a, b):
                    for c in self.objects:
                        for g in self.hom(b, c):
                            gf = self.compose(g, f)
                            for d in self.objects:
                                for h in self.hom(c, d):
                                    if self.compose(h, gf) != \
                                            self.compose(self.compose(h, g), f):
                                        bad.append(("assoc", f, g, h))
        return bad


def truncate_base(base: BaseCategory, bound: int) -> FinCat:
    """The full subcategory of a base category on objects up to `bound`."""
    objs = tuple(base.objects_up_to(bound))

    def hom_fn(a, b):
        return tuple(Arrow(a, b, f) for f in base.hom(a, b))

    def compose_fn(g, f):
        return Arrow(f.dom, g.cod, base.compose(g.tag, f.tag))

    def id_fn(a):
        return Arrow(a, a, base.identity(a))

    return FinCat(f"{base.name}|<={bound}", objs, hom_fn, compose_fn, id_fn,
                  fmt_obj=base.format_obj,
                  fmt_arrow=lambda ar: base.format_mor(ar.tag))


class FunctorData:
    """A functor between materialized finite categories."""

    def __init__(self, name: str, dom: FinCat, cod: FinCat, on_obj, on_arrow):
        self.name = name
        self.dom = dom
        self.cod = cod
        self.on_obj: Callable = on_obj
        self.on_arrow: Callable[[Arrow], Arrow] = on_arrow

    def check_functorial(self) -> list:
        bad = []
        for a in self.dom.objects:
            if self.on_arrow(self.dom.identity(a)) != \
                    self.cod.identity(self.on_obj(a)):
                bad.append(("identity", a))
        for f in self.dom.all_arrows():
            fa = self.on_arrow(f)
            if fa.dom != self.on_obj(f.dom) or fa.cod != self.on_obj(f.cod):
                bad.append(("boundary", f))
        for a in self.dom.objects:
            for b in self.dom.objects:
                for f in self.dom.hom(a, b):
                    for c in self.dom.objects:
                        for g in self.dom.hom(b, c):
                            if self.on_arrow(self.dom.compose(g, f)) != \
                                    self.cod.compose(self.on_arrow(g),
                                                     self.on_arrow(f)):
                                bad.append(("compose", f, g))
        return bad


def identity_functor(c: FinCat) -> FunctorData:
    return FunctorData(f"id[{c.name}]", c, c, lambda a: a, lambda f: f)


def compose_functors(g: FunctorData, f: FunctorData) -> FunctorData:
    if f.cod is not g.dom and f.cod.name != g.dom.name:
        raise UsageError(f"functors {f.name} and {g.name} do not compose")
    return FunctorData(f"{g.name}.{f.name}", f.dom, g.cod,
                       lambda a: g.on_obj(f.on_obj(a)),
                       lambda ar: g.on_arrow(f.on_arrow(ar)))
