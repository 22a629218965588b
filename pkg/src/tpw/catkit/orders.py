"""Order-shaped presentations: finite ordinals, simplices, twisted cubes."""

from __future__ import annotations

from functools import lru_cache
from itertools import product

from .core import BaseCategory, MorNF, ObjId, UsageError

LE = ("le",)


class FinOrd(BaseCategory):
    """The poset n = {0 <= 1 <= ... <= n-1}; genuinely finite, so the
    enumeration ignores the bound. The terminal object is n-1."""

    def __init__(self, n: int):
        if n < 1:
            raise UsageError("finord needs n >= 1")
        self.n = n
        self.name = f"finord({n})"

    def obj(self, k: int) -> ObjId:
        if not 0 <= k < self.n:
            raise UsageError(f"{k} outside finord({self.n})")
        return ObjId(self.name, k)

    def obj_size(self, v: ObjId) -> int:
        return 0  # finord is genuinely finite; every object is enumerated

    def objects_up_to(self, bound: int) -> list[ObjId]:
        return [self.obj(k) for k in range(self.n)]

    def terminal(self) -> ObjId:
        return self.obj(self.n - 1)

    def identity(self, v: ObjId) -> MorNF:
        return MorNF(v, v, LE)

    def compose_payload(self, g: MorNF, f: MorNF):
        return LE

    def hom(self, v: ObjId, w: ObjId) -> tuple[MorNF, ...]:
        self.check_obj(v)
        self.check_obj(w)
        if v.payload <= w.payload:
            return (MorNF(v, w, LE),)
        return ()


class Simplex(BaseCategory):
    """Nonempty finite linear orders with monotone maps (skeletal).

    Objects are sizes s >= 1; a morphism payload is the tuple of images.
    """

    def __init__(self):
        self.name = "simplex"

    def obj(self, size: int) -> ObjId:
        if size < 1:
            raise UsageError("simplex objects are nonempty orders")
        return ObjId(self.name, size)

    def size(self, v: ObjId) -> int:
        return v.payload

    def obj_size(self, v: ObjId) -> int:
        return v.payload

    def objects_up_to(self, bound: int) -> list[ObjId]:
        return [self.obj(s) for s in range(1, max(bound, 1) + 1)]

    def terminal(self) -> ObjId:
        return self.obj(1)

    def identity(self, v: ObjId) -> MorNF:
        return MorNF(v, v, tuple(range(self.size(v))))

    def compose_payload(self, g: MorNF, f: MorNF):
        return tuple(g.payload[y] for y in f.payload)

    def hom(self, v: ObjId, w: ObjId) -> tuple[MorNF, ...]:
        self.check_obj(v)
        self.check_obj(w)
        sv, sw = self.size(v), self.size(w)
        out = []

        def rec(prefix, lo):
            if len(prefix) == sv:
                out.append(MorNF(v, w, tuple(prefix)))
                return
            for y in range(lo, sw):
                prefix.append(y)
                rec(prefix, y)
                prefix.pop()

        rec([], 0)
        return tuple(out)


def _opf(values: tuple, size_dom: int, size_cod: int) -> tuple:
    return tuple(size_cod - 1 - values[size_dom - 1 - x] for x in range(size_dom))


@lru_cache(maxsize=None)
def _twisted_hom(m: int, n: int) -> tuple:
    """Monotone functions T_m -> T_n generated by the twisted grammar,
    deduplicated as functions. T_k is the chain of size 2^k."""
    sm = 1 << m
    if n == 0:
        return ((0,) * sm,)
    half = 1 << (n - 1)
    out = set()
    for phi in _twisted_hom(m, n - 1):
        out.add(_opf(phi, sm, half))                      # (phi, 0): into W^op
        out.add(tuple(half + y for y in phi))             # (phi, 1): into W
    if m >= 1:
        sh = 1 << (m - 1)
        for phi in _twisted_hom(m - 1, n - 1):
            left = _opf(phi, sh, half)
            right = tuple(half + y for y in phi)
            out.add(left + right)                         # phi twisted-prism
    return tuple(sorted(out))


class TwistedCube(BaseCategory):
    """Twisted cubes: objects are iterated twisted prisms of the point.

    Object payload is the prism level l (a chain of size 2^l); morphisms
    are the monotone functions produced by the four grammar clauses.
    """

    def __init__(self):
        self.name = "twisted-cube"

    def obj(self, level: int) -> ObjId:
        if level < 0:
            raise UsageError("twisted level must be >= 0")
        return ObjId(self.name, level)

    def level(self, v: ObjId) -> int:
        return v.payload

    def size(self, v: ObjId) -> int:
        return 1 << v.payload

    def obj_size(self, v: ObjId) -> int:
        return 1 << v.payload

    def objects_up_to(self, bound: int) -> list[ObjId]:
        # bound caps the underlying chain size
        out, l = [], 0
        while (1 << l) <= max(bound, 1):
            out.append(self.obj(l))
            l += 1
        return out

    def terminal(self) -> ObjId:
        return self.obj(0)

    def identity(self, v: ObjId) -> MorNF:
        return MorNF(v, v, tuple(range(self.size(v))))

    def compose_payload(self, g: MorNF, f: MorNF):
        return tuple(g.payload[y] for y in f.payload)

    def hom(self, v: ObjId, w: ObjId) -> tuple[MorNF, ...]:
        self.check_obj(v)
        self.check_obj(w)
        return tuple(MorNF(v, w, p)
                     for p in _twisted_hom(self.level(v), self.level(w)))

    def op(self, f: MorNF) -> MorNF:
        """Conjugate by the order reversals; twisted homs are closed under this."""
        sd = self.size(f.dom)
        sc = self.size(f.cod)
        return MorNF(f.dom, f.cod, _opf(f.payload, sd, sc))
