"""Cube-flavoured presentations: cartesian, affine, depth, clocks, cube-with-bottom.

Morphism payloads for all of these are assignment tuples: one entry per
codomain variable, each entry ('v', i) picking domain variable i or
('c', e) picking an endpoint constant e.
"""

from __future__ import annotations

from itertools import product

from .core import BaseCategory, MorNF, ObjId, UsageError

V = "v"
C = "c"


def subst_entry(entry, f_entries):
    """Entry of g composed with the assignment tuple of f."""
    tag, x = entry
    if tag == C:
        return entry
    return f_entries[x]


def format_assignment(payload, var_name="i") -> str:
    parts = []
    for j, (tag, x) in enumerate(payload):
        src = f"{var_name}{x}" if tag == V else str(x)
        parts.append(f"{src}/{var_name}{j}'")
    return "(" + ", ".join(parts) + ")"


class _AssignmentCube(BaseCategory):
    """Shared machinery for assignment-tuple categories over int-dim objects."""

    def format_obj(self, v: ObjId) -> str:
        return "(" + ", ".join(f"i{k}" for k in range(v.payload)) + ")"

    def format_mor(self, f: MorNF) -> str:
        return f"{format_assignment(f.payload)} : {self.format_obj(f.dom)} -> {self.format_obj(f.cod)}"

    def obj(self, n: int) -> ObjId:
        return ObjId(self.name, n)

    def dims(self, v: ObjId) -> int:
        return v.payload

    def obj_size(self, v: ObjId) -> int:
        return v.payload

    def objects_up_to(self, bound: int) -> list[ObjId]:
        return [self.obj(n) for n in range(bound + 1)]

    def terminal(self) -> ObjId:
        return self.obj(0)

    def identity(self, v: ObjId) -> MorNF:
        self.check_obj(v)
        return MorNF(v, v, tuple((V, i) for i in range(self.dims(v))))

    def compose_payload(self, g: MorNF, f: MorNF):
        return tuple(subst_entry(e, f.payload) for e in g.payload)

    def slot_options(self, v: ObjId, w: ObjId, slot: int) -> list:
        raise NotImplementedError

    def admissible(self, entries: tuple) -> bool:
        return True

    def hom(self, v: ObjId, w: ObjId) -> tuple[MorNF, ...]:
        self.check_obj(v)
        self.check_obj(w)
        opts = [self.slot_options(v, w, j) for j in range(self.dims(w))]
        out = []
        for entries in product(*opts):
            if self.admissible(entries):
                out.append(MorNF(v, w, entries))
        return tuple(out)

    def isos(self, v: ObjId, w: ObjId) -> tuple[MorNF, ...]:
        # isomorphisms are variable bijections respecting slot options
        n, m = self.dims(v), self.dims(w)
        if n != m:
            return ()
        out = []
        for h in self.hom(v, w):
            used = [e for e in h.payload if e[0] == V]
            if len(used) == m and len(set(used)) == m:
                # bijective on variables; check the inverse is admissible
                inv = [None] * n
                for j, (tag, i) in enumerate(h.payload):
                    inv[i] = (V, j)
                cand = MorNF(w, v, tuple(inv))
                if all(inv[i] in self.slot_options(w, v, i) for i in range(n)) and self.admissible(cand.payload):
                    out.append(h)
        return tuple(out)


class CartesianCube(_AssignmentCube):
    """Cartesian a-ary cubes: arbitrary assignments of variables or endpoints."""

    def __init__(self, arity: int):
        if arity < 0:
            raise UsageError("arity must be >= 0")
        self.arity = arity
        self.name = f"cartesian-cube({arity})"

    def slot_options(self, v, w, slot):
        n = self.dims(v)
        return [(V, i) for i in range(n)] + [(C, e) for e in range(self.arity)]


class AffineCube(_AssignmentCube):
    """Affine a-ary cubes: assignments injective on variables (no diagonals)."""

    def __init__(self, arity: int):
        if arity < 0:
            raise UsageError("arity must be >= 0")
        self.arity = arity
        self.name = f"affine-cube({arity})"

    def slot_options(self, v, w, slot):
        n = self.dims(v)
        return [(V, i) for i in range(n)] + [(C, e) for e in range(self.arity)]

    def admissible(self, entries):
        seen = set()
        for tag, x in entries:
            if tag == V:
                if x in seen:
                    return False
                seen.add(x)
        return True


class DepthCube(BaseCategory):
    """Depth-d cubes: dimensions typed by a degree k in 0..d.

    A codomain variable of degree l may be sent to 0, 1, or a domain
    variable of degree k >= l.
    """

    def __init__(self, depth: int):
        if depth < -1:
            raise UsageError("depth must be >= -1")
        self.depth = depth
        self.name = f"depth-cube({depth})"

    def format_obj(self, v):
        return "(" + ", ".join(f"i{k}:I_{d}" for k, d in enumerate(v.payload)) + ")"

    def format_mor(self, f):
        return f"{format_assignment(f.payload)} : {self.format_obj(f.dom)} -> {self.format_obj(f.cod)}"

    def obj(self, degrees: tuple) -> ObjId:
        if any(k < 0 or k > self.depth for k in degrees):
            raise UsageError(f"degrees {degrees} out of range 0..{self.depth}")
        return ObjId(self.name, tuple(degrees))

    def degrees(self, v: ObjId) -> tuple:
        return v.payload

    def obj_size(self, v: ObjId) -> int:
        return len(v.payload)

    def objects_up_to(self, bound: int) -> list[ObjId]:
        out = []
        for n in range(bound + 1):
            for degs in sorted(product(range(self.depth + 1), repeat=n)):
                out.append(self.obj(degs))
        return out

    def terminal(self) -> ObjId:
        return self.obj(())

    def identity(self, v: ObjId) -> MorNF:
        return MorNF(v, v, tuple((V, i) for i in range(len(v.payload))))

    def compose_payload(self, g: MorNF, f: MorNF):
        return tuple(subst_entry(e, f.payload) for e in g.payload)

    def hom(self, v: ObjId, w: ObjId) -> tuple[MorNF, ...]:
        self.check_obj(v)
        self.check_obj(w)
        dv, dw = v.payload, w.payload
        opts = []
        for l in dw:
            opts.append([(V, i) for i, k in enumerate(dv) if k >= l]
                        + [(C, 0), (C, 1)])
        return tuple(MorNF(v, w, entries) for entries in product(*opts))


class Clocks(BaseCategory):
    """Clock contexts: variables labelled by a stage bound, no endpoints.

    A codomain variable labelled l may be sent to a domain variable
    labelled k <= l. Labels are enumerated up to `max_label`.
    """

    def __init__(self, max_label: int = 2):
        if max_label < 0:
            raise UsageError("max_label must be >= 0")
        self.max_label = max_label
        self.name = f"clocks({max_label})"

    def format_obj(self, v):
        return "(" + ", ".join(f"i{k}:clk_{d}" for k, d in enumerate(v.payload)) + ")"

    def format_mor(self, f):
        return f"{format_assignment(f.payload)} : {self.format_obj(f.dom)} -> {self.format_obj(f.cod)}"

    def obj(self, labels: tuple) -> ObjId:
        if any(k < 0 for k in labels):
            raise UsageError("clock labels must be >= 0")
        return ObjId(self.name, tuple(labels))

    def obj_size(self, v: ObjId) -> int:
        return len(v.payload)

    def objects_up_to(self, bound: int) -> list[ObjId]:
        out = []
        for n in range(bound + 1):
            for labels in sorted(product(range(self.max_label + 1), repeat=n)):
                out.append(self.obj(labels))
        return out

    def terminal(self) -> ObjId:
        return self.obj(())

    def identity(self, v: ObjId) -> MorNF:
        return MorNF(v, v, tuple((V, i) for i in range(len(v.payload))))

    def compose_payload(self, g: MorNF, f: MorNF):
        return tuple(subst_entry(e, f.payload) for e in g.payload)

    def hom(self, v: ObjId, w: ObjId) -> tuple[MorNF, ...]:
        self.check_obj(v)
        self.check_obj(w)
        lv, lw = v.payload, w.payload
        opts = [[(V, i) for i, k in enumerate(lv) if k <= l] for l in lw]
        return tuple(MorNF(v, w, entries) for entries in product(*opts))


BOT = ("bot",)
FROMBOT = ("frombot",)


class CubeBot(BaseCategory):
    """Binary cartesian cubes freely extended with an initial object."""

    def __init__(self):
        self.name = "cube-bot"
        self._cubes = CartesianCube(2)

    def format_obj(self, v: ObjId) -> str:
        if self.is_bot(v):
            return "bot"
        return "(" + ", ".join(f"i{k}" for k in range(self.dims(v))) + ")"

    def format_mor(self, f: MorNF) -> str:
        body = "!" if f.payload == FROMBOT else format_assignment(f.payload)
        return f"{body} : {self.format_obj(f.dom)} -> {self.format_obj(f.cod)}"

    def obj(self, n: int) -> ObjId:
        return ObjId(self.name, ("cube", n))

    def bot(self) -> ObjId:
        return ObjId(self.name, BOT)

    def is_bot(self, v: ObjId) -> bool:
        return v.payload == BOT

    def dims(self, v: ObjId) -> int:
        return v.payload[1]

    def obj_size(self, v: ObjId) -> int:
        return 0 if self.is_bot(v) else v.payload[1]

    def objects_up_to(self, bound: int) -> list[ObjId]:
        return [self.bot()] + [self.obj(n) for n in range(bound + 1)]

    def terminal(self) -> ObjId:
        return self.obj(0)

    def identity(self, v: ObjId) -> MorNF:
        if self.is_bot(v):
            return MorNF(v, v, FROMBOT)
        return MorNF(v, v, tuple((V, i) for i in range(self.dims(v))))

    def compose_payload(self, g: MorNF, f: MorNF):
        if f.payload == FROMBOT:
            return FROMBOT
        return tuple(subst_entry(e, f.payload) for e in g.payload)

    def hom(self, v: ObjId, w: ObjId) -> tuple[MorNF, ...]:
        self.check_obj(v)
        self.check_obj(w)
        if self.is_bot(v):
            return (MorNF(v, w, FROMBOT),)
        if self.is_bot(w):
            return ()
        n, m = self.dims(v), self.dims(w)
        opts = [[(V, i) for i in range(n)] + [(C, 0), (C, 1)] for _ in range(m)]
        return tuple(MorNF(v, w, entries) for entries in product(*opts))
