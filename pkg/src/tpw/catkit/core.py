"""Finitely presented base categories with enumerable objects and hom-sets.

Every presentation stores morphisms in a canonical normal form: two
morphisms are equal iff their payloads are equal. Composition
re-canonicalizes, so equality stays decidable throughout.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Any, Iterable, Iterator


class UsageError(Exception):
    """Raised when an operation is applied to mismatched or invalid data."""


@dataclass(frozen=True, eq=False)
class ObjId:
    cat: str
    payload: Any

    def __repr__(self):
        return f"{self.cat}:{self.payload!r}"

    def __eq__(self, other):
        if self is other:
            return True
        return isinstance(other, ObjId) and self.cat == other.cat \
            and self.payload == other.payload

    def __hash__(self):
        h = getattr(self, "_h", None)
        if h is None:
            h = hash((self.cat, self.payload))
            object.__setattr__(self, "_h", h)
        return h


@dataclass(frozen=True, eq=False)
class MorNF:
    dom: ObjId
    cod: ObjId
    payload: Any

    def __repr__(self):
        return f"[{self.payload!r} : {self.dom!r} -> {self.cod!r}]"

    def __eq__(self, other):
        if self is other:
            return True
        return isinstance(other, MorNF) and self.dom == other.dom \
            and self.cod == other.cod and self.payload == other.payload

    def __hash__(self):
        h = getattr(self, "_h", None)
        if h is None:
            h = hash((self.dom, self.cod, self.payload))
            object.__setattr__(self, "_h", h)
        return h


def _sort_key(x):
    # total order over heterogeneous canonical payloads
    return repr(x)


class BaseCategory:
    """Interface of a finitely presented base category.

    Subclasses provide `objects_up_to`, `hom`, `compose_payload`,
    `identity` and `terminal`; everything else is generic.
    """

    name: str = "?"

    # -- presentation hooks -------------------------------------------------

    def objects_up_to(self, bound: int) -> list[ObjId]:
        raise NotImplementedError

    def hom(self, v: ObjId, w: ObjId) -> tuple[MorNF, ...]:
        raise NotImplementedError

    def identity(self, v: ObjId) -> MorNF:
        raise NotImplementedError

    def compose_payload(self, g: MorNF, f: MorNF) -> Any:
        raise NotImplementedError

    def terminal(self) -> ObjId:
        raise NotImplementedError

    def obj_size(self, v: ObjId) -> int:
        """Size measure consistent with objects_up_to: v is enumerated at
        bound b iff obj_size(v) <= b."""
        raise NotImplementedError

    def format_obj(self, v: ObjId) -> str:
        return repr(v.payload)

    def format_mor(self, f: MorNF) -> str:
        return f"{repr(f.payload)} : {self.format_obj(f.dom)} -> {self.format_obj(f.cod)}"

    # optional fast path: enumerate isomorphisms V -> W
    def isos(self, v: ObjId, w: ObjId) -> tuple[MorNF, ...]:
        out = []
        for h in self.hom(v, w):
            for h_inv in self.hom(w, v):
                if self.compose(h_inv, h) == self.identity(v) and self.compose(h, h_inv) == self.identity(w):
                    out.append(h)
                    break
        return tuple(out)

    # -- generic operations -------------------------------------------------

    def check_obj(self, v: ObjId):
        if v.cat != self.name:
            raise UsageError(f"object {v!r} does not belong to category {self.name}")

    def compose(self, g: MorNF, f: MorNF) -> MorNF:
        if f.cod != g.dom:
            raise UsageError(f"cannot compose: cod{f.cod!r} != dom{g.dom!r}")
        return MorNF(f.dom, g.cod, self.compose_payload(g, f))

    def all_morphisms(self, bound: int) -> Iterator[MorNF]:
        objs = self.objects_up_to(bound)
        for v in objs:
            for w in objs:
                yield from self.hom(v, w)

    def global_points(self, v: ObjId) -> tuple[MorNF, ...]:
        return self.hom(self.terminal(), v)

    def check_laws(self, bound: int, assoc_budget: int = 200_000,
                   samples: int = 2000, seed: int = 0) -> dict:
        """Verify identity and associativity over enumerated data.

        Identity laws are exhaustive. Associativity is exhaustive per
        object quadruple while the triple count fits `assoc_budget`;
        heavier quadruples get `samples` seeded random triples instead.
        Violations are report content, not exceptions.
        """
        import random as _random

        rng = _random.Random(seed)
        objs = self.objects_up_to(bound)
        violations = []
        n_id = n_assoc = 0
        sampled_quads = 0

        homs: dict[tuple[ObjId, ObjId], tuple[MorNF, ...]] = {}
        for v in objs:
            for w in objs:
                homs[(v, w)] = self.hom(v, w)

        for (v, w), fs in homs.items():
            idv, idw = self.identity(v), self.identity(w)
            for f in fs:
                n_id += 2
                if self.compose(f, idv) != f:
                    violations.append({"law": "right-identity", "f": repr(f)})
                if self.compose(idw, f) != f:
                    violations.append({"law": "left-identity", "f": repr(f)})

        for a in objs:
            for b in objs:
                fs = homs[(a, b)]
                if not fs:
                    continue
                for c in objs:
                    gs = homs[(b, c)]
                    if not gs:
                        continue
                    for d in objs:
                        hs = homs[(c, d)]
                        if not hs:
                            continue
                        total = len(fs) * len(gs) * len(hs)
                        if total <= assoc_budget:
                            triples: Iterable = (
                                (f, g, h) for f in fs for g in gs for h in hs)
                        else:
                            sampled_quads += 1
                            triples = (
                                (rng.choice(fs), rng.choice(gs), rng.choice(hs))
                                for _ in range(samples))
                        for f, g, h in triples:
                            n_assoc += 1
                            if self.compose(self.compose(h, g), f) != self.compose(h, self.compose(g, f)):
                                violations.append({
                                    "law": "associativity",
                                    "f": repr(f), "g": repr(g), "h": repr(h)})
        return {
            "category": self.name,
            "bound": bound,
            "identity_checks": n_id,
            "associativity_checks": n_assoc,
            "sampled_quadruples": sampled_quads,
            "violations": violations,
        }

    def terminal_is_terminal(self, bound: int) -> bool:
        t = self.terminal()
        return all(len(self.hom(v, t)) == 1 for v in self.objects_up_to(bound))

    def is_epi_to_terminal(self, v: ObjId, bound: int) -> bool:
        """Whether the unique map v -> terminal is epi among enumerated data.

        f : v -> t is epi iff parallel g, h : t -> x with g∘f = h∘f agree;
        since all composites through the terminal weaken the same way,
        this reduces to: distinct points of x stay distinct after
        precomposition with f.
        """
        t = self.terminal()
        (f,) = self.hom(v, t)
        for x in self.objects_up_to(bound):
            pts = self.hom(t, x)
            seen = {}
            for g in pts:
                key = self.compose(g, f)
                if key in seen:
                    return False
                seen[key] = g
        return True

    def is_spooky(self, bound: int) -> dict:
        """Spookiness verdict with witness.

        A witness is an enumerated V whose map to the terminal is an
        epimorphism (up to the bound) but has no section, i.e. V has no
        global point. Restricting to epis keeps freely adjoined initial
        objects from counting; on categories where every map to the
        terminal is epi this is the plain no-global-point reading.
        """
        t = self.terminal()
        for v in self.objects_up_to(bound):
            if v == t:
                continue
            if not self.global_points(v) and self.is_epi_to_terminal(v, bound):
                return {"verdict": "yes", "witness": repr(v)}
        return {"verdict": "no_upto", "bound": bound}

    def all_objects_have_points(self, bound: int) -> bool:
        return all(self.global_points(v) for v in self.objects_up_to(bound))
