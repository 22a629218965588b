"""CCHM cubes: morphism components live in the free de Morgan algebra.

Elements are stored as irredundant antichains of clauses over literals
(i, True) = i and (i, False) = neg i; the free de Morgan algebra on n
generators is the free bounded distributive lattice on the 2n literals,
so the antichain DNF is a canonical form and equality is payload
equality. 0 is the empty antichain, 1 is the antichain {{}}.
"""

from __future__ import annotations

from functools import lru_cache
from itertools import product

from .core import BaseCategory, MorNF, ObjId, UsageError

ZERO = frozenset()
ONE = frozenset({frozenset()})


def _absorb(clauses) -> frozenset:
    cl = sorted(set(clauses), key=len)
    kept = []
    for c in cl:
        if not any(k <= c for k in kept):
            kept.append(c)
    return frozenset(kept)


def join(a: frozenset, b: frozenset) -> frozenset:
    return _absorb(a | b)


def meet(a: frozenset, b: frozenset) -> frozenset:
    return _absorb(c1 | c2 for c1 in a for c2 in b)


def neg(a: frozenset) -> frozenset:
    acc = ONE
    for clause in a:
        acc = meet(acc, _absorb(frozenset({(i, not pos)}) for (i, pos) in clause))
        if acc == ZERO:
            break
    # meet over clauses of (join over literals of the negated literal);
    # the empty meet is 1, handling neg(0) = 1, and any empty clause
    # contributes an empty join = 0, handling neg(1) = 0.
    if not a:
        return ONE
    return acc


def var(i: int) -> frozenset:
    return frozenset({frozenset({(i, True)})})


def const(e: int) -> frozenset:
    return ONE if e else ZERO


def substitute(a: frozenset, env: dict) -> frozenset:
    """Evaluate a under literal -> element assignments (env maps var index)."""
    out = ZERO
    for clause in a:
        val = ONE
        for (i, pos) in clause:
            v = env[i] if pos else neg(env[i])
            val = meet(val, v)
            if val == ZERO:
                break
        out = join(out, val)
    return out


@lru_cache(maxsize=None)
def de_morgan_elements(n: int) -> tuple:
    """All elements of the free de Morgan algebra on n generators.

    Enumerates antichains over the 2n literals; sizes are 2, 6, 168 for
    n = 0, 1, 2. Guarded: n >= 3 has 7.8M+ elements.
    """
    if n >= 3:
        raise UsageError("de Morgan element enumeration is capped at 2 generators")
    lits = [(i, p) for i in range(n) for p in (True, False)]
    subsets = []
    for mask in range(1 << len(lits)):
        subsets.append(frozenset(l for k, l in enumerate(lits) if mask >> k & 1))
    subsets.sort(key=lambda s: (len(s), sorted(s)))
    out = []

    def rec(idx, chosen):
        out.append(frozenset(chosen))
        for k in range(idx, len(subsets)):
            s = subsets[k]
            if not any(c <= s or s <= c for c in chosen):
                chosen.append(s)
                rec(k + 1, chosen)
                chosen.pop()

    rec(0, [])
    return tuple(sorted(out, key=lambda a: (len(a), sorted(sorted(c) for c in a))))


def format_element(a: frozenset) -> str:
    if a == ZERO:
        return "0"
    if a == ONE:
        return "1"
    clauses = []
    for clause in sorted(a, key=lambda c: sorted(c)):
        lits = [("i%d" % i) if pos else ("~i%d" % i)
                for (i, pos) in sorted(clause)]
        clauses.append(" & ".join(lits) if lits else "1")
    return " | ".join(clauses)


class CCHMCube(BaseCategory):
    """Binary cubes with de Morgan algebra maps (connections, reversals)."""

    def __init__(self):
        self.name = "cchm"

    def format_obj(self, v: ObjId) -> str:
        return "(" + ", ".join(f"i{k}" for k in range(v.payload)) + ")"

    def format_mor(self, f: MorNF) -> str:
        parts = [f"{format_element(e)}/i{j}'" for j, e in enumerate(f.payload)]
        return "(" + ", ".join(parts) + f") : {self.format_obj(f.dom)} -> {self.format_obj(f.cod)}"

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
        return MorNF(v, v, tuple(var(i) for i in range(self.dims(v))))

    def compose_payload(self, g: MorNF, f: MorNF):
        env = dict(enumerate(f.payload))
        return tuple(substitute(e, env) for e in g.payload)

    def hom(self, v: ObjId, w: ObjId) -> tuple[MorNF, ...]:
        self.check_obj(v)
        self.check_obj(w)
        if self.dims(w) == 0:
            return (MorNF(v, w, ()),)
        elems = de_morgan_elements(self.dims(v))
        return tuple(MorNF(v, w, entries)
                     for entries in product(elems, repeat=self.dims(w)))

    def isos(self, v: ObjId, w: ObjId) -> tuple[MorNF, ...]:
        # invertible maps are signed variable permutations
        from itertools import permutations
        n, m = self.dims(v), self.dims(w)
        if n != m:
            return ()
        out = []
        for perm in permutations(range(n)):
            for signs in product((True, False), repeat=n):
                entries = tuple(
                    var(perm[j]) if signs[j] else neg(var(perm[j]))
                    for j in range(n))
                out.append(MorNF(v, w, entries))
        return tuple(out)
