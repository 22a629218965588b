"""Shape-context extension of presheaves: Xi (x) yU and its boundary part.

The extension is the cocontinuous (coend) one: a cell of (Xi (x) yU) at
V is a class of triples (W, x in Xi(W), psi : V -> W(x)U) modulo the
zigzag relation (W2, x2, F(f).psi) ~ (W1, Xi(f)(x2), psi).
"""

from __future__ import annotations

from ..catkit import UsageError
from ..multkit import Multiplier
from .fincat import Arrow, FinCat, truncate_base
from .presheaf import FinPsh, _key
from .kan import _UnionFind


class TensorPsh(FinPsh):
    def __init__(self, xi: FinPsh, m: Multiplier):
        self.xi = xi
        self.m = m
        index = xi.index
        base = m.base
        self._uf = {}
        self._canon = {}
        carriers = {}
        for v_arr in index.objects:
            v = v_arr
            gens = []
            for w in index.objects:
                fw = m.on_obj(w)
                for psi in base.hom(v, fw):
                    for x in xi.cells(w):
                        gens.append((w, x, psi))
            uf = _UnionFind()
            for w1 in index.objects:
                for w2 in index.objects:
                    for f in index.hom(w1, w2):
                        ff = m.on_mor(f.tag)
                        for psi1 in base.hom(v, m.on_obj(w1)):
                            psi2 = base.compose(ff, psi1)
                            for x2 in xi.cells(w2):
                                uf.union((w2, x2, psi2),
                                         (w1, xi.restrict(f, x2), psi1))
            reps = {}
            for g in gens:
                reps.setdefault(uf.find(g), g)
            self._uf[v] = uf
            self._canon[v] = reps
            carriers[v] = tuple(sorted(reps.values(), key=_key))
        super().__init__(index, carriers, self._restr,
                         name=f"{xi.name}(x)yU")

    def cls(self, v, gen):
        return self._canon[v][self._uf[v].find(gen)]

    def _restr(self, a: Arrow, cell):
        w, x, psi = cell
        return self.cls(a.dom, (w, x, self.m.base.compose(psi, a.tag)))

    def u_leg(self, cell):
        """The composite V -> W(x)U -> U; invariant across the class."""
        w, x, psi = cell
        return self.m.base.compose(self.m.proj2(w), psi)


def tensor_presheaf(xi: FinPsh, m: Multiplier) -> TensorPsh:
    return TensorPsh(xi, m)


class Subobject:
    """A subpresheaf presented by per-object cell subsets of a host."""

    def __init__(self, host: FinPsh, cells: dict):
        self.host = host
        self.cells_map = {a: frozenset(cells.get(a, ())) for a in host.index.objects}

    def cells(self, a):
        return self.cells_map[a]

    def check_closed(self) -> list:
        bad = []
        idx = self.host.index
        for a in idx.objects:
            for b in idx.objects:
                for f in idx.hom(a, b):
                    for x in self.cells(b):
                        if self.host.restrict(f, x) not in self.cells(a):
                            bad.append((f, x))
        return bad

    def as_psh(self, name="sub") -> FinPsh:
        return FinPsh(self.host.index,
                      {a: tuple(sorted(self.cells(a), key=_key))
                       for a in self.host.index.objects},
                      self.host._restr_fn if hasattr(self.host, "_restr_fn") else
                      (lambda f, x: self.host.restrict(f, x)),
                      name=name)

    def __eq__(self, other):
        return isinstance(other, Subobject) and self.host is other.host and \
            self.cells_map == other.cells_map


def boundary_subobject(xi: FinPsh, m: Multiplier, bound: int) -> Subobject:
    """Cells of Xi (x) yU whose U-leg is not dimensionally split."""
    xiu = xi if isinstance(xi, TensorPsh) else tensor_presheaf(xi, m)
    cells = {}
    for v in xiu.index.objects:
        keep = []
        for cell in xiu.cells(v):
            leg = xiu.u_leg(cell)
            if m.is_dim_split(leg, bound)["verdict"] != "yes":
                keep.append(cell)
        cells[v] = keep
    return Subobject(xiu, cells)
