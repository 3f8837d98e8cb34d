"""The discrete cube complex of n disjoint closed cells of a sufficiently
subdivided simple graph.

A d-cell is a set of n pairwise disjoint items, d of them edges and n-d
vertices; disjointness means no listed vertex is an endpoint of a listed
edge and no two listed edges share an endpoint.  The boundary alternates
over the cell's edges sorted by their lower-labelled endpoints.
"""

from __future__ import annotations

from array import array

from .complexes import Chain, ChainComplex, ResourceLimitExceeded
from .graph import GraphError, OrderedGraph, check_subdivided


class AbramsEncoding:
    """Bitmask cell encoding: items are vertices by label then edges by
    (tau, iota); a cell is the OR of its item bits."""

    def __init__(self, og: OrderedGraph, n: int):
        self.og = og
        self.n = n
        g = og.graph
        self.nv = len(g.vertices)
        # item i < nv: vertex with label i+1; item nv+j: j-th edge by (tau, iota)
        self.edge_items = list(og.edge_order)
        self.vsets = []
        for i in range(self.nv):
            self.vsets.append(1 << i)
        for eidx in self.edge_items:
            t, j = og.edge_tau_iota[eidx]
            self.vsets.append((1 << (t - 1)) | (1 << (j - 1)))
        self.n_items = self.nv + len(self.edge_items)
        self.edge_item_of = {eidx: self.nv + j
                             for j, eidx in enumerate(self.edge_items)}

    def item_for(self, x):
        """Item index for a vertex id, vertex label (int), edge id, or
        (tau, iota) label pair."""
        og, g = self.og, self.og.graph
        if isinstance(x, int):
            if not 1 <= x <= self.nv:
                raise GraphError(f"no vertex with label {x}")
            return x - 1
        if isinstance(x, tuple):
            for j, eidx in enumerate(self.edge_items):
                if og.edge_tau_iota[eidx] == x:
                    return self.nv + j
            raise GraphError(f"no edge with labels {x}")
        if x in g._vindex:
            return og.labels[x] - 1
        if x in g._eindex:
            return self.edge_item_of[g.edge_index(x)]
        raise GraphError(f"unknown item {x!r}")

    def encode(self, items):
        key = 0
        vmask = 0
        count = 0
        for x in items:
            it = self.item_for(x)
            bit = 1 << it
            if key & bit:
                raise GraphError(f"repeated item {x!r}")
            if self.vsets[it] & vmask:
                raise GraphError(f"item {x!r} is not disjoint from the rest")
            key |= bit
            vmask |= self.vsets[it]
            count += 1
        if count != self.n:
            raise GraphError(f"cell has {count} items, expected {self.n}")
        return key

    def items(self, key):
        return [k for k in range(self.n_items) if key >> k & 1]

    def dim_of(self, key):
        return sum(1 for k in self.items(key) if k >= self.nv)

    def describe(self, key):
        names = []
        for k in self.items(key):
            if k < self.nv:
                names.append(str(k + 1))
            else:
                names.append(self.og.edge_name(self.edge_items[k - self.nv]))
        return "{" + ",".join(names) + "}"

    def cell_faces(self, key):
        """Alternating faces replacing each edge by its endpoints."""
        out = []
        i = 0
        for k in self.items(key):
            if k < self.nv:
                continue
            i += 1
            sign = -1 if i % 2 else 1  # (-1)^i
            t, j = self.og.edge_tau_iota[self.edge_items[k - self.nv]]
            base = key & ~(1 << k)
            out.append((base | 1 << (j - 1), sign))   # iota face
            out.append((base | 1 << (t - 1), -sign))  # tau face
        return out


def abrams_boundary(items, og: OrderedGraph, n=None):
    """Boundary of one cell given as an item collection; returns a list of
    (frozenset of item names, coeff) pairs evaluated by the alternating
    face formula."""
    enc = AbramsEncoding(og, n if n is not None else len(tuple(items)))
    key = enc.encode(items)
    out = []
    for fk, coeff in enc.cell_faces(key):
        names = frozenset(
            k + 1 if k < enc.nv else og.edge_tau_iota[enc.edge_items[k - enc.nv]]
            for k in enc.items(fk))
        out.append((names, coeff))
    return out


def build_abrams(og: OrderedGraph, n: int, max_dim=None,
                 max_cells=None) -> ChainComplex:
    """Cube complex of n-point disjoint configurations on an ordered graph.

    The graph must be simple and sufficiently subdivided for n; violations
    raise InsufficientSubdivision with a witness.
    """
    if n < 1:
        raise GraphError("n must be >= 1")
    g = og.graph
    check_subdivided(g, n)
    enc = AbramsEncoding(og, n)
    nv, n_items = enc.nv, enc.n_items
    vsets = enc.vsets
    dim_cap = (max_dim + 1) if max_dim is not None else n

    by_dim = {}
    total = 0

    def rec(start, left, vmask, edges, key):
        nonlocal total
        if left == 0:
            by_dim.setdefault(edges, []).append(key)
            total += 1
            if max_cells is not None and total > max_cells:
                raise ResourceLimitExceeded(
                    f"cell count exceeded max_cells={max_cells}")
            return
        for k in range(start, n_items - left + 1):
            vs = vsets[k]
            if vs & vmask:
                continue
            if k >= nv and edges + 1 > dim_cap:
                break  # items are vertices-then-edges; all later items are edges
            rec(k + 1, left - 1, vmask | vs,
                edges + (1 if k >= nv else 0), key | 1 << k)

    rec(0, n, 0, 0, 0)

    top = max(by_dim) if by_dim else 0
    cells = [by_dim.get(d, []) for d in range(top + 1)]
    index = [{key: i for i, key in enumerate(cells[d])} for d in range(top + 1)]

    boundaries = {}
    for d in range(1, top + 1):
        rows = array("l")
        cols = array("l")
        vals = array("b")
        low = index[d - 1]
        for c, key in enumerate(cells[d]):
            for fk, coeff in enc.cell_faces(key):
                rows.append(low[fk])
                cols.append(c)
                vals.append(coeff)
        boundaries[d] = (rows, cols, vals)

    meta = {"model": "abrams", "graph": g, "ordered": og, "n": n,
            "encoding": enc}
    return ChainComplex([len(c) for c in cells], boundaries, cells=cells,
                        meta=meta,
                        describe=lambda d, key: enc.describe(key),
                        cell_faces=lambda d, key: enc.cell_faces(key))


def cell(cx: ChainComplex, items) -> Chain:
    """Single-cell chain from item names (vertex labels/ids, edge ids, or
    (tau, iota) pairs)."""
    enc = cx.meta["encoding"]
    key = enc.encode(items)
    d = enc.dim_of(key)
    if key not in cx.index(d):
        raise GraphError("cell not present in this complex")
    return Chain(cx, d, {key: 1})
