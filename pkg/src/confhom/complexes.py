"""Graded free integer chain complexes with sparse boundary matrices.

Cells are stored as packed integer keys per dimension (the packing is
model-specific and owned by the builder); boundary matrices are triplet
arrays mapping d-cells to (d-1)-chains.
"""

from __future__ import annotations

from array import array


class BoundaryError(ValueError):
    pass


class ResourceLimitExceeded(RuntimeError):
    pass


class ChainComplex:
    """Indexed cell lists per dimension plus sparse integer boundaries.

    boundaries[d] is (rows, cols, vals) with rows indexing (d-1)-cells,
    cols indexing d-cells.  `cells[d]` lists packed cell keys in canonical
    order; `describe` and `cell_faces` are builder-supplied callbacks used
    for pretty-printing and for evaluating boundaries of sparse chains
    without materializing column slices.
    """

    def __init__(self, dims, boundaries, cells=None, meta=None,
                 describe=None, cell_faces=None):
        self.dims = list(dims)
        self.boundaries = boundaries
        self.cells = cells
        self.meta = meta or {}
        self._describe = describe
        self._cell_faces = cell_faces
        self._index = {}

    @property
    def top_dim(self):
        return len(self.dims) - 1

    def n_cells(self):
        return sum(self.dims)

    def euler_characteristic(self):
        return sum((-1) ** d * c for d, c in enumerate(self.dims))

    def index(self, d):
        """Packed key -> local index for dimension d (cached)."""
        if d not in self._index:
            if self.cells is None:
                self._index[d] = {i: i for i in range(self.dims[d])}
            else:
                self._index[d] = {key: i for i, key in enumerate(self.cells[d])}
        return self._index[d]

    def describe(self, d, key):
        if self._describe is None:
            return f"cell[{d}][{key}]"
        return self._describe(d, key)

    def cell_faces(self, d, key):
        """Boundary of one cell as [(face_key, coeff), ...]."""
        if self._cell_faces is not None:
            return self._cell_faces(d, key)
        # fall back to a column scan of the triplet arrays
        idx = self.index(d)[d] if False else None  # pragma: no cover
        raise NotImplementedError("complex has no cell_faces callback")

    def boundary_triplets(self, d):
        if d <= 0 or d > self.top_dim:
            return array("l"), array("l"), array("l")
        return self.boundaries.get(d, (array("l"), array("l"), array("l")))

    def check_boundary_squared(self):
        """Assert d(d(cell)) == 0 for every cell of every dimension >= 2."""
        for d in range(2, self.top_dim + 1):
            rows, cols, vals = self.boundary_triplets(d)
            if not len(cols):
                continue
            lower = self._columns(d - 1)
            acc = {}
            cur = -1
            for k in range(len(cols)):
                c = cols[k]
                if c != cur:
                    if any(acc.values()):
                        raise BoundaryError(
                            f"dd != 0 at dimension {d}, cell {cur}")
                    acc = {}
                    cur = c
                v = vals[k]
                for (g, w) in lower[rows[k]]:
                    acc[g] = acc.get(g, 0) + v * w
            if any(acc.values()):
                raise BoundaryError(f"dd != 0 at dimension {d}, cell {cur}")

    def _columns(self, d):
        """List over d-cells of [(row, val), ...]."""
        out = [[] for _ in range(self.dims[d])]
        rows, cols, vals = self.boundary_triplets(d)
        for k in range(len(cols)):
            out[cols[k]].append((rows[k], vals[k]))
        return out

    # -- shared dump format -------------------------------------------------

    def to_json_dict(self):
        return {
            "dims": list(self.dims),
            "boundary": {
                str(d): [[int(r), int(c), int(v)]
                         for r, c, v in zip(*self.boundaries[d])]
                for d in sorted(self.boundaries)
            },
        }

    @classmethod
    def from_json_dict(cls, data):
        dims = list(data["dims"])
        boundaries = {}
        for dstr, trips in data["boundary"].items():
            rows = array("l", (t[0] for t in trips))
            cols = array("l", (t[1] for t in trips))
            vals = array("l", (t[2] for t in trips))
            boundaries[int(dstr)] = (rows, cols, vals)
        cx = cls(dims, boundaries, cells=None, meta={"model": "json"})

        columns = {}

        def faces(d, key):
            if d not in columns:
                columns[d] = cx._columns(d)
            return columns[d][key]

        cx._cell_faces = faces
        return cx

    def __repr__(self):
        return f"<ChainComplex dims={self.dims} model={self.meta.get('model')}>"


class Chain:
    """Finitely supported integer combination of cells of one dimension."""

    __slots__ = ("complex", "dim", "data")

    def __init__(self, cx: ChainComplex, dim: int, data=None):
        self.complex = cx
        self.dim = dim
        self.data = {k: v for k, v in (data or {}).items() if v}

    def copy(self):
        return Chain(self.complex, self.dim, dict(self.data))

    def __add__(self, other):
        self._compat(other)
        out = dict(self.data)
        for k, v in other.data.items():
            nv = out.get(k, 0) + v
            if nv:
                out[k] = nv
            else:
                out.pop(k, None)
        return Chain(self.complex, self.dim, out)

    def __sub__(self, other):
        return self + (other * -1)

    def __mul__(self, scalar: int):
        return Chain(self.complex, self.dim,
                     {k: v * scalar for k, v in self.data.items()})

    __rmul__ = __mul__

    def __neg__(self):
        return self * -1

    def __eq__(self, other):
        return (isinstance(other, Chain) and self.dim == other.dim
                and self.data == other.data)

    def __bool__(self):
        return bool(self.data)

    def _compat(self, other):
        if other.complex is not self.complex or other.dim != self.dim:
            raise ValueError("chains belong to different complexes or dimensions")

    def boundary(self):
        if self.dim == 0:
            return Chain(self.complex, 0, {})
        out = {}
        for key, coeff in self.data.items():
            for fk, w in self.complex.cell_faces(self.dim, key):
                nv = out.get(fk, 0) + coeff * w
                if nv:
                    out[fk] = nv
                else:
                    del out[fk]
        return Chain(self.complex, self.dim - 1, out)

    def is_cycle(self):
        return not self.boundary()

    def to_vector(self):
        """Map to {local index: coeff} using the complex's cell index."""
        idx = self.complex.index(self.dim)
        return {idx[k]: v for k, v in self.data.items()}

    def describe(self):
        items = sorted(self.data.items(), key=lambda kv: str(kv[0]))
        return " + ".join(
            f"{v}*{self.complex.describe(self.dim, k)}" for k, v in items)

    def __repr__(self):
        return f"<Chain dim={self.dim} |support|={len(self.data)}>"
