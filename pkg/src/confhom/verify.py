"""Named verification suites: reference-table regression, relation checks,
cross-model agreement, formula-vs-engine agreement, and generation checks
for product classes.

Suites return one row per check; the CLI renders them and tests assert on
them.  Heavy rows carry tier "extended" and only run when asked.
"""

from __future__ import annotations

import itertools
import os
import time
from dataclasses import dataclass, field

from . import formulas, tables
from .complexes import Chain
from .cycles import CycleSpec, product_cycle, span_rank, verify_chain_identity
from .graph import Graph, build_family, order_vertices, parse_family, subdivide_for
from .homology import homology
from .swiatkowski import build_swiatkowski
from .abrams import build_abrams

SUITES = ("paper-tables-core", "paper-tables-extended", "relations",
          "cross-model", "formula-engine", "generation")


@dataclass
class Row:
    suite: str
    label: str
    expected: object
    got: object = None
    ok: bool = False
    note: str = ""
    seconds: float = 0.0

    def as_dict(self):
        return {"suite": self.suite, "label": self.label,
                "expected": repr(self.expected), "got": repr(self.got),
                "ok": self.ok, "note": self.note,
                "seconds": round(self.seconds, 3)}


def _structural_note(h, n, graph):
    """Vanishing above min(n, junction count), and observed torsion values."""
    n_junctions = len(graph.essential_vertices())
    cap = min(n, n_junctions)
    bad = [d for d in h.dims if d > cap and (h.betti(d) or h.torsion(d))]
    torsions = sorted({t for d in h.dims for t in h.torsion(d)})
    note = ""
    if bad:
        note = f"nonzero above dimension {cap}: {bad}"
    if torsions:
        note += (" " if note else "") + f"torsion values {torsions}"
    return (not bad), note


_hom_cache = {}


def _engine(family, n, dims=None, reduce_vertices="all"):
    key = (family, n, None if dims is None else tuple(dims)
           if isinstance(dims, tuple) else dims, reduce_vertices)
    if key not in _hom_cache:
        g = build_family(family)
        cx = build_swiatkowski(g, n, reduce_vertices=reduce_vertices)
        _hom_cache[key] = (homology(cx, dims=dims), g)
    return _hom_cache[key]


def _table_row(suite, family, n, expected_betti, expected_torsion=None):
    t0 = time.perf_counter()
    h, g = _engine(family, n)
    got = {d: h.betti(d) for d in expected_betti}
    ok = got == expected_betti
    tor = {d: h.torsion(d) for d in h.dims if h.torsion(d)}
    if expected_torsion is None:
        ok = ok and not any(h.torsion(d) for d in h.dims if d >= 2)
        note = f"torsion {tor}" if tor else "torsion-free"
    else:
        ok = ok and all(h.torsion(d) == t for d, t in expected_torsion.items())
        note = f"torsion {tor}"
    s_ok, s_note = _structural_note(h, n, g)
    ok = ok and s_ok
    if s_note:
        note += "; " + s_note
    return Row(suite, f"{family} n={n}", expected_betti, got, ok, note,
               time.perf_counter() - t0)


# -- paper tables -------------------------------------------------------------

def suite_paper_tables_core():
    rows = []
    for n, ds in tables.K4_BETTI.items():
        expected = dict(ds)
        expected[5] = 0
        rows.append(_table_row("paper-tables-core", "k4", n, expected))
    for n, ds in tables.K33_BETTI.items():
        rows.append(_table_row("paper-tables-core", "k33", n, dict(ds)))
    for (m, n), ds in tables.WHEEL_BETTI.items():
        rows.append(_table_row("paper-tables-core", f"wheel:{m}", n, dict(ds)))
    for n, ds in tables.K5_BETTI.items():
        if n <= 5:
            rows.append(_table_row("paper-tables-core", "k5", n, dict(ds)))
    for fam, (b2, tor) in tables.PETERSEN_N4_CORE.items():
        rows.append(_table_row("paper-tables-core", fam, 4, {2: b2},
                               expected_torsion={2: tor}))
    rows.extend(_k2p_rows("paper-tables-core"))
    return rows


def suite_paper_tables_extended():
    rows = []
    for n, ds in tables.K5_BETTI.items():
        if n >= 6:
            rows.append(_table_row("paper-tables-extended", "k5", n, dict(ds)))
    for fam, (b2, tor) in tables.PETERSEN_N4_EXTENDED.items():
        rows.append(_table_row("paper-tables-extended", fam, 4, {2: b2},
                               expected_torsion={2: tor}))
    for fam, (b3, tor) in tables.PETERSEN_N6_EXTENDED.items():
        rows.append(_table_row("paper-tables-extended", fam, 6, {3: b3},
                               expected_torsion={3: tor}))
    rows.extend(_generation_rows("paper-tables-extended", extended=True))
    return rows


def _k2p_rows(suite):
    rows = []
    for p in tables.K2P_GRID["p"]:
        for n in tables.K2P_GRID["n"]:
            t0 = time.perf_counter()
            g = build_family(f"theta:{p}")
            cx = build_swiatkowski(g, n)
            vals = formulas.k2p_values(p, n)
            h = homology(cx)
            got = {"euler": cx.euler_characteristic(),
                   "beta1": h.betti(1), "beta2": h.betti(2)}
            expected = {"euler": vals["euler"],
                        "beta1": vals["beta1_chi_consistent"],
                        "beta2": vals["beta2"]}
            ok = got == expected and cx.top_dim <= 2
            note = (f"H_1 resolved to p(p-1)/2={vals['beta1_chi_consistent']} "
                    f"(flagged alternative p(p-1)={vals['beta1_lemma']}); "
                    f"no cells above dimension 2")
            if n == 3:
                ok = ok and h.betti(2) == vals["beta2_n3"]
                note += f"; beta2(n=3)=C(p-1,3)={vals['beta2_n3']}"
            rows.append(Row(suite, f"theta:{p} n={n}", expected, got, ok, note,
                            time.perf_counter() - t0))
    return rows


# -- relations ----------------------------------------------------------------

def suite_relations():
    rows = []
    for name in ("y-ab", "theta5", "theta3", "theta-dist", "prod-rel"):
        t0 = time.perf_counter()
        rep = verify_chain_identity(name)
        rows.append(Row("relations", name, "holds",
                        f"{'holds' if rep.holds else 'fails'} ({rep.level})",
                        rep.holds, "; ".join(rep.details),
                        time.perf_counter() - t0))
    t0 = time.perf_counter()
    ok, note = _cycle_constructions_close()
    rows.append(Row("relations", "cycle boundaries vanish", "all zero",
                    "all zero" if ok else "nonzero", ok, note,
                    time.perf_counter() - t0))
    rows.append(_o_dressing_row())
    return rows


def _cycle_constructions_close():
    from .cycles import make_cycle
    checks = 0
    g = build_family("theta:4")
    cx = build_swiatkowski(g, 3)
    make_cycle(cx, CycleSpec(kind="Theta", edges=("e1", "e2", "e3", "e4")))
    checks += 1
    cx2 = build_swiatkowski(g, 2)
    for tri in itertools.combinations(("e1", "e2", "e3", "e4"), 3):
        make_cycle(cx2, CycleSpec(kind="Y", hub="u", branches=tri))
        make_cycle(cx2, CycleSpec(kind="O", cycle=tri[:2],
                                  dressing_edges=((tri[2], 1),)))
        checks += 2
    lasso = build_family("lasso")
    og = order_vertices(lasso, "v1")
    acx = build_abrams(og, 2)
    make_cycle(acx, CycleSpec(kind="O", cycle=("a", "b", "c"),
                              dressing_vertices=("v1",)))
    make_cycle(acx, CycleSpec(kind="Y", hub="v2", branches=("t", "a", "c")))
    checks += 2
    return True, f"{checks} constructions verified at build time"


def _o_dressing_row():
    """Two dressings of a circle class joined by a carrier-disjoint path
    bound an explicit product chain."""
    from .cycles import make_cycle
    from .homology import solve_boundary
    t0 = time.perf_counter()
    g = Graph(["v0", "v1", "v2", "v3", "v4"],
              [("t0", "v0", "v1"), ("t1", "v1", "v2"), ("a", "v2", "v3"),
               ("b", "v3", "v4"), ("c", "v2", "v4")])
    og = order_vertices(g, "v0")
    cx = build_abrams(og, 2)
    c1 = make_cycle(cx, CycleSpec(kind="O", cycle=("a", "b", "c"),
                                  dressing_vertices=("v0",)))
    c2 = make_cycle(cx, CycleSpec(kind="O", cycle=("a", "b", "c"),
                                  dressing_vertices=("v1",)))
    filled = solve_boundary(cx, c1 - c2)
    ok = filled is not None
    return Row("relations", "circle dressings homologous", "bounded",
               "bounded" if ok else "distinct class", ok,
               f"filling support {len(filled.data) if filled else 0}",
               time.perf_counter() - t0)


# -- cross-model ---------------------------------------------------------------

def suite_cross_model():
    rows = []
    for fam, n in tables.CROSS_MODEL_SET:
        t0 = time.perf_counter()
        g = build_family(fam)
        sg = subdivide_for(g, n)
        og = order_vertices(sg)
        ha = homology(build_abrams(og, n))
        hs = homology(build_swiatkowski(g, n))
        top = max(max(ha.dims), max(hs.dims))
        got_a = [(ha.betti(d), ha.torsion(d)) for d in range(top + 1)]
        got_s = [(hs.betti(d), hs.torsion(d)) for d in range(top + 1)]
        ok = got_a == got_s
        rows.append(Row("cross-model", f"{fam} n={n}", got_s, got_a, ok,
                        "cube complex vs half-edge complex",
                        time.perf_counter() - t0))
    return rows


# -- formulas vs engine ----------------------------------------------------------

def suite_formula_engine():
    rows = []
    for m in tables.TREE_NET_GRID["m"]:
        for n in tables.TREE_NET_GRID["n"]:
            rows.append(_tree_row(m, n))
            rows.append(_net_row(m, n))
    for n in sorted(tables.K4_BETTI):
        t0 = time.perf_counter()
        h, _ = _engine("k4", n)
        got = {d: h.betti(d) for d in (2, 3, 4, 5)}
        expected = {d: formulas.betti_K4(n, d) for d in (2, 3, 4, 5)}
        rows.append(Row("formula-engine", f"k4 n={n}", expected, got,
                        got == expected, "piecewise closed forms",
                        time.perf_counter() - t0))
    for n in sorted(tables.K33_BETTI):
        t0 = time.perf_counter()
        h, _ = _engine("k33", n)
        ds = tuple(tables.K33_BETTI[n])
        got = {d: h.betti(d) for d in ds}
        expected = {d: formulas.betti_K33(n, d) for d in ds}
        rows.append(Row("formula-engine", f"k33 n={n}", expected, got,
                        got == expected, "piecewise closed forms",
                        time.perf_counter() - t0))
    for (m, n), ds in tables.WHEEL_BETTI.items():
        t0 = time.perf_counter()
        got = {d: formulas.betti_wheel(m, n, d) for d in ds}
        rows.append(Row("formula-engine", f"wheel:{m} n={n} closed form",
                        dict(ds), got, got == dict(ds),
                        "grouping sum vs reference values",
                        time.perf_counter() - t0))
    t0 = time.perf_counter()
    grp = {}
    for m in (5, 6, 7):
        for k in range(1, m):
            for g in formulas.enumerate_groupings(m, k):
                grp[(m, g.composition)] = (g.count, g.mu)
    ok = grp == tables.WHEEL_GROUPINGS
    rows.append(Row("formula-engine", "rim grouping table",
                    len(tables.WHEEL_GROUPINGS), len(grp), ok,
                    "compositions, placement counts, leaf counts",
                    time.perf_counter() - t0))
    return rows


def _tree_row(m, n):
    t0 = time.perf_counter()
    h, _ = _engine(f"linear_tree:{m}", n)
    top = max(h.dims)
    got = {d: h.betti(d) for d in range(top + 1)}
    expected = {d: formulas.betti_tree_linear(m, n, d) for d in range(top + 1)}
    return Row("formula-engine", f"linear_tree:{m} n={n}", expected, got,
               got == expected and not any(h.torsion(d) for d in h.dims),
               "junction-count times distribution count",
               time.perf_counter() - t0)


def _net_row(m, n):
    t0 = time.perf_counter()
    h, _ = _engine(f"net:{m}", n)
    top = max(h.dims)
    got = {d: h.betti(d) for d in range(top + 1)}
    expected = {d: formulas.betti_net(m, n, d) for d in range(top + 1)}
    ok = all(got[d] == expected[d] for d in got if d != 1)
    ok = ok and not any(h.torsion(d) for d in h.dims)
    # the closed form misses the circle class in dimension 1; the engine
    # value is the stated count plus one whenever particles can circulate
    extra = 1 if n >= 1 else 0
    d1_ok = got.get(1, 0) == expected.get(1, 0) + extra
    note = (f"d=1: engine {got.get(1)} = stated {expected.get(1)} + {extra} "
            "(circulation class); other dimensions exact")
    return Row("formula-engine", f"net:{m} n={n}", expected, got,
               ok and d1_ok, note, time.perf_counter() - t0)


# -- generation (product classes span the homology) -----------------------------

def _subdivide_edges(g: Graph, edge_ids):
    vertices = list(g.vertices)
    edges = []
    for eid, u, v in g.edges:
        if eid in edge_ids:
            mid = f"{eid}.m"
            vertices.append(mid)
            edges.append((f"{eid}:0", u, mid))
            edges.append((f"{eid}:1", mid, v))
        else:
            edges.append((eid, u, v))
    return Graph(vertices, edges, name=f"{g.name}+mid")


def _regions(g: Graph, used_edges, used_vertices):
    """Free-particle regions of the complement: non-carrier edges, joined
    only through non-carrier vertices.  Returns one representative edge per
    region; an edge whose endpoints are both on the carrier is its own
    pocket."""
    alive_e = [e for e in g.edges if e[0] not in used_edges]
    adj = {}
    for eid, u, v in alive_e:
        for x in (u, v):
            if x not in used_vertices:
                adj.setdefault(x, []).append((eid, v if x == u else u))
    seen = set()
    reps = []
    for eid, u, v in alive_e:
        if eid in seen:
            continue
        comp = [eid]
        seen.add(eid)
        todo = [x for x in (u, v) if x not in used_vertices]
        visited = set(todo)
        while todo:
            x = todo.pop()
            for eid2, w in adj.get(x, ()):
                if eid2 not in seen:
                    seen.add(eid2)
                    comp.append(eid2)
                if w not in visited and w not in used_vertices:
                    visited.add(w)
                    todo.append(w)
        reps.append(min(comp))
    return sorted(reps)


def _distributions(total, bins):
    if not bins:
        if total == 0:
            yield {}
        return
    if len(bins) == 1:
        yield {bins[0]: total} if total else {}
        return
    for first in range(total + 1):
        for rest in _distributions(total - first, bins[1:]):
            out = dict(rest)
            if first:
                out[bins[0]] = first
            yield out


def _carrier(g, spec: CycleSpec):
    from .cycles import _spec_support
    return _spec_support(g, spec)


def _dressed_span(cx, part_lists, d, expected):
    g = cx.meta["graph"]
    n = cx.meta["n"]
    cycles = []
    for parts in part_lists:
        used_e, used_v = set(), set()
        for p in parts:
            es, vs = _carrier(g, p)
            used_e |= es
            used_v |= vs
        free = n - sum({"O": 1, "Y": 2, "Theta": 3}[p.kind] for p in parts)
        if free < 0:
            continue
        reps = _regions(g, used_e, used_v)
        for dist in _distributions(free, reps):
            cycles.append(product_cycle(cx, parts, dressing={"edges": dist}))
    got = span_rank(cx, cycles, d)
    return got, len(cycles)


def _wheel_product_parts(subdivided: Graph, m, count):
    """All support-disjoint tuples of `count` one-cycles in a once-subdivided
    wheel: junction cycles on rim and hub (hub-side spoke halves keep them
    disjoint from rim ones along the same spoke) plus triangle/rim circles."""
    rim = [f"r{i}" for i in range(m - 1)]

    def rim_y(i):
        left = f"c{(i - 1) % (m - 1)}:1"
        right = f"c{i}:0"
        return CycleSpec(kind="Y", hub=rim[i], branches=(left, right, f"s{i}:1"))

    def hub_y(triple):
        return CycleSpec(kind="Y", hub="h",
                         branches=tuple(f"s{i}:0" for i in triple))

    def triangle(i):
        j = (i + 1) % (m - 1)
        return CycleSpec(kind="O", cycle=(f"s{i}:0", f"s{i}:1", f"c{i}:0",
                                          f"c{i}:1", f"s{j}:1", f"s{j}:0"))

    rim_cycle = CycleSpec(kind="O", cycle=tuple(
        seg for i in range(m - 1) for seg in (f"c{i}:0", f"c{i}:1")))

    parts = ([rim_y(i) for i in range(m - 1)]
             + [hub_y(t) for t in itertools.combinations(range(m - 1), 3)]
             + [triangle(i) for i in range(m - 1)]
             + [rim_cycle])
    out = []
    for combo in itertools.combinations(parts, count):
        supp = [_carrier(subdivided, p) for p in combo]
        ok = True
        for i in range(count):
            for j in range(i + 1, count):
                if (supp[i][0] & supp[j][0]) or (supp[i][1] & supp[j][1]):
                    ok = False
        if ok and sum(1 for p in combo if p.kind == "O") <= 1:
            out.append(list(combo))
    return out


def _generation_rows(suite, extended=False):
    rows = []
    core_wheels = [(5, 3), (5, 4), (5, 5), (6, 3), (6, 4), (7, 3), (7, 4)]
    ext_wheels = [(m, n) for (m, n) in tables.WHEEL_BETTI
                  if (m, n) not in core_wheels]
    wheels = ext_wheels if extended else core_wheels
    for m, n in wheels:
        t0 = time.perf_counter()
        g = build_family(f"wheel:{m}")
        sub = _subdivide_edges(g, {e[0] for e in g.edges})
        cx = build_swiatkowski(sub, n, reduce_vertices="all")
        expected = tables.WHEEL_BETTI[(m, n)][2]
        part_lists = _wheel_product_parts(sub, m, 2)
        got, ncyc = _dressed_span(cx, part_lists, 2, expected)
        rows.append(Row(suite, f"wheel:{m} n={n} product span d=2", expected,
                        got, got == expected, f"{ncyc} product classes",
                        time.perf_counter() - t0))
    if extended:
        return rows
    rows.append(_k33_span2_row(suite))
    rows.append(_k33_span3_row(suite))
    return rows


def _k33_parts(g, sub):
    """Junction and circle specs in once-subdivided K33."""
    verts = [f"a{i}" for i in range(3)] + [f"b{j}" for j in range(3)]

    def star_edges(v):
        return tuple(sub.edges[eidx][0] for eidx, _ in sub.half_edges(v))

    ys = {v: CycleSpec(kind="Y", hub=v, branches=star_edges(v)) for v in verts}
    os_ = {}
    for (i, j) in itertools.combinations(range(3), 2):
        for (k, l) in itertools.combinations(range(3), 2):
            seq = []
            for (x, y) in ((f"a{i}", f"b{k}"), (f"b{k}", f"a{j}"),
                           (f"a{j}", f"b{l}"), (f"b{l}", f"a{i}")):
                a, b = (x, y) if x.startswith("a") else (y, x)
                base = f"e{a[1]}{b[1]}"
                first, second = f"{base}:0", f"{base}:1"
                seq.extend([first, second] if x == a else [second, first])
            os_[(i, j, k, l)] = CycleSpec(kind="O", cycle=tuple(seq))
    return ys, os_


def _k33_span2_row(suite):
    t0 = time.perf_counter()
    g = build_family("k33")
    sub = _subdivide_edges(g, {e[0] for e in g.edges})
    cx = build_swiatkowski(sub, 4, reduce_vertices="all")
    ys, os_ = _k33_parts(g, sub)
    part_lists = [[ys[u], ys[v]] for u, v in itertools.combinations(ys, 2)]
    for (i, j, k, l), o in os_.items():
        for v in ys:
            es, vs = _carrier(sub, o)
            es2, vs2 = _carrier(sub, ys[v])
            if not (es & es2) and not (vs & vs2):
                part_lists.append([o, ys[v]])
    got, ncyc = _dressed_span(cx, part_lists, 2, 19)
    return Row(suite, "k33 n=4 product span d=2", 19, got, got == 19,
               f"{ncyc} product classes", time.perf_counter() - t0)


def _k33_span3_row(suite):
    t0 = time.perf_counter()
    g = build_family("k33")
    sub = _subdivide_edges(g, {e[0] for e in g.edges})
    cx = build_swiatkowski(sub, 5, reduce_vertices="all")
    ys, os_ = _k33_parts(g, sub)
    part_lists = []
    for i in range(3):
        for j in range(3):
            ia, ib = [x for x in range(3) if x != i], [x for x in range(3) if x != j]
            o = os_[(ia[0], ia[1], ib[0], ib[1])]
            part_lists.append([ys[f"a{i}"], ys[f"b{j}"], o])
    got, ncyc = _dressed_span(cx, part_lists, 3, 9)
    beta3 = homology(cx, dims=3).betti(3)
    ok = got == 9 and beta3 == 10
    return Row(suite, "k33 n=5 product span d=3", "span 9 of beta_3 10",
               f"span {got} of beta_3 {beta3}", ok,
               f"{ncyc} product classes; one non-product generator",
               time.perf_counter() - t0)


def suite_generation():
    return _generation_rows("generation", extended=False)


def run_suite(name):
    if name == "paper-tables-core":
        return suite_paper_tables_core()
    if name == "paper-tables-extended":
        return suite_paper_tables_extended()
    if name == "relations":
        return suite_relations()
    if name == "cross-model":
        return suite_cross_model()
    if name == "formula-engine":
        return suite_formula_engine()
    if name == "generation":
        return suite_generation()
    raise ValueError(f"unknown suite {name!r}; choose from {SUITES}")
