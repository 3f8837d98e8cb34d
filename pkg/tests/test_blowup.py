"""Vertex blowup: family relationships up to degree-2 smoothing, chain-map
identities and exactness of the embedding/projection pair, and the
connecting-map rank bookkeeping."""

import networkx as nx
import pytest

from confhom.blowup import blowup, delta_rank_check, phi, psi, sequence_complexes
from confhom.complexes import Chain
from confhom.graph import Graph, GraphError, build_family
from confhom.homology import homology
from confhom.swiatkowski import build_swiatkowski, cell as scell


def smoothed(g: Graph) -> nx.MultiGraph:
    """Suppress degree-2 vertices; compare shapes up to homeomorphism."""
    m = nx.MultiGraph()
    m.add_nodes_from(g.vertices)
    m.add_edges_from((u, v) for _, u, v in g.edges)
    while True:
        v = next((x for x in m.nodes
                  if m.degree(x) == 2 and not m.has_edge(x, x)), None)
        if v is None:
            return m
        nbrs = [w for _, w in m.edges(v)]
        m.remove_node(v)
        m.add_edge(nbrs[0], nbrs[1])


def homeomorphic(a: Graph, b: Graph) -> bool:
    return nx.is_isomorphic(smoothed(a), smoothed(b))


class TestBlowupGraphs:
    def test_wheel_hub_gives_net_shape(self):
        ctx = blowup(build_family("wheel:5"), "h")
        assert homeomorphic(ctx.blown, build_family("net:4"))
        assert len(ctx.blown.edges) == 8
        assert sum(1 for v in ctx.blown.vertices
                   if ctx.blown.degree(v) == 1) >= 4

    def test_net_closing_vertex_gives_linear_tree(self):
        ctx = blowup(build_family("net:4"), "w")
        assert homeomorphic(ctx.blown, build_family("linear_tree:4"))
        assert ctx.blown.is_connected()

    def test_y_hub_gives_three_disjoint_edges(self):
        ctx = blowup(build_family("star:3"), "c")
        assert len(ctx.blown.edges) == 3
        assert all(ctx.blown.degree(v) == 1 for v in ctx.blown.vertices)

    def test_edge_sets_in_bijection(self):
        g = build_family("wheel:6")
        ctx = blowup(g, "h")
        assert [e[0] for e in ctx.blown.edges] == [e[0] for e in g.edges]
        assert len([v for v in ctx.blown.vertices
                    if v not in g.vertices]) == g.degree("h")

    def test_leaf_rejected(self):
        with pytest.raises(GraphError):
            blowup(build_family("star:3"), "l0")


@pytest.fixture(scope="module")
def y_context():
    ctx = blowup(build_family("star:3"), "c")
    low, mid, tilde = sequence_complexes(ctx, 2)
    targets = {e: low for e in ctx.half_edges[1:]}
    return ctx, low, mid, tilde, targets


class TestChainMaps:
    def test_phi_injective_and_commutes(self, y_context):
        ctx, low, mid, tilde, targets = y_context
        for d in range(mid.top_dim + 1):
            seen = set()
            for key in mid.cells[d]:
                c = Chain(mid, d, {key: 1})
                img = phi(ctx, c, tilde)
                assert len(img.data) == 1
                seen.add(next(iter(img.data)))
                assert phi(ctx, c.boundary(), tilde) == img.boundary()
            assert len(seen) == mid.dims[d]

    def test_psi_commutes_and_is_onto(self, y_context):
        ctx, low, mid, tilde, targets = y_context
        for d in range(1, tilde.top_dim + 1):
            for key in tilde.cells[d]:
                c = Chain(tilde, d, {key: 1})
                lhs = psi(ctx, c.boundary(), targets)
                rhs = {e: ch.boundary() for e, ch in psi(ctx, c, targets).items()}
                assert lhs == rhs
        hit = {e: set() for e in ctx.half_edges[1:]}
        for d in range(tilde.top_dim + 1):
            for key in tilde.cells[d]:
                comp = psi(ctx, Chain(tilde, d, {key: 1}), targets)
                for e, ch in comp.items():
                    hit[e].update(ch.data)
        for e in hit:
            assert len(hit[e]) == sum(low.dims)

    def test_psi_recovers_factor(self, y_context):
        ctx, low, mid, tilde, targets = y_context
        bprime = scell(low, {}, {"e1": 1})
        enc = tilde.meta["encoding"]
        lifted = Chain(tilde, 1,
                       {enc.encode({"c": ("d", "e1")}, {"e1": 1}): -1})
        comp = psi(ctx, lifted, targets)
        assert comp["e1"] == bprime
        assert not comp["e2"]

    def test_exactness_on_chain_groups(self, y_context):
        ctx, low, mid, tilde, targets = y_context
        # image of phi = kernel of psi in every dimension: cells of the
        # reduced complex with an empty state at the blown vertex
        for d in range(tilde.top_dim + 1):
            img = {next(iter(phi(ctx, Chain(mid, d, {k: 1}), tilde).data))
                   for k in (mid.cells[d] if d <= mid.top_dim else [])}
            kernel = set()
            for key in tilde.cells[d]:
                comp = psi(ctx, Chain(tilde, d, {key: 1}), targets)
                if not any(comp[e] for e in comp):
                    kernel.add(key)
            assert img == kernel


class TestDeltaRank:
    def test_net_to_tree_connecting_map_is_injective(self):
        ctx = blowup(build_family("net:4"), "w")
        rep = delta_rank_check(ctx, 3, 1)
        assert rep.holds
        assert rep.rank_delta_d == rep.domain_rank_d  # injective
        assert rep.coker_rank_d == 8
        assert rep.ker_rank_d_minus_1 == 1

    @pytest.mark.slow
    def test_wheel_to_net_beta2(self):
        ctx = blowup(build_family("wheel:5"), "h")
        rep = delta_rank_check(ctx, 4, 2)
        assert rep.holds
        assert rep.beta_reduced == 22

    def test_above_top_dimension(self):
        ctx = blowup(build_family("wheel:5"), "h")
        rep = delta_rank_check(ctx, 2, 6)
        assert rep.holds
        assert rep.beta_reduced == 0
        assert rep.coker_rank_d == 0 and rep.ker_rank_d_minus_1 == 0

    def test_reduced_homology_matches_plain(self):
        g = build_family("net:3")
        ctx = blowup(g, "w")
        _, _, tilde = sequence_complexes(ctx, 2)
        h1 = homology(tilde)
        h2 = homology(build_swiatkowski(g, 2))
        for d in set(h1.dims) | set(h2.dims):
            assert h1.betti(d) == h2.betti(d)
