"""Retriangulation pipeline producing a 2-neighborly triangulation together
with a spanning simple tree through a codimension-three face.

The pipeline has three stages.  First a spanning simple tree is built from a
facet walk: a dual-graph traversal unfolds into an abstract simple tree with
a dimension-preserving simplicial map onto the complex, and central
retriangulations of embedded vertex stars make the map injective on vertices.
Second, repeating the stage inside successive links concentrates the tree's
facets on a common face of codimension three.  Third, missing edges are
created one at a time: a pair of retriangulations brings the two nonadjacent
vertices to distance two on a spanning circle link, a single one-move inserts
the edge, and two more retriangulations restore the spanning-circle state.
Each cycle removes exactly one nonedge, which is the termination measure.

Every intermediate complex is homeomorphic to the input, so the Betti vector
is preserved; callers verify this on the output.
"""

from __future__ import annotations

from dataclasses import dataclass

from .complexes import SimplicialComplex, face, face_key, fresh_vertices, label_key
from .constructions import (
    BistellarMove,
    MoveLog,
    _spanning_circle,
    _tree_from_circle,
    apply_bistellar,
)
from .errors import HypothesisNotMet, NotASphereLink, TreeNotFound
from .homology import RATIONALS, FieldSpec, manifold_report
from .trees import SimpleTree, central_retriangulation, find_spanning_tree_in_link, validate_simple_tree


@dataclass(frozen=True)
class RefitResult:
    complex: SimplicialComplex
    tree: SimpleTree
    rho: tuple  # codimension-three face contained in every tree facet


def _pairs(seq):
    return list(zip(seq, seq[1:]))


# ---------------------------------------------------------------------------
# stage one: spanning simple tree in a link (or the whole complex for W = ())


def _grow_tree_map(L: SimplicialComplex):
    """Facet walk covering all vertices of L, unfolded to an abstract simple
    tree: returns (abstract_facets, phi) with abstract vertices 0, 1, 2, ...
    and phi mapping them onto L's vertices.  Each facet of L is used at most
    once, so the induced map is injective on facets."""
    facets = sorted(L.facets, key=face_key)
    ridge_to_facets: dict = {}
    for f in facets:
        for j in range(len(f)):
            ridge_to_facets.setdefault(f[:j] + f[j + 1:], []).append(f)
    start = facets[0]
    phi = {i: v for i, v in enumerate(start)}
    abstract = [tuple(range(len(start)))]
    host_of = {start: abstract[0]}
    covered = set(start)
    allverts = set(L.vertices)
    next_id = len(start)
    crossed = set()
    while covered != allverts:
        best = None
        for hf, af in host_of.items():
            pos = {phi[i]: i for i in af}
            for j in range(len(hf)):
                ridge = hf[:j] + hf[j + 1:]
                if (hf, ridge) in crossed:
                    continue
                others = [g for g in ridge_to_facets.get(ridge, ()) if g != hf]
                if len(others) != 1:
                    continue
                g = others[0]
                if g in host_of:
                    continue
                gain = len(set(g) - covered)
                key = (-gain, face_key(g))
                if best is None or key < best[0]:
                    best = (key, hf, ridge, g, pos)
        if best is None:
            raise HypothesisNotMet("facet walk cannot reach every vertex; link is not a closed manifold")
        _, hf, ridge, g, pos = best
        new_host_vertex = next(v for v in g if v not in ridge)
        af_new = tuple(sorted(pos[v] for v in ridge)) + (next_id,)
        phi[next_id] = new_host_vertex
        abstract.append(af_new)
        host_of[g] = af_new
        crossed.add((hf, ridge))
        crossed.add((g, ridge))
        covered |= set(g)
        next_id += 1
    return abstract, phi


def _tree_in_link(K: SimplicialComplex, W: tuple, field: FieldSpec, log: MoveLog | None):
    """Spanning simple tree of the link of W, possibly after central
    retriangulations of K; returns (K', ordered link facets)."""
    L = K.link(W) if W else K
    abstract, phi = _grow_tree_map(L)
    tverts_in_order = sorted(phi)

    def multiplicity():
        count: dict = {}
        for v in phi.values():
            count[v] = count.get(v, 0) + 1
        return count

    while True:
        count = multiplicity()
        bad = [t for t in tverts_in_order if count[phi[t]] >= 2]
        if not bad:
            break
        fixed = False
        for y in reversed(bad):
            star = [af for af in abstract if y in af]
            starverts = set().union(*(set(af) for af in star))
            images = [phi[t] for t in starverts]
            if len(set(images)) != len(images):
                continue  # star not embedded; try an earlier vertex
            ball_facets = [face(tuple(W) + tuple(phi[t] for t in af)) for af in star]
            w = fresh_vertices(K, 1)[0]
            K = central_retriangulation(K, SimplicialComplex(ball_facets), w, field=field)
            if log is not None:
                log.record("central_retriangulation",
                           {"ball": [list(f) for f in ball_facets], "vertex": w}, K)
            phi[y] = w
            fixed = True
            break
        if not fixed:
            raise HypothesisNotMet("no vertex with an embedded star available for relabeling")
    link_facets = [face(tuple(phi[t] for t in af)) for af in abstract]
    return K, link_facets


# ---------------------------------------------------------------------------
# stage two: concentrate the tree on a codimension-three face


def _concentrated_tree(K: SimplicialComplex, field: FieldSpec, log: MoveLog | None):
    """Returns (K', W, link_facets): W is a (d-3)-face of K' and the link
    facets form a spanning simple 2-tree of the link of W."""
    d = K.d
    K, tree_facets = _tree_in_link(K, (), field, log)
    W: tuple = ()
    for _ in range(d - 3):
        ambient = validate_simple_tree(K, [face(W + f) for f in tree_facets])
        if not ambient.is_spanning():
            raise HypothesisNotMet("stage tree is not spanning")
        w = fresh_vertices(K, 1)[0]
        K = central_retriangulation(K, ambient, w, verify_ball=False)
        if log is not None:
            log.record("central_retriangulation",
                       {"ball": [list(f) for f in ambient.facets], "vertex": w}, K)
        W = face(W + (w,))
        K, tree_facets = _tree_in_link(K, W, field, log)
    return K, W, tree_facets


# ---------------------------------------------------------------------------
# stage three: insert the missing edges


def _arc(circle: list, a, b) -> list:
    """Vertices strictly between a and b walking forward around the circle."""
    i = circle.index(a)
    out = []
    j = (i + 1) % len(circle)
    while circle[j] != b:
        out.append(circle[j])
        j = (j + 1) % len(circle)
    return out


def _crt_tree(K, facets, log, field):
    tree = validate_simple_tree(K, facets)
    w = fresh_vertices(K, 1)[0]
    K2 = central_retriangulation(K, tree, w, verify_ball=False)
    if log is not None:
        log.record("central_retriangulation",
                   {"ball": [list(f) for f in tree.facets], "vertex": w}, K2)
    return K2, w


def _insert_edge(K, rho2, circle, x, y, field, log):
    """One full cycle: make x and y adjacent, return (K', rho2', circle')."""
    arc_xy = _arc(circle, x, y)
    arc_yx = _arc(circle, y, x)
    if not arc_xy or not arc_yx:
        raise HypothesisNotMet("nonedge endpoints adjacent on the circle")
    if len(arc_xy) == 1:
        sep, z_arc, rho_star = arc_xy[0], list(reversed(arc_yx)), tuple(rho2)
    elif len(arc_yx) == 1:
        sep, z_arc, rho_star = arc_yx[0], arc_xy, tuple(rho2)
    else:
        members = sorted(rho2, key=label_key)
        w1r, w0r = members[0], members[1]
        rho_p0 = tuple(v for v in rho2 if v not in (w1r, w0r))
        v_list, u_list = arc_xy, arc_yx
        path_all = [x] + v_list + [y] + u_list
        K, w2 = _crt_tree(K, [face(tuple(rho2) + p) for p in _pairs(path_all)], log, field)
        fan1 = [face(rho_p0 + (w1r,) + p) for p in _pairs([x] + v_list + [y])]
        fan2 = [face(rho_p0 + (w0r,) + p) for p in _pairs([v_list[-1], y] + u_list)]
        K, w3 = _crt_tree(K, [face(f + (w2,)) for f in fan1 + fan2], log, field)
        rho_star = face(rho_p0 + (w2, w3))
        sep = w1r
        z_arc = v_list + [w0r] + list(reversed(u_list))
    move = BistellarMove(face(tuple(rho_star) + (sep,)), (x, y))
    K = apply_bistellar(K, move)
    if log is not None:
        log.record("bistellar", {"f": list(move.F), "g": list(move.G)}, K)
    members = sorted(rho_star, key=label_key)
    wa, wb = members[0], members[1]
    rho_p0b = tuple(v for v in rho_star if v not in (wa, wb))
    P4 = [x, y] + list(reversed(z_arc))
    t4_base = [face(rho_p0b + (wa,) + p) for p in _pairs(P4)] + [face(rho_p0b + (x, sep, y))]
    K, wc = _crt_tree(K, [face(f + (wb,)) for f in t4_base], log, field)
    s4 = t4_base + [face(rho_p0b + (y, sep, wb))]
    K, wd = _crt_tree(K, [face(f + (wc,)) for f in s4], log, field)
    rho2_new = face(rho_p0b + (wc, wd))
    return K, rho2_new, _spanning_circle(K, rho2_new)


def two_neighborly_refit(
    K: SimplicialComplex,
    field: FieldSpec = RATIONALS,
    log: MoveLog | None = None,
    verify_input: bool = True,
    seed: int | None = None,
    trace: list | None = None,
) -> RefitResult:
    """Produce a 2-neighborly triangulation of the same homology type with a
    spanning simple tree through a codimension-three face.

    A 2-neighborly input is returned unchanged when a spanning simple 2-tree
    is found in one of its codimension-three links.  Otherwise the cycle of
    retriangulations and one-moves runs until no nonedge remains; the nonedge
    count strictly decreases each cycle.
    """
    K.require_pure("refit")
    if K.d < 4:
        raise HypothesisNotMet("refit needs facet size d >= 4")
    if verify_input:
        rep = manifold_report(K, field)
        if not rep.closed:
            raise HypothesisNotMet("refit needs a connected closed homology manifold")
    if K.is_i_neighborly(2):
        for rho in sorted(K.all_faces(K.d - 4), key=face_key):
            try:
                link_tree = find_spanning_tree_in_link(K, rho, node_budget=20_000, seed=seed)
            except (TreeNotFound, NotASphereLink):
                continue
            ambient = validate_simple_tree(K, [face(rho + f) for f in link_tree.facets])
            return RefitResult(K, ambient, rho)
    K, W, tree_facets = _concentrated_tree(K, field, log)
    if trace is not None:
        trace.append(("concentrated_tree", W, K))
    ambient = validate_simple_tree(K, [face(W + f) for f in tree_facets])
    if not ambient.is_spanning():
        raise HypothesisNotMet("concentrated tree is not spanning")
    if K.is_i_neighborly(2):
        return RefitResult(K, ambient, W)
    K, w = _crt_tree(K, list(ambient.facets), log, field)
    rho2 = face(tuple(W) + (w,))
    circle = _spanning_circle(K, rho2)
    remaining = K.nonedges()
    while remaining:
        x, y = remaining[0]
        if x not in circle or y not in circle:
            raise HypothesisNotMet("nonedge endpoints missing from the spanning circle")
        K, rho2, circle = _insert_edge(K, rho2, circle, x, y, field, log)
        if trace is not None:
            trace.append(("edge_inserted", (x, y), K))
        now = K.nonedges()
        if len(now) != len(remaining) - 1:
            raise HypothesisNotMet("edge-insertion cycle failed to remove exactly one nonedge")
        remaining = now
    tree = _tree_from_circle(K, rho2, circle)
    rho = face(sorted(rho2, key=label_key)[: K.d - 3])
    return RefitResult(K, tree, rho)
