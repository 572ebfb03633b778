"""Combinatorial maps in a closed disk.

A :class:`DiskMap` stores a graph embedded in a closed disk together with its
embedding data:

* ``boundary`` -- the cyclic (counterclockwise) sequence of vertices lying on
  the boundary circle ("real" vertices); everything else is "inner".
* ``rotations`` -- for every vertex, the sequence of darts (half-edges) leaving
  it in counterclockwise order.  At an inner vertex the sequence is cyclic; at
  a real vertex it is linear, sweeping through the interior of the disk from
  the forward boundary direction (toward the next boundary vertex) to the
  backward one.
* ``boundary_edges`` -- for every boundary gap (the arc between consecutive
  boundary vertices), either the edge covering it ("real" edge) or ``None``.
* ``anchors`` -- isolated inner vertices carry an anchor designating the
  region of the disk complement they live in.

Edges are named by strings without a dot; the two darts of edge ``e`` are
``e + ".0"`` and ``e + ".1"``.  An edge may carry an orientation, recorded as
``edge_head[e]``: the dart sitting at the head vertex (``None`` when the edge
is undirected).

The embedding is validated on construction: the face count obtained by
tracing orbits must satisfy Euler's relation for the sphere obtained by
capping the disk, which rules out rotation systems that do not describe a
planar disk picture.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from typing import Callable, Iterable, Mapping, Optional, Sequence, Union

Anchor = Union[str, int, None]  # dart id, boundary gap index, or ambient


class MapError(ValueError):
    """Raised when data does not describe a valid disk map."""


def darts_of(edge: str) -> tuple[str, str]:
    return edge + ".0", edge + ".1"


def edge_of(dart: str) -> str:
    e, _, end = dart.rpartition(".")
    if end not in ("0", "1"):
        raise MapError(f"malformed dart id {dart!r}")
    return e


def other_dart(dart: str) -> str:
    e, _, end = dart.rpartition(".")
    return e + (".1" if end == "0" else ".0")


# Virtual darts used only while tracing faces: the boundary arc of gap i is
# treated as an extra edge with a forward dart at boundary[i] and a backward
# dart at boundary[i+1].
def _arc_fwd(i: int) -> tuple:
    return ("arc", i, 0)


def _arc_bwd(i: int) -> tuple:
    return ("arc", i, 1)


@dataclass(frozen=True)
class Face:
    """One orbit of the face tracing.

    ``walk`` lists the steps clockwise around the face (the face lies to the
    *right* of every dart in it).  Real darts appear by id; boundary arcs as
    ``("arc", gap, end)`` tuples.
    """

    walk: tuple
    is_outer: bool

    @property
    def darts(self) -> tuple[str, ...]:
        return tuple(d for d in self.walk if isinstance(d, str))

    @property
    def arcs(self) -> tuple[int, ...]:
        return tuple(d[1] for d in self.walk if not isinstance(d, str) and d[2] == 1)


@dataclass(frozen=True)
class Region:
    """A connected component of the disk minus the embedded graph."""

    index: int
    face: Face
    isolated: tuple[str, ...]  # isolated inner vertices living here


@dataclass(frozen=True)
class DiskMap:
    boundary: tuple[str, ...]
    vertex_tags: Mapping[str, str]
    rotations: Mapping[str, tuple[str, ...]]
    edge_tags: Mapping[str, str]
    edge_head: Mapping[str, Optional[str]]
    boundary_edges: tuple[Optional[str], ...]
    anchors: Mapping[str, Anchor]

    # filled in by build_map
    _dart_vertex: Mapping[str, str] = field(default_factory=dict, repr=False)
    _faces: tuple[Face, ...] = field(default=(), repr=False)

    # -- basic accessors ---------------------------------------------------

    def vertices(self) -> tuple[str, ...]:
        return tuple(self.vertex_tags)

    def edges(self) -> tuple[str, ...]:
        return tuple(self.edge_tags)

    def is_real(self, v: str) -> bool:
        return v in self._boundary_index

    @property
    def _boundary_index(self) -> dict[str, int]:
        return {v: i for i, v in enumerate(self.boundary)}

    def boundary_pos(self, v: str) -> int:
        return self._boundary_index[v]

    def dart_vertex(self, dart: str) -> str:
        return self._dart_vertex[dart]

    def endpoints(self, edge: str) -> tuple[str, str]:
        a, b = darts_of(edge)
        return self._dart_vertex[a], self._dart_vertex[b]

    def head_vertex(self, edge: str) -> Optional[str]:
        h = self.edge_head[edge]
        return None if h is None else self._dart_vertex[h]

    def tail_vertex(self, edge: str) -> Optional[str]:
        h = self.edge_head[edge]
        return None if h is None else self._dart_vertex[other_dart(h)]

    def degree(self, v: str) -> int:
        return len(self.rotations[v])

    def incident_edges(self, v: str) -> tuple[str, ...]:
        return tuple(edge_of(d) for d in self.rotations[v])

    def is_real_edge(self, edge: str) -> bool:
        return edge in set(self.boundary_edges)

    def gap_of_edge(self, edge: str) -> Optional[int]:
        for i, e in enumerate(self.boundary_edges):
            if e == edge:
                return i
        return None

    def next_on_boundary(self, v: str) -> str:
        i = self.boundary_pos(v)
        return self.boundary[(i + 1) % len(self.boundary)]

    def prev_on_boundary(self, v: str) -> str:
        i = self.boundary_pos(v)
        return self.boundary[(i - 1) % len(self.boundary)]

    # -- faces and regions -------------------------------------------------

    def faces(self) -> tuple[Face, ...]:
        return self._faces

    def outer_face(self) -> Optional[Face]:
        for f in self._faces:
            if f.is_outer:
                return f
        return None

    def face_of(self, dart) -> Face:
        """The face lying to the right of ``dart`` (real or virtual arc)."""
        for f in self._faces:
            if dart in f.walk:
                return f
        raise MapError(f"dart {dart!r} not on any face")

    def inner_face_of_gap(self, gap: int) -> Face:
        """The region adjacent to boundary gap ``gap`` from inside the disk."""
        e = self.boundary_edges[gap]
        if e is None:
            return self.face_of(_arc_bwd(gap))
        # the forward dart of a real edge borders the outer face; the
        # backward one (closing the rotation at the far end) borders the
        # inside region.
        v_next = self.boundary[(gap + 1) % len(self.boundary)]
        return self.face_of(self.rotations[v_next][-1])

    def regions(self) -> tuple[Region, ...]:
        out = []
        idx = 0
        iso_by_face: dict[int, list[str]] = {}
        for v, anc in sorted(self.anchors.items()):
            f = self._resolve_anchor(anc)
            iso_by_face.setdefault(self._faces.index(f) if f is not None else -1, []).append(v)
        if not self._faces:
            # no darts at all: the whole interior is one region
            amb = Face(walk=(), is_outer=False)
            return (Region(0, amb, tuple(sorted(self.anchors))),)
        for fi, f in enumerate(self._faces):
            if f.is_outer:
                continue
            out.append(Region(idx, f, tuple(sorted(iso_by_face.get(fi, ())))))
            idx += 1
        return tuple(out)

    def region_of_face(self, face: Face) -> Region:
        for r in self.regions():
            if r.face is face or r.face.walk == face.walk:
                return r
        raise MapError("face has no region (outer face?)")

    def _resolve_anchor(self, anc: Anchor) -> Optional[Face]:
        if anc is None:
            return None
        if isinstance(anc, int):
            return self.inner_face_of_gap(anc)
        return self.face_of(anc)

    # -- derived maps --------------------------------------------------------

    def to_dict(self) -> dict:
        return {
            "boundary": list(self.boundary),
            "vertex_tags": dict(self.vertex_tags),
            "rotations": {v: list(r) for v, r in self.rotations.items()},
            "edge_tags": dict(self.edge_tags),
            "edge_head": dict(self.edge_head),
            "boundary_edges": list(self.boundary_edges),
            "anchors": dict(self.anchors),
        }


def build_map(
    boundary: Sequence[str],
    vertex_tags: Mapping[str, str],
    rotations: Mapping[str, Sequence[str]],
    edge_tags: Mapping[str, str],
    edge_head: Mapping[str, Optional[str]],
    boundary_edges: Sequence[Optional[str]],
    anchors: Mapping[str, Anchor] = (),
) -> DiskMap:
    """Validate the embedding data and assemble a :class:`DiskMap`.

    Raises :class:`MapError` when the data is inconsistent or when the
    rotation system does not describe a planar picture in the disk (checked
    via Euler's relation on the capped sphere).
    """
    boundary = tuple(boundary)
    vertex_tags = dict(vertex_tags)
    rotations = {v: tuple(r) for v, r in rotations.items()}
    edge_tags = dict(edge_tags)
    edge_head = {e: edge_head.get(e) for e in edge_tags}
    boundary_edges = tuple(boundary_edges)
    anchors = dict(anchors)

    if len(set(boundary)) != len(boundary):
        raise MapError("repeated vertex on the boundary")
    for v in boundary:
        if v not in vertex_tags:
            raise MapError(f"boundary vertex {v!r} has no tag")
    if set(rotations) != set(vertex_tags):
        raise MapError("rotations and vertex_tags disagree on the vertex set")
    if len(boundary_edges) != len(boundary):
        raise MapError("boundary_edges must list one entry per boundary gap")

    for e in edge_tags:
        if "." in e:
            raise MapError(f"edge id {e!r} may not contain '.'")

    dart_vertex: dict[str, str] = {}
    for v, rot in rotations.items():
        for d in rot:
            if d in dart_vertex:
                raise MapError(f"dart {d!r} appears twice")
            if edge_of(d) not in edge_tags:
                raise MapError(f"dart {d!r} refers to unknown edge")
            dart_vertex[d] = v
    for e in edge_tags:
        a, b = darts_of(e)
        if a not in dart_vertex or b not in dart_vertex:
            raise MapError(f"edge {e!r} is missing a dart in the rotations")
        h = edge_head[e]
        if h is not None and h not in (a, b):
            raise MapError(f"edge_head of {e!r} is not one of its darts")

    # real edges sit at the extreme positions of the rotations of their
    # endpoints: forward dart first, backward dart last.
    seen_real = set()
    for i, e in enumerate(boundary_edges):
        if e is None:
            continue
        if e in seen_real:
            raise MapError(f"edge {e!r} assigned to two boundary gaps")
        seen_real.add(e)
        u = boundary[i]
        w = boundary[(i + 1) % len(boundary)]
        if not rotations[u] or not rotations[w]:
            raise MapError(f"real edge {e!r} endpoints lack darts")
        du = rotations[u][0]
        dw = rotations[w][-1]
        if edge_of(du) != e or dw != other_dart(du):
            raise MapError(
                f"real edge {e!r} must open the rotation at {u!r} and close it at {w!r}"
            )

    real_set = set(boundary)
    for v in vertex_tags:
        if v in real_set:
            continue
        if not rotations[v] and v not in anchors:
            raise MapError(f"isolated inner vertex {v!r} needs an anchor")
        if rotations[v] and v in anchors:
            raise MapError(f"vertex {v!r} has darts and must not carry an anchor")
    for v in anchors:
        if v in real_set or rotations.get(v):
            raise MapError(f"anchor given for non-isolated or real vertex {v!r}")

    faces = _trace_faces(boundary, rotations, boundary_edges, dart_vertex)

    if boundary:
        n_counted = sum(1 for v in vertex_tags if rotations[v] or v in real_set)
        n_arcs = sum(1 for e in boundary_edges if e is None)
        euler = n_counted - (len(edge_tags) + n_arcs) + len(faces)
        if euler != 2:
            raise MapError(
                "rotation system is not a connected planar embedding in the disk "
                f"(Euler characteristic of the capped sphere is {euler}, expected 2)"
            )
    else:
        if edge_tags:
            raise MapError("a map with edges needs a nonempty boundary")

    m = DiskMap(
        boundary=boundary,
        vertex_tags=vertex_tags,
        rotations=rotations,
        edge_tags=edge_tags,
        edge_head=edge_head,
        boundary_edges=boundary_edges,
        anchors=anchors,
        _dart_vertex=dart_vertex,
        _faces=faces,
    )
    # anchors must land in actual interior regions
    for v, anc in anchors.items():
        f = m._resolve_anchor(anc)
        if f is not None and f.is_outer:
            raise MapError(f"anchor of {v!r} resolves to the outer face")
        if f is None and faces:
            raise MapError(f"anchor of {v!r} is ambient but the map has faces")
    return m


def _trace_faces(boundary, rotations, boundary_edges, dart_vertex) -> tuple[Face, ...]:
    """Orbit decomposition of next = sigma ∘ alpha on the arc-capped map.

    With counterclockwise rotations this walks each face clockwise, so every
    face lies to the right of its darts; the outer face is the orbit entered
    through the outside corner of any real vertex.
    """
    if not boundary:
        return ()
    n = len(boundary)
    bpos = {v: i for i, v in enumerate(boundary)}

    full_rot: dict[str, list] = {}
    for v, rot in rotations.items():
        if v not in bpos:
            full_rot[v] = list(rot)
            continue
        i = bpos[v]
        cyc: list = list(rot)
        if boundary_edges[i] is None:
            cyc.insert(0, _arc_fwd(i))
        j = (i - 1) % n
        if boundary_edges[j] is None:
            cyc.append(_arc_bwd(j))
        full_rot[v] = cyc

    def vertex_of(d):
        if isinstance(d, str):
            return dart_vertex[d]
        _, i, end = d
        return boundary[i] if end == 0 else boundary[(i + 1) % n]

    def alpha(d):
        if isinstance(d, str):
            return other_dart(d)
        _, i, end = d
        return ("arc", i, 1 - end)

    def sigma(d):
        cyc = full_rot[vertex_of(d)]
        k = cyc.index(d)
        return cyc[(k + 1) % len(cyc)]

    all_darts = [d for v in sorted(full_rot) for d in full_rot[v]]
    # the forward slot of boundary[0] is entered from the outside corner,
    # so its orbit is the outer face.
    start0 = full_rot[boundary[0]][0]

    faces = []
    seen = set()
    order = [start0] + [d for d in all_darts if d != start0]
    for d0 in order:
        if d0 in seen:
            continue
        walk = []
        d = d0
        while True:
            walk.append(d)
            seen.add(d)
            d = sigma(alpha(d))
            if d == d0:
                break
            if d in seen:
                raise MapError("face tracing produced inconsistent orbits")
        faces.append(Face(walk=tuple(walk), is_outer=not faces))
    return tuple(faces)


# ---------------------------------------------------------------------------
# mutation helper


class MapBuilder:
    """Mutable scratch copy of a DiskMap; ``build()`` re-validates."""

    def __init__(self, m: Optional[DiskMap] = None):
        if m is None:
            self.boundary: list[str] = []
            self.vertex_tags: dict[str, str] = {}
            self.rotations: dict[str, list[str]] = {}
            self.edge_tags: dict[str, str] = {}
            self.edge_head: dict[str, Optional[str]] = {}
            self.boundary_edges: list[Optional[str]] = []
            self.anchors: dict[str, Anchor] = {}
        else:
            self.boundary = list(m.boundary)
            self.vertex_tags = dict(m.vertex_tags)
            self.rotations = {v: list(r) for v, r in m.rotations.items()}
            self.edge_tags = dict(m.edge_tags)
            self.edge_head = dict(m.edge_head)
            self.boundary_edges = list(m.boundary_edges)
            self.anchors = dict(m.anchors)

    def fresh_vertex(self, tag: str, prefix: str = "v") -> str:
        i = 0
        while f"{prefix}{i}" in self.vertex_tags:
            i += 1
        v = f"{prefix}{i}"
        self.vertex_tags[v] = tag
        self.rotations[v] = []
        return v

    def fresh_edge(self, tag: str, prefix: str = "e") -> str:
        i = 0
        while f"{prefix}{i}" in self.edge_tags:
            i += 1
        e = f"{prefix}{i}"
        self.edge_tags[e] = tag
        self.edge_head[e] = None
        return e

    def drop_edge(self, e: str) -> None:
        a, b = darts_of(e)
        for v in self.rotations:
            self.rotations[v] = [d for d in self.rotations[v] if d not in (a, b)]
        self.edge_tags.pop(e)
        self.edge_head.pop(e)
        self.boundary_edges = [x if x != e else None for x in self.boundary_edges]

    def drop_vertex(self, v: str) -> None:
        if self.rotations.get(v):
            raise MapError(f"cannot drop vertex {v!r} with incident darts")
        self.vertex_tags.pop(v)
        self.rotations.pop(v)
        self.anchors.pop(v, None)
        if v in self.boundary:
            i = self.boundary.index(v)
            n = len(self.boundary)
            if self.boundary_edges[i] is not None or self.boundary_edges[(i - 1) % n] is not None:
                raise MapError(f"cannot drop boundary vertex {v!r} with real edges")
            del self.boundary[i]
            del self.boundary_edges[i]

    def insert_on_boundary(self, v: str, gap: int) -> None:
        """Place existing vertex ``v`` on boundary gap ``gap`` (which must be free)."""
        if self.boundary_edges[gap] is not None:
            raise MapError("cannot insert a vertex across a real edge")
        self.boundary.insert(gap + 1, v)
        self.boundary_edges.insert(gap + 1, None)

    def build(self) -> DiskMap:
        return build_map(
            self.boundary,
            self.vertex_tags,
            self.rotations,
            self.edge_tags,
            self.edge_head,
            self.boundary_edges,
            self.anchors,
        )


# ---------------------------------------------------------------------------
# symmetries and relabelling


def mirror(m: DiskMap) -> DiskMap:
    """The reflection of the disk picture (boundary orientation reversed)."""
    n = len(m.boundary)
    boundary = tuple(reversed(m.boundary))
    rotations = {}
    for v, rot in m.rotations.items():
        rotations[v] = tuple(reversed(rot))
    # old gap i (between old positions i, i+1) becomes the gap between the
    # same two vertices in the reversed order.
    boundary_edges: list[Optional[str]] = [None] * n
    for i, e in enumerate(m.boundary_edges):
        if n:
            # new position of old boundary[i+1] is n-1-(i+1); the gap starting
            # there runs to old boundary[i].
            j = (n - 2 - i) % n
            boundary_edges[j] = e
    anchors: dict[str, Anchor] = {}
    for v, anc in m.anchors.items():
        if anc is None or isinstance(anc, str):
            # a dart anchor flips to the opposite side; re-anchor via the
            # other dart of the same edge, which borders the mirrored region.
            anchors[v] = anc if anc is None else other_dart(anc)
        else:
            anchors[v] = (n - 2 - anc) % n
    return build_map(
        boundary, m.vertex_tags, rotations, m.edge_tags, m.edge_head, boundary_edges, anchors
    )


def relabel(m: DiskMap, vmap: Mapping[str, str], emap: Mapping[str, str]) -> DiskMap:
    vmap = {v: vmap.get(v, v) for v in m.vertex_tags}
    emap = {e: emap.get(e, e) for e in m.edge_tags}

    def rd(d: str) -> str:
        e, _, end = d.rpartition(".")
        return emap[e] + "." + end

    return build_map(
        [vmap[v] for v in m.boundary],
        {vmap[v]: t for v, t in m.vertex_tags.items()},
        {vmap[v]: [rd(d) for d in rot] for v, rot in m.rotations.items()},
        {emap[e]: t for e, t in m.edge_tags.items()},
        {emap[e]: (None if h is None else rd(h)) for e, h in m.edge_head.items()},
        [None if e is None else emap[e] for e in m.boundary_edges],
        {vmap[v]: (rd(a) if isinstance(a, str) else a) for v, a in m.anchors.items()},
    )


# ---------------------------------------------------------------------------
# canonical codes

from . import _kernel  # noqa: E402  (selects compiled or pure labelling kernel)


def _int_tables(m: DiskMap):
    vtags = sorted(set(m.vertex_tags.values()))
    etags = sorted(set(m.edge_tags.values()))
    vt = {t: i for i, t in enumerate(vtags)}
    et = {t: i for i, t in enumerate(etags)}
    verts = list(m.boundary) + sorted(v for v in m.vertex_tags if not m.is_real(v))
    vid = {v: i for i, v in enumerate(verts)}
    edges = sorted(m.edge_tags)
    eid = {e: i for i, e in enumerate(edges)}

    def dart_int(d: str) -> int:
        e, _, end = d.rpartition(".")
        return 2 * eid[e] + int(end)

    rot_flat: list[int] = []
    rot_off = []
    for v in verts:
        rot_off.append(len(rot_flat))
        rot_flat.extend(dart_int(d) for d in m.rotations[v])
    rot_off.append(len(rot_flat))

    dart_vert = [0] * (2 * len(edges))
    for d, v in m._dart_vertex.items():
        dart_vert[dart_int(d)] = vid[v]
    etag_arr = [et[m.edge_tags[e]] for e in edges]
    vtag_arr = [vt[m.vertex_tags[v]] for v in verts]
    head_arr = []
    for e in edges:
        h = m.edge_head[e]
        head_arr.append(2 if h is None else int(h.rpartition(".")[2]))
    gap_edge = [-1 if e is None else eid[e] for e in m.boundary_edges]
    return {
        "vtags": tuple(vtags),
        "etags": tuple(etags),
        "verts": verts,
        "edges": edges,
        "nb": len(m.boundary),
        "rot_off": rot_off,
        "rot_flat": rot_flat,
        "dart_vert": dart_vert,
        "vtag_arr": vtag_arr,
        "etag_arr": etag_arr,
        "head_arr": head_arr,
        "gap_edge": gap_edge,
    }


def canonical_code(m: DiskMap, orientation_preserving: bool = False) -> tuple:
    """A complete invariant of the disk picture.

    Two maps get the same code exactly when some homeomorphism of the disk
    (orientation preserving or not, unless ``orientation_preserving`` is set)
    carries one onto the other respecting tags and edge orientations.
    """
    t = _int_tables(m)
    nb = t["nb"]
    if nb == 0:
        iso = tuple(sorted(m.vertex_tags[v] for v in m.anchors))
        return ("empty", t["vtags"], iso)

    flips = (0,) if orientation_preserving else (0, 1)
    best = None
    winners = []
    for flip in flips:
        for start in range(nb):
            code = _kernel.label_stream(
                nb,
                t["rot_off"],
                t["rot_flat"],
                t["dart_vert"],
                t["vtag_arr"],
                t["etag_arr"],
                t["head_arr"],
                t["gap_edge"],
                start,
                flip,
            )
            if best is None or code < best:
                best = code
                winners = [(start, flip)]
            elif code == best:
                winners.append((start, flip))

    if m.anchors:
        tail = min(_region_tail(m, t, s, f) for (s, f) in winners)
    else:
        tail = ()
    return (t["vtags"], t["etags"], tuple(best), tail)


def _region_tail(m: DiskMap, t: dict, start: int, flip: int) -> tuple:
    """Canonical placement of isolated inner vertices into labelled regions."""
    _, edge_num, dart0 = _kernel.label_numbering(
        t["nb"], t["rot_off"], t["rot_flat"], t["dart_vert"], t["vtag_arr"],
        t["etag_arr"], t["head_arr"], t["gap_edge"], start, flip,
    )
    nb = t["nb"]
    eid = {e: i for i, e in enumerate(t["edges"])}

    def gap_label(g: int) -> int:
        # boundary gap g joins original positions g, g+1; rename positions
        # under (start, flip) and take the gap index in the new labelling.
        if not flip:
            return (g - start) % nb
        return (start - g - 1) % nb

    def step_label(d) -> tuple:
        if isinstance(d, str):
            e, _, end = d.rpartition(".")
            ei = eid[e]
            side = 0 if 2 * ei + int(end) == dart0[ei] else 1
            if flip:
                # reflection exchanges the two sides of every edge
                side = 1 - side
            return (1, edge_num[ei], side)
        return (0, gap_label(d[1]), 0)

    sigs = {}
    for f in m.faces():
        seq = [step_label(d) for d in f.walk]
        if flip:
            seq.reverse()
        n = len(seq)
        sigs[f.walk] = min(tuple(seq[i:] + seq[:i]) for i in range(n)) if n else ()

    occupied: dict[tuple, list[str]] = {}
    for v, anc in m.anchors.items():
        f = m._resolve_anchor(anc)
        key = sigs[f.walk] if f is not None else ()
        occupied.setdefault(key, []).append(m.vertex_tags[v])
    return tuple(sorted((sig, tuple(sorted(tags))) for sig, tags in occupied.items()))


def maps_isomorphic(a: DiskMap, b: DiskMap, orientation_preserving: bool = False) -> bool:
    return canonical_code(a, orientation_preserving) == canonical_code(b, orientation_preserving)


# ---------------------------------------------------------------------------
# rewriting


@dataclass(frozen=True)
class RewriteRule:
    """A local move on disk maps.

    ``find_sites`` enumerates the applicable sites in a deterministic order;
    ``apply`` performs the surgery for one site and returns a fresh map.
    ``post_check``, when given, re-validates domain invariants after the
    surgery (on top of the embedding validation done by ``build_map``).
    """

    name: str
    find_sites: Callable[[DiskMap], list]
    apply: Callable[[DiskMap, object], DiskMap]
    post_check: Optional[Callable[[DiskMap], None]] = None
    note: str = ""


def apply_rewrite(m: DiskMap, rule: RewriteRule, site) -> DiskMap:
    sites = rule.find_sites(m)
    if site not in sites:
        raise MapError(f"site {site!r} is not applicable for rule {rule.name}")
    out = rule.apply(m, site)
    if rule.post_check is not None:
        rule.post_check(out)
    return out
