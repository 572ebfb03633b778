"""Blocks: chord-diagram construction, enumeration, and gluing.

A block of degree 3d is determined by an abstract skeleton consisting of c
pairwise disjoint directed chords (black source to white sink), b inner
black vertices, and z bare real whites (zigzags), subject to b+c=d, z+c=3d
and, per region of the chord cut, z_i = c_i + 3*b_i.  Blocks are built by
blowing these skeletons up; gluing assembles larger dessins out of blocks.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import combinations_with_replacement
from typing import Optional

from .core_map import (
    DiskMap,
    MapError,
    build_map,
    canonical_code,
    edge_of,
    mirror,
    other_dart,
    relabel,
)
from .correspondence import dessin_from_skeleton
from .dessin import BOLD, DOTTED, SOLID, WHITE, real_part_code, validate_dessin
from .skeleton import BLACK, DIRECTED, SkeletonError, check_skeleton, is_typeI


class BlockError(MapError):
    pass


# ---------------------------------------------------------------------------
# specs and single-block construction


@dataclass(frozen=True)
class BlockSpec:
    """Chord-diagram data for one block.

    ``marks`` is the type-I shorthand: a cyclic word over O/J; chords and
    zigzags are derived.  Otherwise ``boundary`` lists tokens J (source), O
    (sink), Z (zigzag) in cyclic order, ``chords`` pairs J-positions with
    O-positions, and ``blacks`` gives one boundary gap per inner black,
    placing it in the region behind that gap.
    """

    d: int
    marks: Optional[str] = None
    boundary: tuple = ()
    chords: tuple = ()
    blacks: tuple = ()

    def resolved(self) -> "BlockSpec":
        if self.marks is None:
            return self
        if sorted(self.marks.count(x) for x in "JO") != [self.d] * 2 or len(
            self.marks
        ) != 2 * self.d or set(self.marks) - {"J", "O"}:
            raise BlockError(
                f"type-I marks need {self.d} J's and {self.d} O's"
            )
        boundary, positions = [], []
        for mark in self.marks:
            positions.append(len(boundary))
            boundary.append(mark)
            boundary.append("Z")
        chords = tuple(
            (positions[i], positions[j])
            for i, j in _noncrossing_bipartite(self.marks)
        )
        return BlockSpec(self.d, None, tuple(boundary), chords, ())


def _noncrossing_bipartite(marks: str) -> list[tuple[int, int]]:
    """Pair each J with an O without crossings, stack-wise around the circle."""
    left = list(range(len(marks)))
    pairs = []
    while left:
        for k in range(len(left)):
            i, j = left[k], left[(k + 1) % len(left)]
            if marks[i] == "J" and marks[j] == "O":
                pairs.append((i, j))
                left.remove(i)
                left.remove(j)
                break
        else:
            raise BlockError("marks admit no noncrossing pairing")
    return pairs


def skeleton_from_spec(spec: BlockSpec) -> DiskMap:
    spec = spec.resolved()
    tokens, chords, blacks = spec.boundary, spec.chords, spec.blacks
    c, b, z = len(chords), len(blacks), tokens.count("Z")
    if b + c != spec.d:
        raise BlockError(f"constraint b+c=d violated: {b}+{c} != {spec.d}")
    if z + c != 3 * spec.d:
        raise BlockError(f"constraint z+c=3d violated: {z}+{c} != {3 * spec.d}")

    names, vt, rot = [], {}, {}
    for i, t in enumerate(tokens):
        if t not in "JOZ":
            raise BlockError(f"unknown boundary token {t!r}")
        name = {"J": "B", "O": "S", "Z": "z"}[t] + str(i)
        names.append(name)
        vt[name] = BLACK if t == "J" else WHITE
        rot[name] = []
    et, heads = {}, {}
    for k, (i, j) in enumerate(chords):
        if tokens[i] != "J" or tokens[j] != "O":
            raise BlockError(f"chord {k} must run from a J to an O position")
        e = f"c{k}"
        et[e] = DIRECTED
        heads[e] = e + ".1"
        rot[names[i]] = [e + ".0"]
        rot[names[j]] = [e + ".1"]
    anchors = {}
    for k, gap in enumerate(blacks):
        vt[f"V{k}"] = BLACK
        rot[f"V{k}"] = []
        anchors[f"V{k}"] = gap % len(tokens)
    try:
        sk = build_map(names, vt, rot, et, heads, [None] * len(names),
                       anchors=anchors)
        check_skeleton(sk)
    except (MapError, SkeletonError) as exc:
        raise BlockError(f"constraint-violation: {exc}") from exc
    return sk


def block_from_spec(spec: BlockSpec) -> DiskMap:
    return dessin_from_skeleton(skeleton_from_spec(spec))


def cubic_block(kind: str) -> DiskMap:
    """The degree-3 block of the given kind ("I" or "II")."""
    if kind == "I":
        return block_from_spec(BlockSpec(1, marks="JO"))
    if kind == "II":
        return block_from_spec(
            BlockSpec(1, boundary=("Z", "Z", "Z"), blacks=(0,))
        )
    raise BlockError(f"unknown cubic block kind {kind!r}")


# ---------------------------------------------------------------------------
# enumeration


def _noncrossing_matchings(c: int) -> list[list[tuple[int, int]]]:
    """All noncrossing perfect matchings on the cyclic points 0..2c-1."""
    def rec(points):
        if not points:
            return [[]]
        out = []
        p = points[0]
        for t in range(1, len(points), 2):
            q = points[t]
            inside, outside = points[1:t], points[t + 1:]
            for a in rec(inside):
                for bq in rec(outside):
                    out.append([(p, q)] + a + bq)
        return out

    return rec(list(range(2 * c)))


def _regions_of_matching(c: int, match: dict) -> list[list[int]]:
    """Group the boundary arcs by the region of the chord cut they bound."""
    seen, regions = set(), []
    for start in range(2 * c):
        if start in seen:
            continue
        cycle, a = [], start
        while a not in seen:
            seen.add(a)
            cycle.append(a)
            a = match[(a + 1) % (2 * c)]
        regions.append(cycle)
    return regions


def _compositions(total: int, parts: int):
    if parts == 0:
        if total == 0:
            yield ()
        return
    if parts == 1:
        yield (total,)
        return
    for first in range(total + 1):
        for rest in _compositions(total - first, parts - 1):
            yield (first,) + rest


def enumerate_blocks(d: int, kind: Optional[str] = None, *,
                     max_degree: int = 5) -> list[DiskMap]:
    """All block skeletons of degree 3d up to disk homeomorphism."""
    if d > max_degree:
        raise BlockError(f"bound-exceeded: d={d} > {max_degree}")
    if kind not in (None, "all", "I", "II"):
        raise BlockError(f"unknown kind filter {kind!r}")
    out, codes = [], set()
    for sk in _candidate_skeletons(d):
        if kind == "I" and not is_typeI(sk).ok:
            continue
        if kind == "II" and is_typeI(sk).ok:
            continue
        code = canonical_code(sk)
        if code not in codes:
            codes.add(code)
            out.append(sk)
    out.sort(key=canonical_code)
    return out


def _candidate_skeletons(d: int):
    for c in range(d + 1):
        b, z = d - c, 3 * d - c
        if c == 0:
            yield skeleton_from_spec(
                BlockSpec(d, boundary=("Z",) * z, blacks=(0,) * b)
            )
            continue
        for matching in _noncrossing_matchings(c):
            match = {}
            for p, q in matching:
                match[p], match[q] = q, p
            regions = _regions_of_matching(c, match)
            region_of_arc = {}
            for ri, arcs in enumerate(regions):
                for a in arcs:
                    region_of_arc[a] = ri
            for src_mask in range(1 << c):
                token_of = {}
                for k, (p, q) in enumerate(matching):
                    s, t = (p, q) if src_mask >> k & 1 else (q, p)
                    token_of[s], token_of[t] = "J", "O"
                for assign in combinations_with_replacement(
                    range(len(regions)), b
                ):
                    zi = [len(arcs) for arcs in regions]  # c_i per region
                    for ri in assign:
                        zi[ri] += 3
                    yield from _fill_whites(
                        d, matching, match, token_of, regions,
                        region_of_arc, assign, zi,
                    )


def _fill_whites(d, matching, match, token_of, regions, region_of_arc,
                 assign, zi):
    c = len(matching)
    per_region = []
    for ri, arcs in enumerate(regions):
        per_region.append(list(_compositions(zi[ri], len(arcs))))

    def rec(ri, chosen):
        if ri == len(regions):
            yield from (_build_candidate(
                d, matching, token_of, regions, region_of_arc, assign, chosen
            ),)
            return
        for comp in per_region[ri]:
            yield from rec(ri + 1, chosen + [comp])

    yield from rec(0, [])


def _build_candidate(d, matching, token_of, regions, region_of_arc, assign,
                     chosen):
    c = len(matching)
    whites_after = {}
    for ri, arcs in enumerate(regions):
        for a, count in zip(arcs, chosen[ri]):
            whites_after[a] = count
    tokens, pos_of_point = [], {}
    for p in range(2 * c):
        pos_of_point[p] = len(tokens)
        tokens.append(token_of[p])
        tokens.extend("Z" * whites_after[p])
    chords = []
    for p, q in matching:
        s, t = (p, q) if token_of[p] == "J" else (q, p)
        chords.append((pos_of_point[s], pos_of_point[t]))
    black_gaps = tuple(
        pos_of_point[regions[ri][0]] for ri in assign
    )
    return skeleton_from_spec(
        BlockSpec(d, boundary=tuple(tokens), chords=tuple(chords),
                  blacks=black_gaps)
    )


# ---------------------------------------------------------------------------
# gluing


def _uniquified(g1: DiskMap, g2: DiskMap) -> DiskMap:
    taken_v, taken_e = set(g1.vertex_tags), set(g1.edge_tags)
    vmap, emap = {}, {}
    for v in g2.vertex_tags:
        name = v
        while name in taken_v:
            name += "_"
        taken_v.add(name)
        vmap[v] = name
    for e in g2.edge_tags:
        name = e
        while name in taken_e:
            name += "_"
        taken_e.add(name)
        emap[e] = name
    return relabel(g2, vmap, emap)


def _fresh(pool: set, prefix: str) -> str:
    k = 0
    while f"{prefix}{k}" in pool:
        k += 1
    pool.add(f"{prefix}{k}")
    return f"{prefix}{k}"


def _combined(g1: DiskMap, g2: DiskMap):
    vt = dict(g1.vertex_tags)
    vt.update(g2.vertex_tags)
    rot = {v: list(r) for v, r in g1.rotations.items()}
    rot.update({v: list(r) for v, r in g2.rotations.items()})
    et = dict(g1.edge_tags)
    et.update(g2.edge_tags)
    heads = dict(g1.edge_head)
    heads.update(g2.edge_head)
    return vt, rot, et, heads


def junction(g1: DiskMap, w1: str, g2: DiskMap, w2: str) -> DiskMap:
    """Genuine gluing along the zigzag parts holding one white each.

    The two whites fuse into an inner white on the seam; the seam endpoints
    become dotted monochrome vertices.
    """
    for g, w in ((g1, w1), (g2, w2)):
        if g.vertex_tags.get(w) != WHITE or not g.is_real(w):
            raise BlockError(f"invalid instruction: {w!r} is not a real white")
        if g.edge_tags[g.boundary_edges[g.boundary_pos(w)]] != DOTTED:
            raise BlockError(
                f"invalid instruction: {w!r} is not on a dotted pillar")
    g2 = _uniquified(g1, g2)
    w2 = w2 if w2 in g2.vertex_tags else next(
        v for v in g2.vertex_tags if v.rstrip("_") == w2
    )
    i1, i2 = g1.boundary_pos(w1), g2.boundary_pos(w2)
    xl1, xr1 = g1.prev_on_boundary(w1), g1.next_on_boundary(w1)
    xl2, xr2 = g2.prev_on_boundary(w2), g2.next_on_boundary(w2)
    el1 = g1.boundary_edges[i1 - 1]
    er1 = g1.boundary_edges[i1]
    el2 = g2.boundary_edges[i2 - 1]
    er2 = g2.boundary_edges[i2]
    inner1, inner2 = g1.rotations[w1][1], g2.rotations[w2][1]

    vt, rot, et, heads = _combined(g1, g2)
    pool_v, pool_e = set(vt), set(et)
    for w in (w1, w2):
        vt.pop(w)
        rot.pop(w)
    for e in (el1, er1, el2, er2):
        et.pop(e)
        heads.pop(e)
    Ma, Mb = _fresh(pool_v, "gm"), _fresh(pool_v, "gm")
    W = _fresh(pool_v, "gw")
    a1, a2 = _fresh(pool_e, "ge"), _fresh(pool_e, "ge")
    b2, b1 = _fresh(pool_e, "ge"), _fresh(pool_e, "ge")
    s1, s2 = _fresh(pool_e, "gs"), _fresh(pool_e, "gs")
    vt[Ma] = vt[Mb] = "mono"
    vt[W] = WHITE
    for e in (a1, a2, b2, b1, s1, s2):
        et[e] = DOTTED
    # boundary edges keep pointing away from the fused white
    heads[a1], heads[a2] = a1 + ".0", a2 + ".1"
    heads[b2], heads[b1] = b2 + ".0", b1 + ".1"
    heads[s1], heads[s2] = s1 + ".1", s2 + ".1"
    rot[xl1][0] = a1 + ".0"
    rot[xr2][-1] = a2 + ".1"
    rot[xl2][0] = b2 + ".0"
    rot[xr1][-1] = b1 + ".1"
    rot[Ma] = [a2 + ".0", s1 + ".1", a1 + ".1"]
    rot[Mb] = [b1 + ".0", s2 + ".1", b2 + ".1"]
    rot[W] = [s1 + ".0", inner2, s2 + ".0", inner1]

    bd1 = list(g1.boundary)
    be1 = (list(g1.boundary_edges) * 2)[i1 + 1:i1 + len(bd1) - 1]
    bd2 = list(g2.boundary)
    be2 = (list(g2.boundary_edges) * 2)[i2 + 1:i2 + len(bd2) - 1]
    boundary = (
        bd1[i1 + 1:] + bd1[:i1] + [Ma] + bd2[i2 + 1:] + bd2[:i2] + [Mb]
    )
    b_edges = be1 + [a1, a2] + be2 + [b2, b1]
    out = build_map(boundary, vt, rot, et, heads, b_edges)
    validate_dessin(out)
    return out


def cut_edge(g: DiskMap, kind: str, above: int, below: int) -> str:
    """First real edge of the given kind splitting its pillar (above, below).

    Gluing along a part of this edge cuts the pillar into a piece with
    ``above`` whites before the cut and ``below`` after, in boundary order.
    """
    n = len(g.boundary)
    delims = [i for i, v in enumerate(g.boundary)
              if g.vertex_tags[v] in (BLACK, "cross")]
    for a, b in zip(delims, delims[1:] + [delims[0] + n]):
        if g.edge_tags[g.boundary_edges[a % n]] != kind:
            continue
        whites = [i for i in range(a + 1, b)
                  if g.vertex_tags[g.boundary[i % n]] == WHITE]
        for t in range(a, b):
            pre = sum(1 for i in whites if i <= t)
            if (pre, len(whites) - pre) == (above, below):
                return g.boundary_edges[t % n]
    raise BlockError(
        f"no {kind} pillar admits a ({above}, {below}) cut"
    )


def glue_edges(g1: DiskMap, e1: str, g2: DiskMap, e2: str, *,
               genuine: bool = True) -> DiskMap:
    """Glue two dessins along interior parts of the real edges e1, e2.

    Genuine gluing leaves a monochrome bridge across the seam; artificial
    gluing mirrors the second dessin and fuses the edge halves seamlessly.
    """
    for g, e in ((g1, e1), (g2, e2)):
        if e not in set(g.boundary_edges):
            raise BlockError(f"invalid instruction: {e!r} is not a real edge")
    kind = g1.edge_tags[e1]
    if g2.edge_tags[e2] != kind:
        raise BlockError("invalid instruction: glued edges must have one kind")
    if not genuine:
        g2 = mirror(g2)
    g2 = _uniquified(g1, g2)
    e2 = e2 if e2 in g2.edge_tags else next(
        e for e in g2.edge_tags if e.rstrip("_") == e2
    )
    i1 = list(g1.boundary_edges).index(e1)
    i2 = list(g2.boundary_edges).index(e2)
    n1, n2 = len(g1.boundary), len(g2.boundary)
    A, B = g1.boundary[i1], g1.boundary[(i1 + 1) % n1]
    C, D = g2.boundary[i2], g2.boundary[(i2 + 1) % n2]
    headB = g1.head_vertex(e1) == B
    headC = g2.head_vertex(e2) == C
    if genuine and headB != headC:
        raise BlockError(
            "invalid instruction: genuine gluing needs the glued edges "
            "directed against each other"
        )
    if not genuine and headB == headC:
        raise BlockError(
            "invalid instruction: artificial gluing needs the glued edges "
            "aligned after mirroring"
        )

    vt, rot, et, heads = _combined(g1, g2)
    pool_v, pool_e = set(vt), set(et)
    for e in (e1, e2):
        et.pop(e)
        heads.pop(e)

    bd1, be1 = list(g1.boundary), list(g1.boundary_edges)
    bd2, be2 = list(g2.boundary), list(g2.boundary_edges)
    mid1 = bd1[i1 + 1:] + bd1[:i1 + 1]  # B ... A
    mide1 = be1[i1 + 1:] + be1[:i1]
    mid2 = bd2[i2 + 1:] + bd2[:i2 + 1]  # D ... C
    mide2 = be2[i2 + 1:] + be2[:i2]

    if genuine:
        Ma, Mb = _fresh(pool_v, "gm"), _fresh(pool_v, "gm")
        vt[Ma] = vt[Mb] = "mono"
        e1a, e2a = _fresh(pool_e, "ge"), _fresh(pool_e, "ge")
        e2b, e1b = _fresh(pool_e, "ge"), _fresh(pool_e, "ge")
        s = _fresh(pool_e, "gs")
        for e in (e1a, e2a, e2b, e1b, s):
            et[e] = kind
        heads[e1a] = e1a + (".1" if headB else ".0")
        heads[e1b] = e1b + (".1" if headB else ".0")
        heads[e2a] = e2a + (".0" if headC else ".1")
        heads[e2b] = e2b + (".0" if headC else ".1")
        heads[s] = s + (".1" if headB else ".0")
        rot[A][0] = e1a + ".0"
        rot[D][-1] = e2a + ".1"
        rot[C][0] = e2b + ".0"
        rot[B][-1] = e1b + ".1"
        rot[Ma] = [e2a + ".0", s + ".0", e1a + ".1"]
        rot[Mb] = [e1b + ".0", s + ".1", e2b + ".1"]
        boundary = mid1 + [Ma] + mid2 + [Mb]
        b_edges = mide1 + [e1a, e2a] + mide2 + [e2b, e1b]
    else:
        f_a, f_b = _fresh(pool_e, "ge"), _fresh(pool_e, "ge")
        et[f_a] = et[f_b] = kind
        heads[f_a] = f_a + (".1" if headB else ".0")
        heads[f_b] = f_b + (".1" if headB else ".0")
        rot[A][0] = f_a + ".0"
        rot[D][-1] = f_a + ".1"
        rot[C][0] = f_b + ".0"
        rot[B][-1] = f_b + ".1"
        boundary = mid1 + mid2
        b_edges = mide1 + [f_a] + mide2 + [f_b]
    out = build_map(boundary, vt, rot, et, heads, b_edges)
    validate_dessin(out)
    return out


# ---------------------------------------------------------------------------
# plans


@dataclass(frozen=True)
class GluePlan:
    """Blocks plus gluing instructions whose graph must be a tree.

    Each instruction is (op, i, site_i, j, site_j) with op one of
    "junction", "genuine", "artificial"; sites name a white (junction) or a
    real edge of the original block.
    """

    blocks: tuple
    instructions: tuple = ()


def assemble(plan: GluePlan) -> tuple[DiskMap, str]:
    """Carry the plan out and return the glued dessin with its real part."""
    n = len(plan.blocks)
    if n == 0:
        raise BlockError("empty plan")
    comp = list(range(n))

    def find(i):
        while comp[i] != i:
            comp[i] = comp[comp[i]]
            i = comp[i]
        return i

    # prefix per block so site names stay unambiguous across merges
    dessins = {}
    for i, g in enumerate(plan.blocks):
        if n > 1:
            g = relabel(
                g,
                {v: f"g{i}_{v}" for v in g.vertex_tags},
                {e: f"g{i}_{e}" for e in g.edge_tags},
            )
        dessins[i] = g

    def locate(name, i, pool):
        full = f"g{i}_{name}" if n > 1 else name
        if full not in pool:
            raise BlockError(f"site {name!r} not found in block {i}")
        return full

    for op, i, site_i, j, site_j in plan.instructions:
        ri, rj = find(i), find(j)
        if ri == rj:
            raise BlockError("non-tree plan: instruction closes a cycle")
        gi, gj = dessins[ri], dessins[rj]
        if op == "junction":
            wi = locate(site_i, i, gi.vertex_tags)
            wj = locate(site_j, j, gj.vertex_tags)
            merged = junction(gi, wi, gj, wj)
        elif op in ("genuine", "artificial"):
            ei = locate(site_i, i, gi.edge_tags)
            ej = locate(site_j, j, gj.edge_tags)
            merged = glue_edges(gi, ei, gj, ej, genuine=op == "genuine")
        else:
            raise BlockError(f"unknown instruction {op!r}")
        comp[rj] = ri
        dessins[ri] = merged
        del dessins[rj]
    if len(dessins) != 1:
        raise BlockError("non-tree plan: blocks remain disconnected")
    (out,) = dessins.values()
    validate_dessin(out)
    return out, real_part_code(out)
