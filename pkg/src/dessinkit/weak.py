"""Weak equivalence: zigzag straightening and creation, and what they buy.

Straightening a zigzag pulls the two vertical tangents bounding it together.
On the dessin this is a local surgery: the zigzag's dotted pillar ``x - w - x``
disappears from the boundary, its two crosses fuse into one inner cross, and
the white ``w`` fuses with the real white sitting next to the source black of
``w``'s bold edge.  The fused pair survives as a single inner white, the
vacated spot on the bold pillar becomes a monochrome vertex feeding it, and a
new solid monochrome vertex on the boundary absorbs the inner cross's leg.

The counting rules force all of this: a straightening must remove exactly two
real crosses (one inner cross appears) and exactly two real whites (one inner
white appears), and a single real white can never go inner on its own.

Creating a zigzag is the literal inverse surgery.  Weak equivalence is then
generated by the elementary dessin moves together with these two operations.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Optional

from .core_map import (
    DiskMap,
    MapBuilder,
    MapError,
    apply_rewrite,
    canonical_code,
    edge_of,
    other_dart,
)
from .dessin import (
    BLACK,
    BOLD,
    CROSS,
    DESSIN_MOVES,
    DOTTED,
    MONO,
    SOLID,
    WHITE,
    _pop_edge,
    _replace_dart,
    degree,
    pillars,
    real_part_code,
    validate_dessin,
)


class WeakMoveError(MapError):
    pass


def _splice(m: DiskMap, repl: dict):
    """Rebuild boundary lists with consecutive vertex runs replaced.

    ``repl`` maps a tuple of consecutive boundary vertices to a pair
    ``(new_vertices, new_edges)`` where ``new_edges`` also covers the edge
    entering the run, so it has one more entry than ``new_vertices``.
    """
    n = len(m.boundary)
    starts = {}
    skip = set()
    for seg, (new_vs, new_es) in repl.items():
        i = m.boundary_pos(seg[0])
        starts[i] = (list(new_vs), list(new_es))
        for k in range(len(seg)):
            skip.add((i + k) % n)
    boundary, edges = [], []
    for i in range(n):
        if i in skip:
            if i in starts:
                new_vs, new_es = starts[i]
                boundary.extend(new_vs)
                edges.extend(new_es[1:])
            continue
        boundary.append(m.boundary[i])
        nxt = (i + 1) % n
        edges.append(starts[nxt][1][0] if nxt in starts else m.boundary_edges[i])
    return boundary, edges


# ---------------------------------------------------------------------------
# straightening


def _real_white_with_black_source(m: DiskMap, w: str):
    """The inner bold edge of a real white ``w`` and its (black) tail."""
    inner = m.rotations[w][1]
    e = edge_of(inner)
    if m.edge_tags[e] != BOLD:
        raise WeakMoveError("no-match: the zigzag white has no inner bold edge")
    y = m.dart_vertex(other_dart(inner))
    return e, y


def straighten_zigzag(m: DiskMap, z: str) -> DiskMap:
    """Remove the one-white zigzag pillar whose white vertex is ``z``.

    The fragment that must be present around ``z``: a bare zigzag
    ``cross - z - cross`` whose bold edge comes from an adjacent real black
    ``y``; a solid monochrome vertex on the far flank whose inner solid edge
    returns to ``y``; and a real white next to ``y`` on its bold side.
    Raises ``not-a-zigzag`` when ``z`` is not an odd dotted pillar white and
    ``no-match`` when the fragment does not match.
    """
    if m.vertex_tags.get(z) != WHITE or not m.is_real(z):
        raise WeakMoveError(f"not-a-zigzag: {z} is not a real white vertex")
    pillar = next((p for p in pillars(m) if z in p.vertices), None)
    if pillar is None or pillar.kind != DOTTED or pillar.whites % 2 == 0:
        raise WeakMoveError(f"not-a-zigzag: {z} does not sit on an odd dotted pillar")
    xa = m.prev_on_boundary(z)
    xb = m.next_on_boundary(z)
    if m.vertex_tags[xa] != CROSS or m.vertex_tags[xb] != CROSS:
        raise WeakMoveError("no-match: the zigzag is not bare (monochrome vertices remain)")

    iA_dart = m.rotations[z][1]
    if m.edge_tags[edge_of(iA_dart)] != BOLD:  # pragma: no cover - validated shape
        raise WeakMoveError("no-match: the zigzag white has no inner bold edge")
    y = m.dart_vertex(other_dart(iA_dart))
    if m.vertex_tags[y] != BLACK or not m.is_real(y):
        raise WeakMoveError("no-match: the bold edge of the zigzag comes from an inner black")

    # the black must flank the zigzag; the solid mono sits on the other flank
    if m.prev_on_boundary(xa) == y:
        s1 = m.next_on_boundary(xb)
    elif m.next_on_boundary(xb) == y:
        s1 = m.prev_on_boundary(xa)
    else:
        raise WeakMoveError("no-match: the source black does not flank the zigzag")
    if m.vertex_tags[s1] != MONO or m.edge_tags[edge_of(m.rotations[s1][1])] != SOLID:
        raise WeakMoveError("no-match: no solid monochrome vertex on the far flank")
    iD_dart = m.rotations[s1][1]
    if m.dart_vertex(other_dart(iD_dart)) != y or m.edge_head[edge_of(iD_dart)] == iD_dart:
        raise WeakMoveError("no-match: the flank monochrome vertex does not feed the black")
    iD_at_y = other_dart(iD_dart)

    # the real white next to y on its bold side, with its inner dotted leg
    gy = m.boundary_pos(y)
    n = len(m.boundary)
    if m.edge_tags[m.boundary_edges[gy]] == BOLD:
        wp = m.next_on_boundary(y)
    else:
        wp = m.prev_on_boundary(y)
    if m.vertex_tags[wp] != WHITE:
        raise WeakMoveError("no-match: the source black has no white bold neighbour")
    f_dart = m.rotations[wp][1]

    left = m.prev_on_boundary(xa) == y
    c = m.next_on_boundary(s1) if left else m.prev_on_boundary(s1)
    run = (xa, z, xb, s1) if left else (s1, xa, z, xb)
    if wp in run or c in run or c == wp:
        raise WeakMoveError("no-match: the fragment folds onto itself")
    v, u = m.prev_on_boundary(wp), m.next_on_boundary(wp)
    gw = m.boundary_pos(wp)
    b_l = m.boundary_edges[(gw - 1) % n]
    b_r = m.boundary_edges[gw]
    gr = m.boundary_pos(run[0])
    dead = [m.boundary_edges[(gr - 1 + k) % n] for k in range(5)]

    b = MapBuilder(m)
    mb = b.fresh_vertex(MONO, prefix="mw")
    xi = b.fresh_vertex(CROSS, prefix="ix")
    s_new = b.fresh_edge(SOLID)
    n_l = b.fresh_edge(BOLD)
    n_r = b.fresh_edge(BOLD)
    down = b.fresh_edge(BOLD)
    g_n = b.fresh_edge(DOTTED)
    t = b.fresh_edge(SOLID)

    # one monotone solid edge from c down into the black replaces the flank
    if left:
        _replace_dart(b, m.rotations[y][0], s_new + ".0")
        _replace_dart(b, m.rotations[c][-1], s_new + ".1")
    else:
        _replace_dart(b, m.rotations[c][0], s_new + ".1")
        _replace_dart(b, m.rotations[y][-1], s_new + ".0")
    b.edge_head[s_new] = s_new + ".0"

    # bold stretch v - mb - u replacing the migrating white; flow enters
    _replace_dart(b, m.rotations[v][0], n_l + ".0")
    _replace_dart(b, m.rotations[u][-1], n_r + ".1")
    b.rotations[mb] = [n_r + ".0", down + ".0", n_l + ".1"]
    b.edge_head[n_l] = n_l + ".1"
    b.edge_head[n_r] = n_r + ".0"

    # the fused inner white keeps z's name; the inner cross hangs between it
    # and the black, absorbing the old flank leg
    _replace_dart(b, iD_at_y, t + ".1")
    if left:
        b.rotations[z] = [iA_dart, f_dart, down + ".1", g_n + ".0"]
    else:
        b.rotations[z] = [iA_dart, g_n + ".0", down + ".1", f_dart]
    b.rotations[xi] = [g_n + ".1", t + ".0"]
    b.edge_head[down] = down + ".1"
    b.edge_head[g_n] = g_n + ".1"
    b.edge_head[t] = t + ".1"

    for e in dead + [edge_of(iD_dart), b_l, b_r]:
        _pop_edge(b, e)
    for x in (xa, xb, s1, wp):
        b.rotations.pop(x)
        b.vertex_tags.pop(x)

    b.boundary, b.boundary_edges = _splice(
        m, {run: ([], [s_new]), (wp,): ([mb], [n_l, n_r])}
    )
    out = b.build()
    validate_dessin(out)
    return out


# ---------------------------------------------------------------------------
# creating


def _creation_fragment(m: DiskMap, xi: str):
    """Decode the straightened fragment hanging off the inner cross ``xi``.

    Returns ``(y, w, mb, iA_dart, f_dart)``: the real black absorbing the
    cross's solid leg, the inner white feeding the cross, the boundary bold
    mono feeding the white, the white's bold dart coming from ``y``, and the
    spare inner dotted dart.
    """
    if m.vertex_tags.get(xi) != CROSS or m.is_real(xi):
        raise WeakMoveError(f"no-match: {xi} is not an inner cross vertex")
    t_dart = next(d for d in m.rotations[xi] if m.edge_tags[edge_of(d)] == SOLID)
    g_dart = next(d for d in m.rotations[xi] if m.edge_tags[edge_of(d)] == DOTTED)
    y = m.dart_vertex(other_dart(t_dart))
    if m.vertex_tags[y] != BLACK or not m.is_real(y):
        raise WeakMoveError("no-match: the solid leg does not reach a real black")
    w = m.dart_vertex(other_dart(g_dart))
    if m.vertex_tags[w] != WHITE or m.is_real(w):
        raise WeakMoveError("no-match: the inner cross is not fed by an inner white")
    f_dart = next(
        d
        for d in m.rotations[w]
        if m.edge_tags[edge_of(d)] == DOTTED and edge_of(d) != edge_of(g_dart)
    )
    bolds = [d for d in m.rotations[w] if m.edge_tags[edge_of(d)] == BOLD]
    tails = {m.vertex_tags[m.dart_vertex(other_dart(d))]: d for d in bolds}
    if set(tails) != {BLACK, MONO}:
        raise WeakMoveError("no-match: the inner white is not fed by one black and one mono")
    if m.dart_vertex(other_dart(tails[BLACK])) != y:
        raise WeakMoveError("no-match: the white's black source differs from the leg target")
    mb = m.dart_vertex(other_dart(tails[MONO]))
    if not m.is_real(mb):
        raise WeakMoveError("no-match: the feeding mono is not on the boundary")
    return y, w, mb, tails[BLACK], f_dart


def create_zigzag(m: DiskMap, site: str) -> DiskMap:
    """Grow a one-white zigzag back out of a straightened fragment.

    ``site`` names an inner cross whose solid leg reaches a real black and
    whose dotted leg comes from an inner white with one black and one
    monochrome bold source.  Exact inverse of :func:`straighten_zigzag`.
    """
    xi = site
    y, w, mb, iA_dart, f_dart = _creation_fragment(m, xi)
    t_dart = next(d for d in m.rotations[xi] if m.edge_tags[edge_of(d)] == SOLID)
    g_e = edge_of(next(d for d in m.rotations[xi] if m.edge_tags[edge_of(d)] == DOTTED))
    down_e = edge_of(
        next(d for d in m.rotations[w] if m.dart_vertex(other_dart(d)) == mb)
    )
    gy = m.boundary_pos(y)
    n = len(m.boundary)
    left = m.edge_tags[m.boundary_edges[gy]] == SOLID
    s_new = m.boundary_edges[gy] if left else m.boundary_edges[(gy - 1) % n]
    c = m.next_on_boundary(y) if left else m.prev_on_boundary(y)
    v, u = m.prev_on_boundary(mb), m.next_on_boundary(mb)
    gb = m.boundary_pos(mb)
    n_l, n_r = m.boundary_edges[(gb - 1) % n], m.boundary_edges[gb]

    b = MapBuilder(m)
    x_y = b.fresh_vertex(CROSS, prefix="x")
    x_s = b.fresh_vertex(CROSS, prefix="x")
    s1 = b.fresh_vertex(MONO, prefix="s")
    wp = b.fresh_vertex(WHITE, prefix="w")
    a_e = b.fresh_edge(SOLID)
    d1 = b.fresh_edge(DOTTED)
    d2 = b.fresh_edge(DOTTED)
    b_e = b.fresh_edge(SOLID)
    r_e = b.fresh_edge(SOLID)
    iD = b.fresh_edge(SOLID)
    b_l = b.fresh_edge(BOLD)
    b_r = b.fresh_edge(BOLD)

    # ends: a_e.0 at y, .1 at x_y; d1.0 at x_y, .1 at w; d2.0 at w, .1 at
    # x_s; b_e.0 at x_s, .1 at s1; r_e.0 at s1, .1 at c; iD.0 at s1, .1 at y
    b.edge_head[a_e] = a_e + ".0"
    b.edge_head[d1] = d1 + ".0"
    b.edge_head[d2] = d2 + ".1"
    b.edge_head[b_e] = b_e + ".1"
    b.edge_head[r_e] = r_e + ".0"
    b.edge_head[iD] = iD + ".1"
    if left:
        _replace_dart(b, m.rotations[y][0], a_e + ".0")
        _replace_dart(b, m.rotations[c][-1], r_e + ".1")
        b.rotations[x_y] = [d1 + ".0", a_e + ".1"]
        b.rotations[w] = [d2 + ".0", iA_dart, d1 + ".1"]
        b.rotations[x_s] = [b_e + ".0", d2 + ".1"]
        b.rotations[s1] = [r_e + ".0", iD + ".0", b_e + ".1"]
        run_vs, run_es = [x_y, w, x_s, s1], [a_e, d1, d2, b_e, r_e]
    else:
        _replace_dart(b, m.rotations[y][-1], a_e + ".0")
        _replace_dart(b, m.rotations[c][0], r_e + ".1")
        b.rotations[x_y] = [a_e + ".1", d1 + ".0"]
        b.rotations[w] = [d1 + ".1", iA_dart, d2 + ".0"]
        b.rotations[x_s] = [d2 + ".1", b_e + ".0"]
        b.rotations[s1] = [b_e + ".1", iD + ".0", r_e + ".0"]
        run_vs, run_es = [s1, x_s, w, x_y], [r_e, b_e, d2, d1, a_e]
    _replace_dart(b, other_dart(t_dart), iD + ".1")

    _replace_dart(b, m.rotations[v][0], b_l + ".0")
    _replace_dart(b, m.rotations[u][-1], b_r + ".1")
    b.rotations[wp] = [b_r + ".0", f_dart, b_l + ".1"]
    b.edge_head[b_l] = b_l + ".1"
    b.edge_head[b_r] = b_r + ".0"

    for e in (s_new, edge_of(t_dart), g_e, down_e, n_l, n_r):
        _pop_edge(b, e)
    for x in (xi, mb):
        b.rotations.pop(x)
        b.vertex_tags.pop(x)

    # splice the zigzag run into the gap left by the straight solid edge and
    # swap the bold mono for the regrown white
    g_ins = m.boundary_edges.index(s_new)
    boundary = list(m.boundary)
    edges = list(m.boundary_edges)
    boundary[g_ins + 1 : g_ins + 1] = run_vs
    edges[g_ins : g_ins + 1] = run_es
    gb2 = boundary.index(mb)
    boundary[gb2 : gb2 + 1] = [wp]
    edges[gb2 - 1] = b_l
    edges[gb2 % len(edges)] = b_r
    b.boundary, b.boundary_edges = boundary, edges
    out = b.build()
    validate_dessin(out)
    return out


def straighten_sites(m: DiskMap) -> list:
    """White vertices where :func:`straighten_zigzag` succeeds."""
    out = []
    for p in pillars(m):
        if p.kind != DOTTED or p.whites != 1:
            continue
        (w,) = [v for v in p.vertices if m.vertex_tags[v] == WHITE]
        try:
            straighten_zigzag(m, w)
        except MapError:
            continue
        out.append(w)
    return sorted(out)


def create_sites(m: DiskMap) -> list:
    """Inner cross vertices where :func:`create_zigzag` succeeds."""
    out = []
    for v in sorted(m.vertex_tags):
        if m.vertex_tags[v] != CROSS or m.is_real(v):
            continue
        try:
            create_zigzag(m, v)
        except MapError:
            continue
        out.append(v)
    return out


# ---------------------------------------------------------------------------
# scripts


@dataclass(frozen=True)
class WeakMoveScript:
    """A replayable sequence of weak-equivalence steps.

    Each entry is ``("move", rule_name, site)`` for an elementary dessin
    move, or ``("straighten", white)`` / ``("create", mono)`` for the zigzag
    operations.  Replay validates every intermediate dessin.
    """

    entries: tuple = ()

    def __add__(self, other: "WeakMoveScript") -> "WeakMoveScript":
        return WeakMoveScript(self.entries + other.entries)

    def replay(self, m: DiskMap) -> DiskMap:
        for entry in self.entries:
            m = apply_weak_step(m, entry)
        return m


def apply_weak_step(m: DiskMap, entry) -> DiskMap:
    op = entry[0]
    if op == "move":
        _, name, site = entry
        return apply_rewrite(m, DESSIN_MOVES[name], site)
    if op == "straighten":
        return straighten_zigzag(m, entry[1])
    if op == "create":
        return create_zigzag(m, entry[1])
    raise WeakMoveError(f"unknown weak step {op!r}")


# ---------------------------------------------------------------------------
# the jump-zigzag-oval transposition


def _cyclic_min(word: str) -> str:
    cands = []
    for w in (word, word[::-1]):
        cands.extend(w[i:] + w[:i] for i in range(len(w)))
    return min(cands)


def jzo_sites(m: DiskMap) -> list:
    """Zigzag whites whose two neighbouring pillars are a jump and an oval."""
    ps = pillars(m)
    k = len(ps)
    out = []
    for i, p in enumerate(ps):
        if p.shape != "Z" or p.whites != 1 or k < 3:
            continue
        around = {ps[(i - 1) % k].shape, ps[(i + 1) % k].shape}
        if around == {"J", "O"}:
            out.append(next(v for v in p.vertices if m.vertex_tags[v] == WHITE))
    return sorted(out)


def _macro_complete(s0: DiskMap, black_site, xi: str, expected: str, max_extra: int = 3):
    """Finish the transposition macro after the straightening step.

    Fixed skeleton: black-in at the emptied jump, black-out of the fused
    black over some boundary mono, zigzag creation at the stored inner
    cross -- with up to ``max_extra`` mono-modifications interleaved to
    re-route the feeder edges.  Returns the script entries or ``None``.
    """
    mono_rule = DESSIN_MOVES["mono-modification"]

    def monomods(m):
        for s in mono_rule.find_sites(m):
            yield ("move", "mono-modification", s), apply_rewrite(m, mono_rule, s)

    for budget in range(max_extra + 1):
        stack = [(s0, (), 0, budget)]
        seen = set()
        while stack:
            m, entries, stage, extra = stack.pop()
            key = (canonical_code(m), stage, extra)
            if key in seen:
                continue
            seen.add(key)
            if stage == 2:
                try:
                    out = create_zigzag(m, xi)
                except MapError:
                    out = None
                if out is not None and real_part_code(out) == expected:
                    return entries + (("create", xi),)
            if extra > 0:
                for step, m2 in monomods(m):
                    stack.append((m2, entries + (step,), stage, extra - 1))
            if stage == 0:
                rule = DESSIN_MOVES["black-in"]
                if black_site in rule.find_sites(m):
                    m2 = apply_rewrite(m, rule, black_site)
                    stack.append((m2, entries + (("move", "black-in", black_site),), 1, extra))
            elif stage == 1:
                rule = DESSIN_MOVES["black-out"]
                for s in rule.find_sites(m):
                    m2 = apply_rewrite(m, rule, s)
                    stack.append((m2, entries + (("move", "black-out", s),), 2, extra))
    return None


def jzo_transpose(m: DiskMap, site: str):
    """Reverse a jump-zigzag-oval pillar triple across its zigzag.

    ``site`` is the white vertex of the middle zigzag.  Returns the new
    dessin together with the :class:`WeakMoveScript` that produces it; the
    real part code of the result is the input code with the triple reversed.
    Raises ``pattern-mismatch`` when the three pillars are not a jump, a
    zigzag, and an oval, or when the fragment does not admit the macro.
    """
    ps = pillars(m)
    k = len(ps)
    idx = next(
        (i for i, p in enumerate(ps) if p.shape == "Z" and site in p.vertices), None
    )
    if idx is None or k < 3:
        raise WeakMoveError(f"pattern-mismatch: {site} is not a zigzag pillar white")
    before, after = ps[(idx - 1) % k], ps[(idx + 1) % k]
    if {before.shape, after.shape} != {"J", "O"}:
        raise WeakMoveError("pattern-mismatch: the zigzag is not flanked by a jump and an oval")
    word = [p.shape for p in ps]
    word[(idx - 1) % k], word[(idx + 1) % k] = word[(idx + 1) % k], word[(idx - 1) % k]
    expected = _cyclic_min("".join(word))

    try:
        s0 = straighten_zigzag(m, site)
    except WeakMoveError as exc:
        raise WeakMoveError(f"pattern-mismatch: {exc}") from exc
    fresh = set(s0.vertex_tags) - set(m.vertex_tags)
    mb = next(v for v in fresh if s0.vertex_tags[v] == MONO)
    xi = next(v for v in fresh if s0.vertex_tags[v] == CROSS)
    black_site = (s0.prev_on_boundary(mb),)

    entries = _macro_complete(s0, black_site, xi, expected)
    if entries is None:
        raise WeakMoveError("pattern-mismatch: the transposition macro does not complete")
    script = WeakMoveScript((("straighten", site),) + entries)
    return script.replay(m), script


# ---------------------------------------------------------------------------
# bounded weak-equivalence decision


def _dessin_type(m: DiskMap) -> Optional[str]:
    """Type of the curve behind ``m`` when its skeleton is computable."""
    from .correspondence import skeleton_of
    from .skeleton import BLACK as SK_BLACK, SkeletonError, is_typeI

    try:
        sk, _ = skeleton_of(m)
    except (MapError, SkeletonError):
        return None
    inner_blacks = any(
        sk.vertex_tags[v] == SK_BLACK and not sk.is_real(v) for v in sk.vertex_tags
    )
    return "I" if not inner_blacks and is_typeI(sk).ok else "II"


@dataclass(frozen=True)
class WeakVerdict:
    status: str  # "equivalent" | "unknown"
    script: Optional[WeakMoveScript] = None
    hint: str = ""


def weakly_equivalent(g1: DiskMap, g2: DiskMap, bound: int = 2000) -> WeakVerdict:
    """Bounded search for a weak-equivalence script from ``g1`` to ``g2``.

    Weak equivalence is dessin equivalence enlarged by zigzag straightening
    and creation, so the search alternates over elementary moves, the two
    zigzag surgeries, and the jump-zigzag-oval transposition macro.  The
    frontier grows from both dessins at once (expanding at most ``bound``
    states in total); every step has an inverse in the same move set, so a
    meeting point can be stitched into a single forward script from ``g1``.
    A positive answer carries that replayable script; exhaustion yields
    ``unknown``, with a hint when a cheap invariant already separates the
    two dessins.
    """
    d1, d2 = degree(g1), degree(g2)
    if d1 != d2:
        return WeakVerdict("unknown", hint=f"degree differs: {d1} vs {d2}")
    t1, t2 = _dessin_type(g1), _dessin_type(g2)
    if t1 is not None and t2 is not None and t1 != t2:
        return WeakVerdict("unknown", hint=f"type differs: {t1} vs {t2}")

    target = canonical_code(g2)
    start = canonical_code(g1)
    if start == target:
        return WeakVerdict("equivalent", WeakMoveScript())

    # forward side keeps replayable scripts; backward side keeps parent
    # links, to be inverted edge by edge once the two frontiers meet.
    fwd = {start: (g1, WeakMoveScript())}
    bwd = {target: (g2, None)}
    fwd_frontier = [start]
    bwd_frontier = [target]
    expanded = 0
    while fwd_frontier and bwd_frontier and expanded < bound:
        forwards = len(fwd_frontier) <= len(bwd_frontier)
        side, frontier = (fwd, fwd_frontier) if forwards else (bwd, bwd_frontier)
        next_frontier = []
        for code in frontier:
            m = side[code][0]
            expanded += 1
            for m2, tail in _weak_neighbors(m, macros=forwards):
                code2 = canonical_code(m2)
                if forwards:
                    if code2 in fwd:
                        continue
                    script2 = fwd[code][1] + tail
                    if code2 in bwd:
                        return _stitch(g1, target, m2, script2, code2, bwd)
                    fwd[code2] = (m2, script2)
                else:
                    if code2 in bwd:
                        continue
                    bwd[code2] = (m2, code)
                    if code2 in fwd:
                        m1, script1 = fwd[code2]
                        return _stitch(g1, target, m1, script1, code2, bwd)
                next_frontier.append(code2)
            if expanded >= bound:
                break
        if forwards:
            fwd_frontier = next_frontier
        else:
            bwd_frontier = next_frontier
    return WeakVerdict("unknown", hint=f"search exhausted after {expanded} states")


def _stitch(g1, target, meet_map, script, meet_code, bwd):
    """Extend ``script`` from the meeting point down the backward chain.

    Backward states were produced by applying steps *away* from the target,
    and every primitive step has an inverse in the same set (the transposition
    macro does not, which is why the backward frontier skips it), so each
    link is undone by scanning the neighbours of the current map for the
    parent's canonical code.
    """
    m, code = meet_map, meet_code
    while code != target:
        parent = bwd[code][1]
        for m2, tail in _weak_neighbors(m):
            if canonical_code(m2) == parent:
                m, script = m2, script + tail
                break
        else:  # pragma: no cover - the move set is closed under inverses
            raise WeakMoveError(f"no single-step inverse back to {parent!r}")
        code = parent
    assert canonical_code(script.replay(g1)) == target
    return WeakVerdict("equivalent", script)


def _weak_neighbors(m: DiskMap, macros: bool = True):
    if macros:
        for z in jzo_sites(m):
            try:
                m2, script = jzo_transpose(m, z)
            except MapError:
                continue
            yield m2, script
    for z in straighten_sites(m):
        entry = ("straighten", z)
        yield straighten_zigzag(m, z), WeakMoveScript((entry,))
    for s in create_sites(m):
        entry = ("create", s)
        yield create_zigzag(m, s), WeakMoveScript((entry,))
    for name, rule in sorted(DESSIN_MOVES.items()):
        for s in rule.find_sites(m):
            try:
                m2 = apply_rewrite(m, rule, s)
            except MapError:
                continue
            yield m2, WeakMoveScript((("move", name, s),))


# ---------------------------------------------------------------------------
# the alternating normal form


def alternating_normal_form(d: int):
    """The oval/jump alternating block arrangement of degree ``d``.

    Every type-I block of small degree is weakly equivalent to the block
    built from this specification; transposing jumps across ovals one at a
    time rearranges any type-I boundary word into the alternating one.
    """
    from .blocks import BlockSpec

    if d < 1:
        raise ValueError("degree must be positive")
    return BlockSpec(d, marks="OJ" * d)
