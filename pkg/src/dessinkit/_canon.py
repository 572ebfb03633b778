"""Pure-Python labelling kernel for canonical codes.

Given the flattened integer description of a disk map and a choice of
(starting boundary vertex, flip), produce the label stream: a breadth-first
relabelling of vertices and edges together with a self-delimiting integer
encoding of tags, rotations and orientations.  ``canonical_code`` minimises
this stream over all choices.

The compiled twin of this module is ``_canon_c.pyx``; both must stay
behaviourally identical (checked by the benchmark and the test suite).
"""

from __future__ import annotations


def _traversal(nb, rot_off, rot_flat, dart_vert, gap_edge, start, flip):
    """Vertex processing order, per-edge numbering and discovery darts."""
    nv = len(rot_off) - 1
    ne = len(dart_vert) // 2
    vert_num = [-1] * nv
    edge_num = [-1] * ne
    dart0 = [-1] * ne
    disc = [-1] * nv

    if flip:
        order = [(start - k) % nb for k in range(nb)]
    else:
        order = [(start + k) % nb for k in range(nb)]
    for i, v in enumerate(order):
        vert_num[v] = i

    rows = []  # per processed vertex: (v, rot_seq)
    p = 0
    next_e = 0
    while p < len(order):
        v = order[p]
        p += 1
        rot = list(rot_flat[rot_off[v]:rot_off[v + 1]])
        if flip:
            rot.reverse()
        if v >= nb and rot and disc[v] >= 0:
            k = rot.index(disc[v])
            rot = rot[k:] + rot[:k]
        for d in rot:
            e = d >> 1
            if edge_num[e] < 0:
                edge_num[e] = next_e
                next_e += 1
                dart0[e] = d
                w = dart_vert[d ^ 1]
                if vert_num[w] < 0:
                    vert_num[w] = len(order)
                    disc[w] = d ^ 1
                    order.append(w)
        rows.append((v, rot))
    return order, rows, vert_num, edge_num, dart0


def label_stream(nb, rot_off, rot_flat, dart_vert, vtag_arr, etag_arr,
                 head_arr, gap_edge, start, flip):
    order, rows, vert_num, edge_num, dart0 = _traversal(
        nb, rot_off, rot_flat, dart_vert, gap_edge, start, flip)
    out = [nb]
    for v, rot in rows:
        out.append(vtag_arr[v])
        out.append(len(rot))
        if v < nb:
            f_gap = gap_edge[v] >= 0
            b_gap = gap_edge[(v - 1) % nb] >= 0
            if flip:
                f_gap, b_gap = b_gap, f_gap
            out.append(1 if f_gap else 0)
            out.append(1 if b_gap else 0)
        for d in rot:
            e = d >> 1
            h = head_arr[e]
            if h == 2:
                hf = 2
            else:
                hf = 1 if (2 * e + h) == d else 0
            out.append(edge_num[e])
            out.append(etag_arr[e])
            out.append(hf)
            out.append(vert_num[dart_vert[d ^ 1]])
    return tuple(out)


def label_numbering(nb, rot_off, rot_flat, dart_vert, vtag_arr, etag_arr,
                    head_arr, gap_edge, start, flip):
    order, rows, vert_num, edge_num, dart0 = _traversal(
        nb, rot_off, rot_flat, dart_vert, gap_edge, start, flip)
    return vert_num, edge_num, dart0
