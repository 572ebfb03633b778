# cython: language_level=3, boundscheck=False, wraparound=False
"""Compiled labelling kernel; behaviourally identical to _canon.py."""

from cpython cimport array
import array


def _traversal(int nb, rot_off, rot_flat, dart_vert, gap_edge, int start, int flip):
    cdef array.array roff = array.array('i', rot_off)
    cdef array.array rflat = array.array('i', rot_flat)
    cdef array.array dvert = array.array('i', dart_vert)
    cdef int nv = len(rot_off) - 1
    cdef int ne = len(dart_vert) // 2
    cdef array.array vert_num = array.array('i', [-1] * nv)
    cdef array.array edge_num = array.array('i', [-1] * ne)
    cdef array.array dart0 = array.array('i', [-1] * ne)
    cdef array.array disc = array.array('i', [-1] * nv)
    cdef int[:] roff_v = roff
    cdef int[:] rflat_v = rflat
    cdef int[:] dvert_v = dvert
    cdef int[:] vnum_v = vert_num
    cdef int[:] enum_v = edge_num
    cdef int[:] d0_v = dart0
    cdef int[:] disc_v = disc

    cdef list order = []
    cdef int k, v, i, p, d, e, w, next_e, rl, kk
    for k in range(nb):
        v = (start - k) % nb if flip else (start + k) % nb
        order.append(v)
        vnum_v[v] = k

    cdef list rows = []
    cdef list rot
    p = 0
    next_e = 0
    while p < len(order):
        v = order[p]
        p += 1
        rot = [rflat_v[i] for i in range(roff_v[v], roff_v[v + 1])]
        if flip:
            rot.reverse()
        rl = len(rot)
        if v >= nb and rl and disc_v[v] >= 0:
            kk = rot.index(disc_v[v])
            rot = rot[kk:] + rot[:kk]
        for i in range(rl):
            d = rot[i]
            e = d >> 1
            if enum_v[e] < 0:
                enum_v[e] = next_e
                next_e += 1
                d0_v[e] = d
                w = dvert_v[d ^ 1]
                if vnum_v[w] < 0:
                    vnum_v[w] = len(order)
                    disc_v[w] = d ^ 1
                    order.append(w)
        rows.append((v, rot))
    return order, rows, list(vert_num), list(edge_num), list(dart0)


def label_stream(int nb, rot_off, rot_flat, dart_vert, vtag_arr, etag_arr,
                 head_arr, gap_edge, int start, int flip):
    order, rows, vert_num, edge_num, dart0 = _traversal(
        nb, rot_off, rot_flat, dart_vert, gap_edge, start, flip)
    cdef list out = [nb]
    cdef int v, d, e, h, hf, f_gap, b_gap
    for v, rot in rows:
        out.append(vtag_arr[v])
        out.append(len(rot))
        if v < nb:
            f_gap = 1 if gap_edge[v] >= 0 else 0
            b_gap = 1 if gap_edge[(v - 1) % nb] >= 0 else 0
            if flip:
                f_gap, b_gap = b_gap, f_gap
            out.append(f_gap)
            out.append(b_gap)
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


def label_numbering(int nb, rot_off, rot_flat, dart_vert, vtag_arr, etag_arr,
                    head_arr, gap_edge, int start, int flip):
    order, rows, vert_num, edge_num, dart0 = _traversal(
        nb, rot_off, rot_flat, dart_vert, gap_edge, start, flip)
    return vert_num, edge_num, dart0
