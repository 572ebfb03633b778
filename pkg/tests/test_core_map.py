import pytest
from hypothesis import given, settings

from dessinkit.core_map import (
    MapBuilder,
    MapError,
    RewriteRule,
    apply_rewrite,
    build_map,
    canonical_code,
    maps_isomorphic,
    mirror,
    relabel,
)

from mapgen import disk_maps


def chord_map():
    """Two boundary vertices joined by an inner chord."""
    return build_map(
        boundary=["u", "v"],
        vertex_tags={"u": "p", "v": "p"},
        rotations={"u": ["e.0"], "v": ["e.1"]},
        edge_tags={"e": "s"},
        edge_head={"e": None},
        boundary_edges=[None, None],
    )


class TestFaces:
    def test_chord_regions(self):
        m = chord_map()
        assert len(m.faces()) == 3
        outer = m.outer_face()
        assert outer is not None and outer.darts == ()
        assert len(outer.arcs) == 0  # outer face uses forward arcs only
        regions = m.regions()
        assert len(regions) == 2
        # each region sees the chord once and one boundary arc
        for r in regions:
            assert len(r.face.darts) == 1
            assert len(r.face.arcs) == 1

    def test_gap_regions_distinct(self):
        m = chord_map()
        r0 = m.inner_face_of_gap(0)
        r1 = m.inner_face_of_gap(1)
        assert r0.walk != r1.walk

    def test_crossing_chords_rejected(self):
        # chords a-c and b-d cannot be embedded disjointly in the disk
        with pytest.raises(MapError):
            build_map(
                boundary=["a", "b", "c", "d"],
                vertex_tags={x: "p" for x in "abcd"},
                rotations={"a": ["e1.0"], "c": ["e1.1"], "b": ["e2.0"], "d": ["e2.1"]},
                edge_tags={"e1": "s", "e2": "s"},
                edge_head={"e1": None, "e2": None},
                boundary_edges=[None] * 4,
            )

    def test_disconnected_inner_component_rejected(self):
        with pytest.raises(MapError):
            build_map(
                boundary=["u"],
                vertex_tags={"u": "p", "a": "p", "b": "p"},
                rotations={"u": [], "a": ["e.0"], "b": ["e.1"]},
                edge_tags={"e": "s"},
                edge_head={"e": None},
                boundary_edges=[None],
            )

    def test_isolated_inner_needs_anchor(self):
        with pytest.raises(MapError):
            build_map(
                boundary=["u"],
                vertex_tags={"u": "p", "w": "q"},
                rotations={"u": [], "w": []},
                edge_tags={},
                edge_head={},
                boundary_edges=[None],
            )


class TestValidation:
    def test_real_edge_slots_enforced(self):
        # forward dart of a real edge must open the rotation at its tail
        with pytest.raises(MapError):
            build_map(
                boundary=["u", "v"],
                vertex_tags={"u": "p", "v": "p", "w": "q"},
                rotations={"u": ["c.0", "e.0"], "v": ["e.1"], "w": ["c.1"]},
                edge_tags={"e": "s", "c": "s"},
                edge_head={"e": None, "c": None},
                boundary_edges=["e", None],
            )

    def test_duplicate_dart_rejected(self):
        with pytest.raises(MapError):
            build_map(
                boundary=["u", "v"],
                vertex_tags={"u": "p", "v": "p"},
                rotations={"u": ["e.0", "e.0"], "v": ["e.1"]},
                edge_tags={"e": "s"},
                edge_head={"e": None},
                boundary_edges=[None, None],
            )


class TestCanonical:
    def test_rotation_of_basepoint(self):
        m = build_map(
            boundary=["a", "b", "c"],
            vertex_tags={"a": "p", "b": "q", "c": "p"},
            rotations={"a": [], "b": [], "c": []},
            edge_tags={},
            edge_head={},
            boundary_edges=[None] * 3,
        )
        m2 = build_map(
            boundary=["b", "c", "a"],
            vertex_tags={"a": "p", "b": "q", "c": "p"},
            rotations={"a": [], "b": [], "c": []},
            edge_tags={},
            edge_head={},
            boundary_edges=[None] * 3,
        )
        assert canonical_code(m) == canonical_code(m2)
        assert canonical_code(m, orientation_preserving=True) == canonical_code(
            m2, orientation_preserving=True
        )

    def test_chirality_detected(self):
        m = build_map(
            boundary=["a", "b", "c"],
            vertex_tags={"a": "p", "b": "q", "c": "r"},
            rotations={"a": [], "b": [], "c": []},
            edge_tags={},
            edge_head={},
            boundary_edges=[None] * 3,
        )
        assert canonical_code(m) == canonical_code(mirror(m))
        assert canonical_code(m, orientation_preserving=True) != canonical_code(
            mirror(m), orientation_preserving=True
        )

    def test_tags_distinguish(self):
        m = chord_map()
        b = MapBuilder(m)
        b.edge_tags["e"] = "t"
        assert canonical_code(m) != canonical_code(b.build())

    def test_orientation_distinguishes(self):
        b = MapBuilder(chord_map())
        b.edge_head["e"] = "e.0"
        m1 = b.build()
        b2 = MapBuilder(chord_map())
        b2.edge_head["e"] = "e.1"
        m2 = b2.build()
        # the two orientations of the chord differ by a reflection fixing
        # neither endpoint tagwise -- here endpoints have equal tags, so the
        # codes agree up to reflection but differ orientedly only if the
        # picture is chiral; this one is achiral.
        assert canonical_code(m1) == canonical_code(m2)
        assert canonical_code(chord_map()) != canonical_code(m1)


@settings(max_examples=60, deadline=None)
@given(disk_maps())
def test_code_invariant_under_relabel(m):
    vmap = {v: f"V{i}" for i, v in enumerate(sorted(m.vertex_tags, reverse=True))}
    emap = {e: f"E{i}" for i, e in enumerate(sorted(m.edge_tags, reverse=True))}
    m2 = relabel(m, vmap, emap)
    assert canonical_code(m) == canonical_code(m2)
    assert canonical_code(m, orientation_preserving=True) == canonical_code(
        m2, orientation_preserving=True
    )


@settings(max_examples=60, deadline=None)
@given(disk_maps())
def test_code_invariant_under_mirror(m):
    assert canonical_code(m) == canonical_code(mirror(m))


@settings(max_examples=60, deadline=None)
@given(disk_maps())
def test_mirror_involution(m):
    assert maps_isomorphic(mirror(mirror(m)), m, orientation_preserving=True)


@settings(max_examples=60, deadline=None)
@given(disk_maps())
def test_roundtrip_through_dict(m):
    d = m.to_dict()
    m2 = build_map(
        d["boundary"], d["vertex_tags"], d["rotations"], d["edge_tags"],
        d["edge_head"], d["boundary_edges"], d["anchors"],
    )
    assert canonical_code(m2, orientation_preserving=True) == canonical_code(
        m, orientation_preserving=True
    )


@settings(max_examples=60, deadline=None)
@given(disk_maps())
def test_regions_partition_isolated(m):
    regs = m.regions()
    seen = [v for r in regs for v in r.isolated]
    assert sorted(seen) == sorted(m.anchors)


def test_kernel_backends_agree():
    from dessinkit import _canon
    from dessinkit import _kernel
    from dessinkit.core_map import _int_tables

    m = chord_map()
    t = _int_tables(m)
    args = (t["nb"], t["rot_off"], t["rot_flat"], t["dart_vert"], t["vtag_arr"],
            t["etag_arr"], t["head_arr"], t["gap_edge"])
    for s in range(2):
        for f in (0, 1):
            assert _kernel.label_stream(*args, s, f) == _canon.label_stream(*args, s, f)


def test_apply_rewrite_checks_site():
    rule = RewriteRule(
        name="noop",
        find_sites=lambda m: ["only"],
        apply=lambda m, s: m,
    )
    m = chord_map()
    assert apply_rewrite(m, rule, "only") is m
    with pytest.raises(MapError):
        apply_rewrite(m, rule, "bogus")
