from itertools import combinations, permutations, combinations_with_replacement

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from dessinkit.blocks import (
    BlockError,
    BlockSpec,
    GluePlan,
    assemble,
    block_from_spec,
    cubic_block,
    cut_edge,
    enumerate_blocks,
    glue_edges,
    junction,
    skeleton_from_spec,
)
from dessinkit.core_map import MapError, canonical_code, maps_isomorphic
from dessinkit.correspondence import dessin_from_skeleton, skeleton_of
from dessinkit.dessin import (
    BLACK,
    DOTTED,
    SOLID,
    WHITE,
    pillars,
    real_part_code,
    validate_dessin,
)
from dessinkit.skeleton import SkeletonError, black_count, check_skeleton, is_typeI

from fixtures import cubic_dessin_I, cubic_dessin_II


def cyclic_eq(a, b):
    return len(a) == len(b) and (
        b in a + a or b[::-1] in a + a
    )


# ---------------------------------------------------------------------------
# single blocks


class TestCubicBlocks:
    def test_kind_I_matches_fixture(self):
        assert maps_isomorphic(cubic_block("I"), cubic_dessin_I())

    def test_kind_II_matches_fixture(self):
        assert maps_isomorphic(cubic_block("II"), cubic_dessin_II())

    def test_kind_I_real_part(self):
        assert real_part_code(cubic_block("I")) == "JZOZ"

    def test_kind_II_shape(self):
        g = cubic_block("II")
        assert real_part_code(g) == "ZZZ"
        inner_blacks = [
            v for v, t in g.vertex_tags.items()
            if t == BLACK and not g.is_real(v)
        ]
        assert len(inner_blacks) == 1

    def test_kind_I_skeleton_round_trip(self):
        sk, _ = skeleton_of(cubic_block("I"))
        assert is_typeI(sk).ok
        assert canonical_code(sk) == canonical_code(
            skeleton_from_spec(BlockSpec(1, marks="JO"))
        )

    def test_unknown_kind(self):
        with pytest.raises(BlockError):
            cubic_block("III")


class TestBlockFromSpec:
    def test_d2_oojj_real_part(self):
        g = block_from_spec(BlockSpec(2, marks="OOJJ"))
        assert cyclic_eq(real_part_code(g), "OZOZJZJZ")

    def test_d2_ojoj_real_part(self):
        g = block_from_spec(BlockSpec(2, marks="OJOJ"))
        assert cyclic_eq(real_part_code(g), "OZJZOZJZ")

    def test_mixed_chords_and_blacks(self):
        # c=1, b=1: the chord region and the outside must balance separately
        g = block_from_spec(
            BlockSpec(
                2,
                boundary=("J", "Z", "O", "Z", "Z", "Z", "Z"),
                chords=((0, 2),),
                blacks=(2,),
            )
        )
        validate_dessin(g)
        sk, _ = skeleton_of(g)
        assert black_count(sk) == 2

    def test_constraint_violation_reported(self):
        with pytest.raises(BlockError, match="z\\+c=3d"):
            skeleton_from_spec(
                BlockSpec(1, boundary=("J", "O", "Z"), chords=((0, 1),))
            )
        with pytest.raises(BlockError, match="b\\+c=d"):
            skeleton_from_spec(BlockSpec(2, boundary=("Z",) * 5, blacks=(0,)))

    def test_region_violation_reported(self):
        # both whites outside the chord leave its region unbalanced
        with pytest.raises(BlockError, match="constraint-violation"):
            skeleton_from_spec(
                BlockSpec(
                    1, boundary=("J", "O", "Z", "Z"), chords=((0, 1),)
                )
            )

    def test_marks_need_balanced_counts(self):
        with pytest.raises(BlockError):
            BlockSpec(2, marks="OJJJ").resolved()

    def test_spec_skeleton_shape(self):
        # monovalent reals plus isolated inner blacks: nothing else
        sk = skeleton_from_spec(
            BlockSpec(
                2,
                boundary=("J", "Z", "O", "Z", "Z", "Z", "Z"),
                chords=((0, 2),),
                blacks=(2,),
            )
        )
        for v, rot in sk.rotations.items():
            assert len(rot) <= 1
            if not sk.is_real(v):
                assert rot == () and sk.vertex_tags[v] == "black"


# ---------------------------------------------------------------------------
# enumeration and census


def brute_force_blocks(d):
    """Independent census: decorate every token circle and keep what builds.

    Crossing chords die in the planarity check, unbalanced regions in the
    skeleton conditions; dedup is by canonical code.  First boundary token is
    pinned to J (any cyclic class containing a chord has such a rotation).
    """
    seen = {}
    for c in range(d + 1):
        b, z = d - c, 3 * d - c
        length = 2 * c + z
        if c == 0:
            for gaps in combinations_with_replacement(range(z), b):
                _brute_try(seen, ("Z",) * z, (), gaps)
            continue
        slots = range(1, length)
        for extra_j in combinations(slots, c - 1):
            j_pos = (0,) + extra_j
            rest = [i for i in slots if i not in extra_j]
            for o_pos in combinations(rest, c):
                tokens = ["Z"] * length
                for i in j_pos:
                    tokens[i] = "J"
                for i in o_pos:
                    tokens[i] = "O"
                for sinks in permutations(o_pos):
                    chords = tuple(zip(j_pos, sinks))
                    for gaps in combinations_with_replacement(
                        range(length), b
                    ):
                        _brute_try(seen, tuple(tokens), chords, gaps)
    return seen


def _brute_try(seen, tokens, chords, gaps):
    d = (len(chords) + len(gaps))
    try:
        sk = skeleton_from_spec(
            BlockSpec(d, boundary=tokens, chords=chords, blacks=gaps)
        )
    except (BlockError, MapError, SkeletonError):
        return
    seen.setdefault(canonical_code(sk), sk)


class TestEnumeration:
    def test_census_d1(self):
        assert len(enumerate_blocks(1, "I")) == 1
        assert len(enumerate_blocks(1, "II")) == 1

    def test_census_d2_type_I(self):
        assert len(enumerate_blocks(2, "I")) == 2

    def test_kind_partition(self):
        for d in (1, 2):
            both = enumerate_blocks(d)
            assert len(both) == len(enumerate_blocks(d, "I")) + len(
                enumerate_blocks(d, "II")
            )

    @pytest.mark.parametrize("d", [1, 2, 3])
    def test_agrees_with_brute_force(self, d):
        ours = {canonical_code(sk) for sk in enumerate_blocks(d)}
        brute = set(brute_force_blocks(d))
        assert ours == brute

    def test_every_block_satisfies_constraints(self):
        for d in (1, 2, 3):
            for sk in enumerate_blocks(d):
                check_skeleton(sk)
                c = sum(1 for t in sk.edge_tags.values())
                b = sum(
                    1 for v in sk.vertex_tags if not sk.is_real(v)
                )
                z = sum(
                    1 for v in sk.vertex_tags
                    if sk.is_real(v) and not sk.rotations[v]
                    and sk.vertex_tags[v] == "white"
                )
                assert b + c == d
                assert z + c == 3 * d

    def test_bound_exceeded(self):
        with pytest.raises(BlockError, match="bound-exceeded"):
            enumerate_blocks(9)

    def test_deterministic_order(self):
        a = [canonical_code(sk) for sk in enumerate_blocks(2)]
        b = [canonical_code(sk) for sk in enumerate_blocks(2)]
        assert a == b == sorted(a)

    def test_blocks_blow_up(self):
        for sk in enumerate_blocks(2):
            g = dessin_from_skeleton(sk)
            validate_dessin(g)
            back, _ = skeleton_of(g)
            assert canonical_code(back) == canonical_code(sk)


MARK_WORDS_D2 = ["OOJJ", "OJOJ"]
MARK_WORDS_D3 = ["OOOJJJ", "OOJOJJ", "OOJJOJ", "OJOJOJ", "OJJOOJ"]


class TestTypeIRealParts:
    @pytest.mark.parametrize("word", ["JO"] + MARK_WORDS_D2 + MARK_WORDS_D3)
    def test_real_part_is_marks_with_zigzags(self, word):
        g = block_from_spec(BlockSpec(len(word) // 2, marks=word))
        expect = "".join(ch + "Z" for ch in word)
        assert cyclic_eq(real_part_code(g), expect)

    def test_marks_blocks_appear_in_census(self):
        # marks pick one noncrossing chord pattern per word; other patterns
        # over the same word are their own classes, so subset, not equality
        marks_codes = set()
        for word in MARK_WORDS_D3:
            sk = skeleton_from_spec(BlockSpec(3, marks=word))
            marks_codes.add(canonical_code(sk))
        enum_codes = {
            canonical_code(sk) for sk in enumerate_blocks(3, "I")
        }
        assert marks_codes <= enum_codes
        assert len(enum_codes) == 5


# ---------------------------------------------------------------------------
# gluing


class TestJunction:
    def test_two_cubics_give_degree_two_type_I(self):
        g = junction(cubic_block("I"), "w1", cubic_block("I"), "w1")
        validate_dessin(g)
        sk, _ = skeleton_of(g)
        assert black_count(sk) == 2
        assert is_typeI(sk).ok

    def test_seam_is_an_undirected_chain(self):
        g = junction(cubic_block("I"), "w1", cubic_block("I"), "w2")
        _, chart = skeleton_of(g)
        assert any(len(t) == 3 for t in chart.transforms.values())

    def test_rejects_non_white_site(self):
        with pytest.raises(BlockError, match="invalid instruction"):
            junction(cubic_block("I"), "b0", cubic_block("I"), "w1")

    def test_rejects_bold_pillar_white(self):
        # w0 sits between the two real blacks
        with pytest.raises(BlockError, match="invalid instruction"):
            junction(cubic_block("I"), "w0", cubic_block("I"), "w1")


class TestEdgeGluing:
    def test_genuine_dotted_merged_pillar_counts(self):
        g1, g2 = cubic_block("I"), cubic_block("II")
        out = glue_edges(
            g1, cut_edge(g1, DOTTED, 0, 1), g2, cut_edge(g2, DOTTED, 1, 0)
        )
        validate_dessin(out)
        merged = sorted(
            p.whites for p in pillars(out)
            if any(v.startswith("gm") for v in p.vertices)
        )
        # a boundary extremum at each seam end forces equal white parity on
        # the fused sides, so the zigzag whites pair up: counts 0 and 2
        assert merged == [0, 2]

    def test_genuine_degree_additive(self):
        g1, g2 = cubic_block("I"), cubic_block("II")
        out = glue_edges(
            g1, cut_edge(g1, DOTTED, 0, 1), g2, cut_edge(g2, DOTTED, 1, 0)
        )
        sk, _ = skeleton_of(out)
        assert black_count(sk) == 2

    def test_genuine_rejects_aligned_flows(self):
        g1, g2 = cubic_block("I"), cubic_block("II")
        with pytest.raises(BlockError, match="invalid instruction"):
            glue_edges(
                g1, cut_edge(g1, DOTTED, 0, 1), g2, cut_edge(g2, DOTTED, 0, 1)
            )

    def test_kind_mismatch_rejected(self):
        g1 = cubic_block("I")
        with pytest.raises(BlockError, match="invalid instruction"):
            glue_edges(
                g1, cut_edge(g1, DOTTED, 0, 1),
                cubic_block("I"), cut_edge(g1, SOLID, 0, 0),
            )

    def test_artificial_solid(self):
        g1, g2 = cubic_block("I"), cubic_block("I")
        done = 0
        for ea in [e for e in g1.boundary_edges if g1.edge_tags[e] == SOLID]:
            for eb in [
                e for e in g2.boundary_edges if g2.edge_tags[e] == SOLID
            ]:
                try:
                    out = glue_edges(g1, ea, g2, eb, genuine=False)
                except BlockError:
                    continue
                validate_dessin(out)
                done += 1
                assert not any(
                    v.startswith("gm") for v in out.vertex_tags
                )
        assert done > 0

    def test_artificial_degree_additive(self):
        g1 = cubic_block("I")
        out = glue_edges(g1, "r2", cubic_block("I"), "r5", genuine=False)
        sk, _ = skeleton_of(out)
        assert black_count(sk) == 2


class TestGluePlans:
    def test_empty_plan_returns_block(self):
        g, code = assemble(GluePlan((cubic_block("I"),)))
        assert code == "JZOZ"
        assert maps_isomorphic(g, cubic_block("I"))

    def test_junction_plan(self):
        plan = GluePlan(
            (cubic_block("I"), cubic_block("I")),
            (("junction", 0, "w1", 1, "w1"),),
        )
        g, code = assemble(plan)
        sk, _ = skeleton_of(g)
        assert black_count(sk) == 2 and is_typeI(sk).ok

    def test_three_block_chain(self):
        plan = GluePlan(
            (cubic_block("I"),) * 3,
            (
                ("junction", 0, "w1", 1, "w1"),
                ("junction", 1, "w2", 2, "w1"),
            ),
        )
        g, code = assemble(plan)
        sk, _ = skeleton_of(g)
        assert black_count(sk) == 3 and is_typeI(sk).ok

    def test_replay_determinism(self):
        plan = GluePlan(
            (cubic_block("I"), cubic_block("II")),
            (("genuine", 0, "r3", 1, "r1"),),
        )
        g1, c1 = assemble(plan)
        g2, c2 = assemble(plan)
        assert c1 == c2
        assert g1.rotations == g2.rotations
        assert g1.boundary == g2.boundary

    def test_cycle_rejected(self):
        plan = GluePlan(
            (cubic_block("I"), cubic_block("I")),
            (
                ("junction", 0, "w1", 1, "w1"),
                ("junction", 0, "w2", 1, "w2"),
            ),
        )
        with pytest.raises(BlockError, match="non-tree"):
            assemble(plan)

    def test_disconnected_rejected(self):
        plan = GluePlan(
            (cubic_block("I"), cubic_block("I"), cubic_block("I")),
            (("junction", 0, "w1", 1, "w1"),),
        )
        with pytest.raises(BlockError, match="non-tree"):
            assemble(plan)

    def test_unknown_op_rejected(self):
        plan = GluePlan(
            (cubic_block("I"), cubic_block("I")),
            (("weld", 0, "w1", 1, "w1"),),
        )
        with pytest.raises(BlockError):
            assemble(plan)

    def test_missing_site_rejected(self):
        plan = GluePlan(
            (cubic_block("I"), cubic_block("I")),
            (("junction", 0, "nope", 1, "w1"),),
        )
        with pytest.raises(BlockError, match="not found"):
            assemble(plan)


@settings(max_examples=40, deadline=None)
@given(st.data())
def test_random_junctions_stay_valid(data):
    skels = enumerate_blocks(2, "I")
    g1 = dessin_from_skeleton(data.draw(st.sampled_from(skels)))
    g2 = dessin_from_skeleton(data.draw(st.sampled_from(skels)))
    sites1 = [
        w for w in g1.boundary
        if g1.vertex_tags[w] == WHITE
        and g1.edge_tags[g1.boundary_edges[g1.boundary_pos(w)]] == DOTTED
    ]
    sites2 = [
        w for w in g2.boundary
        if g2.vertex_tags[w] == WHITE
        and g2.edge_tags[g2.boundary_edges[g2.boundary_pos(w)]] == DOTTED
    ]
    w1 = data.draw(st.sampled_from(sites1))
    w2 = data.draw(st.sampled_from(sites2))
    out = junction(g1, w1, g2, w2)
    validate_dessin(out)
    sk, _ = skeleton_of(out)
    assert black_count(sk) == 4
