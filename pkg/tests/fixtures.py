"""Hand-built reference dessins used across the test suite."""

from dessinkit.core_map import build_map
from dessinkit.dessin import BLACK, BOLD, CROSS, DOTTED, MONO, SOLID, WHITE


def cubic_dessin_I():
    """Degree-1 dessin with real part jump-zigzag-oval-zigzag.

    Boundary (counterclockwise): black, white, black | cross, white, cross |
    solid mono | cross, mono, cross | solid mono | cross, white, cross.
    """
    boundary = ["b1", "wj", "b2", "xa", "wz1", "xb", "s1", "xc", "mo", "xd",
                "s2", "xe", "wz2", "xf"]
    vt = {
        "b1": BLACK, "b2": BLACK, "wj": WHITE, "wz1": WHITE, "wz2": WHITE,
        "xa": CROSS, "xb": CROSS, "xc": CROSS, "xd": CROSS, "xe": CROSS, "xf": CROSS,
        "s1": MONO, "s2": MONO, "mo": MONO,
    }
    et = {
        "r0": BOLD, "r1": BOLD, "r2": SOLID, "r3": DOTTED, "r4": DOTTED,
        "r5": SOLID, "r6": SOLID, "r7": DOTTED, "r8": DOTTED, "r9": SOLID,
        "r10": SOLID, "r11": DOTTED, "r12": DOTTED, "r13": SOLID,
        "iA": BOLD, "iB": BOLD, "iC": DOTTED, "iD": SOLID, "iE": SOLID,
    }
    rot = {
        "b1": ["r0.0", "iE.1", "iB.0", "r13.1"],
        "wj": ["r1.0", "iC.0", "r0.1"],
        "b2": ["r2.0", "iA.0", "iD.1", "r1.1"],
        "xa": ["r3.0", "r2.1"],
        "wz1": ["r4.0", "iA.1", "r3.1"],
        "xb": ["r5.0", "r4.1"],
        "s1": ["r6.0", "iD.0", "r5.1"],
        "xc": ["r7.0", "r6.1"],
        "mo": ["r8.0", "iC.1", "r7.1"],
        "xd": ["r9.0", "r8.1"],
        "s2": ["r10.0", "iE.0", "r9.1"],
        "xe": ["r11.0", "r10.1"],
        "wz2": ["r12.0", "iB.1", "r11.1"],
        "xf": ["r13.0", "r12.1"],
    }
    heads = {
        "r0": "r0.1", "r1": "r1.0", "r2": "r2.0", "r3": "r3.0", "r4": "r4.1",
        "r5": "r5.1", "r6": "r6.0", "r7": "r7.0", "r8": "r8.1", "r9": "r9.1",
        "r10": "r10.0", "r11": "r11.0", "r12": "r12.1", "r13": "r13.1",
        "iA": "iA.1", "iB": "iB.1", "iC": "iC.1", "iD": "iD.1", "iE": "iE.1",
    }
    gaps = [f"r{i}" for i in range(14)]
    return build_map(boundary, vt, rot, et, heads, gaps)


def cubic_dessin_II():
    """Degree-1 dessin with three zigzags and an inner black vertex."""
    boundary = ["xa1", "w1", "xb1", "s1", "xa2", "w2", "xb2", "s2",
                "xa3", "w3", "xb3", "s3"]
    vt = {"V": BLACK}
    et = {}
    heads = {}
    rot = {"V": ["k1.0", "t1.1", "k2.0", "t2.1", "k3.0", "t3.1"]}
    for i in (1, 2, 3):
        vt[f"xa{i}"] = CROSS
        vt[f"xb{i}"] = CROSS
        vt[f"w{i}"] = WHITE
        vt[f"s{i}"] = MONO
        et[f"k{i}"] = BOLD
        et[f"t{i}"] = SOLID
        heads[f"k{i}"] = f"k{i}.1"
        heads[f"t{i}"] = f"t{i}.1"
    for g in range(12):
        et[f"g{g}"] = DOTTED if (g % 4) in (0, 1) else SOLID
    # dotted edges leave the whites; solid edges run from the crosses into
    # the gap monos
    for i, base in ((1, 0), (2, 4), (3, 8)):
        heads[f"g{base}"] = f"g{base}.0"
        heads[f"g{base + 1}"] = f"g{base + 1}.1"
        heads[f"g{base + 2}"] = f"g{base + 2}.1"
        heads[f"g{base + 3}"] = f"g{base + 3}.0"
        rot[f"xa{i}"] = [f"g{base}.0", f"g{(base - 1) % 12}.1"]
        rot[f"w{i}"] = [f"g{base + 1}.0", f"k{i}.1", f"g{base}.1"]
        rot[f"xb{i}"] = [f"g{base + 2}.0", f"g{base + 1}.1"]
        rot[f"s{i}"] = [f"g{base + 3}.0", f"t{i}.0", f"g{base + 2}.1"]
    gaps = [f"g{g}" for g in range(12)]
    return build_map(boundary, vt, rot, et, heads, gaps)


def hyperbolic_dessin():
    """Degree-1 dessin whose boundary is entirely dotted."""
    boundary = ["w1", "M1", "w2", "M2", "w3", "M3"]
    vt = {"V": BLACK}
    et = {}
    heads = {}
    rot = {"V": ["k1.0", "u1.1", "k2.0", "u2.1", "k3.0", "u3.1"]}
    for i in (1, 2, 3):
        vt[f"w{i}"] = WHITE
        vt[f"M{i}"] = MONO
        vt[f"X{i}"] = CROSS
        et[f"k{i}"] = BOLD
        et[f"c{i}"] = DOTTED
        et[f"u{i}"] = SOLID
        heads[f"k{i}"] = f"k{i}.1"
        heads[f"c{i}"] = f"c{i}.1"
        heads[f"u{i}"] = f"u{i}.1"
        rot[f"X{i}"] = [f"c{i}.1", f"u{i}.0"]
    for g in range(6):
        et[f"g{g}"] = DOTTED
        heads[f"g{g}"] = f"g{g}.{(g + 1) % 2}"
    rot["w1"] = ["g0.0", "k1.1", "g5.1"]
    rot["w2"] = ["g2.0", "k2.1", "g1.1"]
    rot["w3"] = ["g4.0", "k3.1", "g3.1"]
    rot["M1"] = ["g1.0", "c1.0", "g0.1"]
    rot["M2"] = ["g3.0", "c2.0", "g2.1"]
    rot["M3"] = ["g5.0", "c3.0", "g4.1"]
    gaps = [f"g{g}" for g in range(6)]
    return build_map(boundary, vt, rot, et, heads, gaps)


# ---------------------------------------------------------------------------
# hand-built reference skeletons


def sk_cubic_I():
    """Degree-1 skeleton of the dividing kind: one chord, two bare whites."""
    boundary = ["B", "w1", "S", "w2"]
    vt = {"B": "black", "w1": "white", "S": "white", "w2": "white"}
    rot = {"B": ["c.0"], "S": ["c.1"], "w1": [], "w2": []}
    return build_map(boundary, vt, rot, {"c": "dir"}, {"c": "c.1"}, [None] * 4)


def sk_cubic_II():
    """Degree-1 skeleton with an inner black and three bare whites."""
    boundary = ["w1", "w2", "w3"]
    vt = {w: "white" for w in boundary}
    vt["V"] = "black"
    rot = {v: [] for v in vt}
    return build_map(boundary, vt, rot, {}, {}, [None] * 3, anchors={"V": 0})


def sk_wave():
    """Degree-1 skeleton whose black sits bare on the boundary."""
    boundary = ["B", "w1", "w2", "w3"]
    vt = {v: ("black" if v == "B" else "white") for v in boundary}
    rot = {v: [] for v in vt}
    return build_map(boundary, vt, rot, {}, {}, [None] * 4)


def sk_two_bare():
    """Two bare boundary blacks and six bare whites (degree 2)."""
    boundary = ["B0", "B1"] + [f"w{i}" for i in range(6)]
    vt = {v: ("black" if v.startswith("B") else "white") for v in boundary}
    rot = {v: [] for v in vt}
    return build_map(boundary, vt, rot, {}, {}, [None] * len(boundary))


def sk_two_out():
    """A black with two neighboring outgoing edges plus an inner black."""
    boundary = ["B", "w1", "A1", "w2a", "w2b", "A2", "w3"]
    vt = {"B": "black", "V": "black"}
    vt.update({w: "white" for w in boundary[1:]})
    rot = {v: [] for v in vt}
    rot["B"], rot["A1"], rot["A2"] = ["e1.0", "e2.0"], ["e1.1"], ["e2.1"]
    return build_map(boundary, vt, rot, {"e1": "dir", "e2": "dir"},
                     {"e1": "e1.1", "e2": "e2.1"}, [None] * 7,
                     anchors={"V": "e1.1"})


def sk_ud_pair():
    """One undirected edge, a bare black outside it and an inner black inside."""
    boundary = ["B", "w1", "A1", "w2a", "w2b", "A2", "w3"]
    vt = {"B": "black", "V": "black"}
    vt.update({w: "white" for w in boundary[1:]})
    rot = {v: [] for v in vt}
    rot["A1"], rot["A2"] = ["u.0"], ["u.1"]
    return build_map(boundary, vt, rot, {"u": "ud"}, {"u": None}, [None] * 7,
                     anchors={"V": "u.0"})


def sk_ud_chain():
    """Two undirected edges meeting as immediate neighbors at a white."""
    boundary = ["w1", "c1", "c2", "A", "d1", "d2", "w2", "e1", "e2", "B"]
    vt = {v: ("black" if v == "B" else "white") for v in boundary}
    vt["V1"] = vt["V2"] = "black"
    rot = {v: [] for v in vt}
    rot["w1"], rot["A"], rot["w2"] = ["u1.0"], ["u2.0", "u1.1"], ["u2.1"]
    return build_map(boundary, vt, rot, {"u1": "ud", "u2": "ud"},
                     {"u1": None, "u2": None}, [None] * 10,
                     anchors={"V1": "u1.0", "V2": "u2.0"})


def sk_ud_twins():
    """Two undirected edges in disjoint pockets of the disk."""
    boundary = ["B1", "w1", "A1", "i1", "i2", "A2",
                "B2", "w4", "C1", "i3", "i4", "C2", "w5", "w6"]
    vt = {v: ("black" if v.startswith("B") else "white") for v in boundary}
    vt["V1"] = vt["V2"] = "black"
    rot = {v: [] for v in vt}
    rot["A1"], rot["A2"] = ["u1.0"], ["u1.1"]
    rot["C1"], rot["C2"] = ["u2.0"], ["u2.1"]
    return build_map(boundary, vt, rot, {"u1": "ud", "u2": "ud"},
                     {"u1": None, "u2": None}, [None] * len(boundary),
                     anchors={"V1": "u1.0", "V2": "u2.0"})


def sk_bridged():
    """A directed edge rerouted through a white that carries another edge."""
    boundary = ["B", "p0", "A", "q0", "D", "r0", "C", "s0"]
    vt = {v: ("black" if v in ("B", "D") else "white") for v in boundary}
    rot = {v: [] for v in vt}
    rot["B"], rot["D"], rot["C"] = ["e1.0"], ["e3.0"], ["e2.1"]
    rot["A"] = ["e3.1", "e2.0", "e1.1"]
    return build_map(boundary, vt, rot,
                     {"e1": "dir", "e2": "dir", "e3": "dir"},
                     {"e1": "e1.1", "e2": "e2.1", "e3": "e3.1"}, [None] * 8)


def sk_chords_series():
    """Two chords in series; their passages share the middle region."""
    boundary = ["B1", "x1", "S1", "x2", "B2", "x3", "S2", "x4"]
    vt = {v: ("black" if v.startswith("B") else "white") for v in boundary}
    rot = {v: [] for v in vt}
    rot["B1"], rot["S1"] = ["c1.0"], ["c1.1"]
    rot["B2"], rot["S2"] = ["c2.0"], ["c2.1"]
    return build_map(boundary, vt, rot, {"c1": "dir", "c2": "dir"},
                     {"c1": "c1.1", "c2": "c2.1"}, [None] * 8)
