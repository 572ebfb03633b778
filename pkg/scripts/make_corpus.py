"""Regenerate the fixture corpus under corpus/.

Run from the repository root: ``python3 scripts/make_corpus.py``.
Every file is a document in the versioned JSON schema and revalidates on
load; the move transcriptions are one-entry scripts applicable to the named
host fixtures.
"""

from __future__ import annotations

import pathlib

from dessinkit.blocks import GluePlan, cubic_block, enumerate_blocks
from dessinkit.core_map import MapBuilder, apply_rewrite
from dessinkit.correspondence import dessin_from_skeleton, skeleton_of
from dessinkit.dessin import DESSIN_MOVES
from dessinkit.io import Document, save
from dessinkit.weak import straighten_sites, straighten_zigzag

OUT = pathlib.Path(__file__).resolve().parent.parent / "corpus"


def rotated(m, k):
    b = MapBuilder(m)
    b.boundary = b.boundary[k:] + b.boundary[:k]
    b.boundary_edges = b.boundary_edges[k:] + b.boundary_edges[:k]
    return b.build()


def main() -> None:
    OUT.mkdir(exist_ok=True)
    c1, c2 = cubic_block("I"), cubic_block("II")
    b2 = [dessin_from_skeleton(s) for s in enumerate_blocks(2, "I")]
    straightened = straighten_zigzag(c1, straighten_sites(c1)[0])
    bridged = apply_rewrite(
        b2[1], DESSIN_MOVES["bridge-create"], ("r24", "t1.0")
    )
    opened = apply_rewrite(
        straightened, DESSIN_MOVES["white-out"], ("w1", "c0.0")
    )

    dessins = {
        "cubic-I": (c1, "degree-3 block of type I"),
        "cubic-II": (c2, "degree-3 block of type II"),
        "cubic-I-rotated": (rotated(c1, 3), "cubic-I, boundary rotated by 3"),
        "block-d2-I-1": (b2[0], "first degree-6 type-I block"),
        "block-d2-I-2": (b2[1], "second degree-6 type-I block"),
        "cubic-I-straightened": (straightened, "cubic-I, one zigzag straightened"),
        "block-d2-I-2-bridged": (bridged, "block-d2-I-2 with a bridge added"),
        "cubic-I-straightened-opened": (opened, "straightened cubic-I, white pushed out"),
    }
    for name, (g, note) in dessins.items():
        save(OUT / f"{name}.dessin", Document("dessin", g, (note,)))
    for name in ("cubic-I", "cubic-II"):
        sk, _ = skeleton_of(dessins[name][0])
        save(
            OUT / f"{name}.skeleton",
            Document("skeleton", sk, (f"skeleton of {name}",)),
        )

    provenance = "transcribed from figure: Elementary moves of dessins"
    transcriptions = {
        "mono-modification": ("block-d2-I-1", ("i1.0", "i2.0")),
        "bridge-create": ("block-d2-I-2", ("r24", "t1.0")),
        "bridge-destroy": ("block-d2-I-2-bridged", ("e1",)),
        "white-in": ("cubic-I-straightened-opened", ("w0",)),
        "white-out": ("cubic-I-straightened", ("w1", "c0.0")),
        "black-in": ("cubic-I-straightened", ("b0",)),
        "black-out": ("cubic-II", ("V0", "t0.1")),
    }
    for rule, (host, site) in transcriptions.items():
        save(
            OUT / f"move-{rule}.script",
            Document(
                "script",
                (("move", rule, site),),
                (provenance, f"applies to {host}.dessin"),
            ),
        )

    save(
        OUT / "junction-pair.glue-plan",
        Document(
            "glue-plan",
            GluePlan(
                (c1, c1),
                (("junction", 0, straighten_sites(c1)[0], 1,
                  straighten_sites(c1)[1]),),
            ),
            ("two type-I cubics joined along parts of two zigzags",),
        ),
    )
    print(f"wrote {len(list(OUT.iterdir()))} documents to {OUT}")


if __name__ == "__main__":
    main()
