"""Sporadic maximal graphs as reviewed edge-list literals.

Each entry maps a graph id to ``(vertices, charges, edges)``.  Vertex names
follow the letters used in the drawings; the matrix row order is the order
of ``vertices``.  Weights and charges are element tokens understood by
``cyclomat.ring.parse_element`` (``phi``, ``phibar``, ``sqrt2``, ...).  A
charge or edge drawn dashed is written with a leading minus sign.
"""

SPORADIC = {
    # orders 1 and 2
    "S1": ("a", {"a": "2"}, []),
    "S2": ("ab", {}, [("a", "b", "2")]),
    "S2prime": ("ab", {"a": "sqrt3", "b": "-sqrt3"}, [("a", "b", "1")]),
    "S2dag": ("ab", {"a": "1", "b": "-1"}, [("a", "b", "sqrt3")]),
    "S2ddag": ("ab", {"a": "sqrt2", "b": "-sqrt2"}, [("a", "b", "sqrt2")]),
    # order 3
    "S3": (
        "abc",
        {"a": "phi", "b": "phibar", "c": "1"},
        [("a", "c", "phibar"), ("c", "b", "phi"), ("b", "a", "1")],
    ),
    # order 4
    "S4_sqrt3": (
        "abcd",
        {},
        [("a", "b", "sqrt3"), ("d", "c", "sqrt3"), ("b", "d", "1"), ("c", "a", "-1")],
    ),
    "S4_1phi": (
        "abcd",
        {"a": "1", "b": "-1", "c": "-1", "d": "1"},
        [("b", "a", "phi"), ("a", "c", "phibar"), ("d", "b", "phibar"), ("c", "d", "-phi")],
    ),
    "S4_2phi": (
        "abcd",
        {"a": "phi", "b": "-phi", "c": "-phi", "d": "phi"},
        [("a", "c", "phibar"), ("d", "b", "phibar"), ("b", "a", "1"), ("c", "d", "-1")],
    ),
    "S4_3phi": (
        "abcd",
        {"b": "phi", "c": "phibar", "d": "-1"},
        [("b", "a", "phibar"), ("a", "c", "phi"), ("d", "b", "1"), ("c", "d", "1"), ("a", "d", "1")],
    ),
    "S4_1sqrt2": (
        "abcd",
        {"a": "1", "b": "-1", "c": "-1", "d": "1"},
        [("b", "a", "sqrt2"), ("c", "d", "-sqrt2"), ("d", "b", "1"), ("a", "c", "1")],
    ),
    "S4_2sqrt2": (
        "abcd",
        {"a": "sqrt2", "c": "-sqrt2"},
        [("d", "b", "sqrt2"), ("b", "a", "-1"), ("c", "d", "1"), ("c", "b", "1"), ("a", "d", "1")],
    ),
    "S4_3sqrt2": (
        "abcd",
        {"a": "sqrt2", "b": "-sqrt2", "c": "-sqrt2", "d": "sqrt2"},
        [("b", "a", "1"), ("c", "d", "-1"), ("d", "b", "1"), ("a", "c", "1")],
    ),
    # order 6
    "S6": (
        "abcdef",
        {},
        [
            ("a", "b", "phi"), ("b", "e", "phibar"), ("d", "a", "phibar"),
            ("c", "d", "phi"), ("f", "c", "phibar"), ("e", "f", "phi"),
            ("b", "c", "1"), ("d", "e", "1"), ("f", "a", "1"),
        ],
    ),
    # order 7
    "S7": (
        "abcdefg",
        {"a": "1", "d": "-1", "e": "1", "f": "1"},
        [
            ("b", "a", "1"), ("a", "c", "-1"), ("a", "d", "1"), ("c", "f", "1"),
            ("g", "f", "-1"), ("b", "g", "1"), ("d", "e", "1"), ("d", "f", "1"),
            ("b", "e", "-1"), ("c", "g", "1"), ("e", "g", "1"), ("b", "c", "1"),
        ],
    ),
    # order 8
    "S8": (
        "abcdefgh",
        {"a": "-1", "b": "1", "c": "1", "d": "-1", "e": "1", "f": "-1", "g": "-1", "h": "1"},
        [
            ("b", "a", "1"), ("a", "c", "-1"), ("a", "e", "1"), ("c", "g", "1"),
            ("c", "d", "1"), ("b", "f", "-1"), ("b", "d", "1"), ("e", "f", "1"),
            ("e", "g", "1"), ("h", "g", "-1"), ("f", "h", "1"), ("d", "h", "1"),
        ],
    ),
    "S8prime": (
        "abcdefgh",
        {"a": "-1", "b": "1", "g": "1", "h": "-1"},
        [
            ("b", "a", "1"), ("a", "c", "1"), ("a", "e", "1"), ("c", "g", "1"),
            ("c", "d", "-1"), ("b", "f", "-1"), ("b", "d", "1"), ("e", "f", "1"),
            ("e", "g", "-1"), ("h", "g", "1"), ("f", "h", "1"), ("d", "h", "1"),
            ("d", "f", "1"), ("c", "e", "1"),
        ],
    ),
    "S8dag": (
        "abcdefgh",
        {},
        [
            ("b", "a", "sqrt2"), ("f", "e", "sqrt2"), ("c", "d", "-sqrt2"), ("g", "h", "sqrt2"),
            ("d", "b", "1"), ("f", "b", "-1"), ("e", "g", "-1"), ("c", "g", "1"),
            ("f", "h", "1"), ("a", "e", "1"), ("d", "h", "1"), ("a", "c", "1"),
        ],
    ),
    "S8dagdag": (
        "abcdefgh",
        {},
        [
            ("b", "a", "phibar"), ("f", "e", "phibar"), ("c", "d", "-phibar"), ("f", "b", "-phi"),
            ("c", "g", "phi"), ("g", "h", "phibar"), ("e", "a", "phi"), ("d", "h", "phi"),
            ("d", "b", "1"), ("e", "g", "-1"), ("f", "h", "1"), ("a", "c", "1"),
        ],
    ),
    "S8ddag": (
        "abcdefgh",
        {},
        [
            ("b", "a", "phi"), ("f", "b", "phibar"), ("c", "g", "phi"), ("g", "h", "phibar"),
            ("h", "f", "phi"), ("a", "c", "phibar"),
            ("e", "f", "1"), ("d", "c", "1"), ("d", "b", "1"), ("e", "g", "1"),
            ("e", "d", "-1"), ("a", "e", "1"), ("d", "h", "1"),
        ],
    ),
    # order 14: points 0..6 and lines 7..13 of the Fano plane, each point
    # joined to the four lines that miss it
    "S14": (
        tuple(range(14)),
        {},
        [
            (0, 8, "-1"), (0, 9, "1"), (0, 10, "1"), (0, 12, "1"),
            (1, 9, "1"), (1, 10, "-1"), (1, 11, "-1"), (1, 13, "1"),
            (2, 7, "-1"), (2, 10, "-1"), (2, 11, "1"), (2, 12, "1"),
            (3, 8, "-1"), (3, 11, "1"), (3, 12, "-1"), (3, 13, "1"),
            (4, 7, "1"), (4, 9, "-1"), (4, 12, "1"), (4, 13, "1"),
            (5, 7, "-1"), (5, 8, "1"), (5, 10, "1"), (5, 13, "1"),
            (6, 7, "1"), (6, 8, "1"), (6, 9, "1"), (6, 11, "1"),
        ],
    ),
}


def _s16_edges():
    # inner octagon i0..i7 joined at distance 3, outer octagon o0..o7 as a
    # cycle, spokes o_j - i_{j+1} negative and o_j - i_{j-1} positive
    edges = []
    for j in range(8):
        if j < (j + 3) % 8:
            edges.append((f"i{j}", f"i{(j + 3) % 8}", "1"))
        else:
            edges.append((f"i{(j + 3) % 8}", f"i{j}", "1"))
    edges = sorted(set(edges))
    for j in range(8):
        edges.append((f"o{j}", f"o{(j + 1) % 8}", "1"))
        edges.append((f"o{j}", f"i{(j + 1) % 8}", "-1"))
        edges.append((f"o{j}", f"i{(j - 1) % 8}", "1"))
    return edges


SPORADIC["S16"] = (
    tuple([f"i{j}" for j in range(8)] + [f"o{j}" for j in range(8)]),
    {},
    _s16_edges(),
)

# display names
PRETTY = {
    "S2prime": "S2′",
    "S2dag": "S2†",
    "S2ddag": "S2‡",
    "S8prime": "S8′",
    "S8dag": "S8†",
    "S8dagdag": "S8††",
    "S8ddag": "S8‡",
    "S4_sqrt3": "S4^(√3)",
    "S4_1phi": "S4^(1,φ)",
    "S4_2phi": "S4^(2,φ)",
    "S4_3phi": "S4^(3,φ)",
    "S4_1sqrt2": "S4^(1,√2)",
    "S4_2sqrt2": "S4^(2,√2)",
    "S4_3sqrt2": "S4^(3,√2)",
}
