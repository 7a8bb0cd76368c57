# Worked examples: a prime hypergraph on the grid K2 x K4, its product with
# a single undirected hyperedge, and that hyperedge itself.
from hyperfactor.core.fileformat import parse
from hyperfactor.core.types import DirectedHypergraph

# Arcs e1..e8 in declaration order. Vertex "ab" sits at grid position (a, b).
FIG1_TEXT = """\
dhg 1
# prime: its 2-section is K4 x K2, yet no increment-closed split exists
arc 11 12 13 -> 12 13 14
arc 21 22 23 -> 22 23 24
arc 14 -> 12
arc 11 -> 21
arc 12 -> 22
arc 13 23 -> 13 23
arc 14 -> 24
arc 13 -> 23
"""

M2_TEXT = """\
dhg 1
arc a b -> a b
"""

# FIG1 x M2. Vertex "xyz" is FIG1 vertex "xz" paired with the y-th vertex of M2.
FIG2_TEXT = """\
dhg 1
arc 111 112 113 -> 112 113 114
arc 121 122 123 -> 122 123 124
arc 211 212 213 -> 212 213 214
arc 221 222 223 -> 222 223 224
arc 114 -> 112
arc 124 -> 122
arc 111 -> 211
arc 121 -> 221
arc 112 -> 212
arc 122 -> 222
arc 113 213 -> 113 213
arc 123 223 -> 123 223
arc 114 -> 214
arc 124 -> 224
arc 113 -> 213
arc 123 -> 223
arc 111 121 -> 111 121
arc 112 122 -> 112 122
arc 113 123 -> 113 123
arc 114 124 -> 114 124
arc 211 221 -> 211 221
arc 212 222 -> 212 222
arc 213 223 -> 213 223
arc 214 224 -> 214 224
"""

FIGURES = {
    "fig1": FIG1_TEXT,
    "fig2": FIG2_TEXT,
    "m2": M2_TEXT,
}


def fig1() -> DirectedHypergraph:
    return parse(FIG1_TEXT)


def fig2() -> DirectedHypergraph:
    return parse(FIG2_TEXT)


def m2() -> DirectedHypergraph:
    return parse(M2_TEXT)
