"""Reference values for the eleven-face worked example and the theta map."""
from jasso.sequences import st

FIG_WORD = ("zc+ mr+ sn+ tg+ ba ca tg- sn- tc+ ba ln+ sn+ sn- tc+ sn+ ba sn- ch ca tc- "
            "ln- sn+ ln+ cu ch ln- ca sn- ch tc- cu ch mr- zc-")
THETA_WORD = "zc+ mr+ sn+ sn- ch mr- zc-"

FIG_BORDURES_EXT = {
    "a": ("b", "f", "j", "g", "c", "b"),
    "b": ("a", "c", "d", "e", "f", "a"),
    "c": ("a", "g", "k", "g", "d", "b", "a"),
    "d": ("c", "g", "e", "b", "c"),
    "e": ("g", "f", "b", "d", "g"),
    "f": ("a", "b", "e", "g", "i", "j", "a"),
    "g": ("c", "a", "j", "h", "i", "f", "e", "d", "c", "k", "c"),
    "h": ("g", "j", "i", "g"),
    "i": ("f", "g", "h", "j", "f"),
    "j": ("i", "h", "g", "a", "f", "i"),
    "k": ("c", "g", "c"),
}
FIG_VISIT = list("abckdgjihef")
FIG_OPENERS = [1, 2, 3, 4, 9, 11, 12, 14, 15, 22, 23]
FIG_CLOSERS = {1: 34, 2: 33, 3: 8, 4: 7, 9: 30, 11: 21, 12: 13, 14: 20, 15: 17, 22: 28, 23: 26}
FIG_LAYERS = [set("a"), set("bcfgj"), set("dehik")]
FIG_COLOR_CLASSES = {0: set("adki"), 1: set("bj"), 2: set("eh"), 3: set("cgf")}

# rows of the map: faces and markers per stratino
FIG_ROWS = {
    st(): ["a"],
    st(1): ["b"],
    st("1#", 1): ["d", "CU"],
    st("1#", 2): ["e", "CH"],
    st(2): ["c", "g", "f", "CH"],
    st(2, 1): ["k"],
    st("2#"): ["BA", "CA"],
    st("2#", 1): ["i", "CU"],
    st("2#", 2): ["h", "CH"],
    st(3): ["j", "CH"],
}

# validator tables over word positions
FIG_E = [1, 2, 3, 4, 5, 6, 9, 10, 11, 12, 14, 15, 16, 18, 19, 22, 23, 24, 25, 27, 29, 31, 32]
FIG_SIGMA = {
    1: st(), 2: st(1), 3: st(2), 4: st(2, 1), 5: st("2#"), 6: st("2#"), 9: st("1#", 1),
    10: st(2), 11: st(2), 12: st(3), 14: st("2#", 1), 15: st("2#", 2), 16: st(3),
    18: st("2#", 2), 19: st(3), 22: st("1#", 2), 23: st(2), 24: st("2#", 1), 25: st(3),
    27: st(2), 29: st("1#", 2), 31: st("1#", 1), 32: st(2),
}
FIG_SIGMA_ROWS = {
    st(): [1], st(1): [2], st("1#", 1): [9, 31], st("1#", 2): [22, 29],
    st(2): [3, 10, 11, 23, 27, 32], st(2, 1): [4], st("2#"): [5, 6], st("2#", 1): [14, 24],
    st("2#", 2): [15, 18], st(3): [12, 16, 19, 25],
}
FIG_H = {1: [2], 2: [3, 9, 31, 32], 3: [4], 4: [5, 6], 9: [10, 11, 22, 29], 11: [12, 14],
         14: [15, 18, 19], 15: [16], 22: [23, 27], 23: [24, 25]}
FIG_A = [2, 3, 4, 9, 11, 12, 14, 15, 22, 23]
FIG_CG = {2, 3, 4, 9, 12, 14, 15, 22}
FIG_CD = {2, 4, 9, 12, 14, 15, 22, 23}
FIG_FAN = {4: [5, 6], 9: [10, 11, 23, 27], 14: [16, 19]}
FIG_ZM = {14}
FIG_STRATAJOS = [[3, 10, 11, 23, 27, 32], [12, 16, 19, 25], [22, 29], [15, 18]]
FIG_T = {2: [9, 31], 11: [14], 23: [24]}
FIG_S = {2: [3, 10, 11, 23, 27, 32], 9: [22, 29], 11: [12, 16, 19], 14: [15, 18], 23: [25]}

# drawing
FIG_LADDER = ["ε", "1", "1#,1", "1#,2", "X'", "2", "2,1", "X'", "2#", "2#,1", "2#,2", "X'", "3", "X'"]
FIG_CURVES = {
    2: [(1, 1), (1, 13), (24, 13), (24, 1), (1, 1)],
    4: [(3, 6), (3, 7), (4, 7), (4, 8), (5, 8), (5, 7), (6, 7), (6, 6), (3, 6)],
    9: [(7, 2), (7, 4), (8, 4), (8, 5), (20, 5), (20, 4), (22, 4), (22, 2), (7, 2)],
    14: [(11, 9), (11, 11), (13, 11), (13, 12), (15, 12), (15, 11), (18, 11), (18, 9), (11, 9)],
}
FIG_SEGMENTS = {
    3: [(2, 13), (2, 5), (23, 5), (23, 13)],
    12: [(10, 13), (10, 12), (19, 12), (19, 13)],
    15: [(12, 11), (12, 10), (14, 10), (14, 12)],
    22: [(16, 5), (16, 3), (21, 3), (21, 4)],
}
FIG_TRANSVERSALS = {11: [(9, 5), (9, 8), (4, 8), (4, 13)], 23: [(17, 5), (17, 9)]}
