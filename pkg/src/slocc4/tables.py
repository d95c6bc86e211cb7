"""Embedded classification data, one commented block per table.

Everything numeric or symbolic that the classification relies on lives in
this module and nowhere else; each block says what it contains.  Matrices are given as integer (or Fraction)
row tuples; states as maps from 4-bit strings to Gaussian-rational strings;
polynomials as strings for the embedded parser.
"""

from fractions import Fraction

# --- simple roots of the root system relative to u1..u4 ----------------------

SIMPLE_ROOTS = ((0, -2, 0, 0), (1, 1, 1, 1), (0, 0, -2, 0), (0, 0, 0, -2))

# --- the eleven root-subsystem classes and their parametrised families -------
# label -> generating simple-root indices of the representative subsystem
FAMILY_SUBSYSTEM_SIMPLE = {
    2: (4,), 3: (2, 4), 4: (1, 3), 5: (1, 4), 6: (3, 4),
    7: (1, 2, 3), 8: (1, 2, 4), 9: (2, 3, 4), 10: (1, 3, 4), 11: (1, 2, 3, 4),
}

FAMILY_TYPES = {1: "empty", 2: "A1", 3: "A2", 4: "2A1", 5: "2A1", 6: "2A1",
              7: "A3", 8: "A3", 9: "A3", 10: "3A1", 11: "D4"}

FAMILY_GAMMA_ORDERS = {1: 192, 2: 8, 3: 2, 4: 8, 5: 8, 6: 8,
                     7: 2, 8: 2, 9: 2, 10: 2, 11: 1}

# column 4: h_{Pi_i} parametrisations, as u-coordinate columns per parameter
FAMILY_PARAM_COLUMNS = {
    1: ((1, 0, 0, 0), (0, 1, 0, 0), (0, 0, 1, 0), (0, 0, 0, 1)),
    2: ((1, 0, 0, 0), (0, 1, 0, 0), (0, 0, 1, 0)),
    3: ((1, -1, 0, 0), (1, 0, -1, 0)),
    4: ((1, 0, 0, 0), (0, 0, 0, 1)),
    5: ((1, 0, 0, 0), (0, 0, 1, 0)),
    6: ((1, 0, 0, 0), (0, 1, 0, 0)),
    7: ((1, 0, 0, -1),),
    8: ((1, 0, -1, 0),),
    9: ((1, -1, 0, 0),),
    10: ((1, 0, 0, 0),),
    11: (),
}

FAMILY_CONDITION_TEXT = {
    1: "all parameters nonzero and l1 not in {±l2±l3±l4}",
    2: "all parameters nonzero and l1 not in {±l2±l3}",
    3: "l1, l2 nonzero and l1 != -l2",
    4: "l1, l2 nonzero and l1 != ±l2",
    5: "l1, l2 nonzero and l1 != ±l2",
    6: "l1, l2 nonzero and l1 != ±l2",
    7: "l1 nonzero", 8: "l1 nonzero", 9: "l1 nonzero", 10: "l1 nonzero",
    11: "zero element",
}

# last column: dimensions of the derived algebra of z_g(p_i); the printed
# type for row 11 (so(4,C)) contradicts z_g(0)' = g, dimension 28 is used
FAMILY_DERIVED_TYPES = {1: "0", 2: "sl(2,C)", 3: "sl(3,C)", 4: "sl(2,C)^2",
                      5: "sl(2,C)^2", 6: "sl(2,C)^2", 7: "sl(4,C)",
                      8: "sl(4,C)", 9: "sl(4,C)", 10: "sl(2,C)^3", 11: "so(8,C)"}
FAMILY_DERIVED_DIMS = {1: 0, 2: 3, 3: 8, 4: 6, 5: 6, 6: 6,
                     7: 15, 8: 15, 9: 15, 10: 9, 11: 28}
FAMILY_CENTRALIZER_DIMS = {1: 4, 2: 6, 3: 10, 4: 8, 5: 8, 6: 8,
                         7: 16, 8: 16, 9: 16, 10: 10, 11: 28}

# --- complement realisations of the Gamma groups inside the Weyl group ------

GAMMA_COMPLEMENT_GENERATORS = {
    1: (),  # the full Weyl group; simple reflections are used directly
    2: (((-1, 0, 0, 0), (0, -1, 0, 0), (0, 0, 1, 0), (0, 0, 0, 1)),
        ((-1, 0, 0, 0), (0, 1, 0, 0), (0, 0, -1, 0), (0, 0, 0, 1)),
        ((-1, 0, 0, 0), (0, 1, 0, 0), (0, 0, 1, 0), (0, 0, 0, -1))),
    3: (((-1, 0, 0, 0), (0, -1, 0, 0), (0, 0, -1, 0), (0, 0, 0, -1)),),
    4: (((1, 0, 0, 0), (0, 1, 0, 0), (0, 0, 1, 0), (0, 0, 0, -1)),
        ((0, 0, 0, -1), (0, 0, 1, 0), (0, 1, 0, 0), (1, 0, 0, 0))),
    5: (((1, 0, 0, 0), (0, 1, 0, 0), (0, 0, -1, 0), (0, 0, 0, 1)),
        ((0, 0, -1, 0), (0, 0, 0, -1), (1, 0, 0, 0), (0, -1, 0, 0))),
    6: (((-1, 0, 0, 0), (0, 1, 0, 0), (0, 0, 1, 0), (0, 0, 0, 1)),
        ((0, -1, 0, 0), (1, 0, 0, 0), (0, 0, 0, -1), (0, 0, -1, 0))),
    7: (((-1, 0, 0, 0), (0, -1, 0, 0), (0, 0, -1, 0), (0, 0, 0, -1)),),
    8: (((-1, 0, 0, 0), (0, -1, 0, 0), (0, 0, -1, 0), (0, 0, 0, -1)),),
    9: (((-1, 0, 0, 0), (0, -1, 0, 0), (0, 0, -1, 0), (0, 0, 0, -1)),),
    10: (((-1, 0, 0, 0), (0, -1, 0, 0), (0, 0, -1, 0), (0, 0, 0, -1)),),
    11: (),
}

# --- the order-3 matrix entering the generic-family parameter normal form ---

Q_MATRIX = (
    (Fraction(1, 2), Fraction(-1, 2), Fraction(-1, 2), Fraction(1, 2)),
    (Fraction(1, 2), Fraction(-1, 2), Fraction(1, 2), Fraction(-1, 2)),
    (Fraction(-1, 2), Fraction(-1, 2), Fraction(1, 2), Fraction(1, 2)),
    (Fraction(1, 2), Fraction(1, 2), Fraction(1, 2), Fraction(1, 2)),
)

# --- parameter groups for conjugacy with qubit permutations ------------------
# family label -> ('signed_perms', n) | ('matrix_group', gens) | ('pq',)
SCLASS_PARAM_GROUPS = {
    1: ("pq",),                    # P Q^i with P any signed permutation matrix
    2: ("signed_perms", 3),
    3: ("matrix_group", (((0, 1), (1, 0)), ((1, 1), (0, -1)))),     # Dih6
    4: ("matrix_group", (((-1, 0), (0, 1)), ((0, 1), (1, 0)))),     # Dih4
    7: ("matrix_group", (((-1,),),)),
    10: ("matrix_group", (((-1,),),)),
}
# families reduced away by a qubit swap before the table applies
SYM_REDUCTION = {5: (4, (1, 3, 2, 4)), 6: (4, (1, 4, 3, 2)),
                 8: (7, (1, 3, 2, 4)), 9: (7, (1, 4, 3, 2))}

# --- nilpotent parts n_{i,j} of the mixed classes ----------------------------

NIJ = {
    2: (("0011",),),
    3: (("0011",), ("0111", "1011", "0010", "0001")),
    4: (("0110", "1010"), ("0110", "0101"), ("0110",), ("0101",)),
    5: (("0110", "1100"), ("0110", "0011"), ("0110",), ("0011",)),
    6: (("0011", "1010"), ("0011", "0101"), ("0011",), ("0101",)),
    7: (("1101", "1011", "1000", "0001"), ("1101", "1010", "0001"),
        ("1011", "1000", "0101"), ("1011", "1000"), ("1101", "0001"),
        ("1001",)),
    8: (("1011", "1101", "1000", "0001"), ("1011", "1100", "0001"),
        ("1101", "1000", "0011"), ("1101", "1000"), ("1011", "0001"),
        ("1001",)),
    9: (("1101", "1110", "1000", "0100"), ("1101", "1010", "0100"),
        ("1110", "1000", "0101"), ("1110", "1000"), ("1101", "0100"),
        ("1100",)),
    10: (("1100", "1010", "0110"), ("1010", "0110"), ("1010", "0110", "0011"),
         ("1100", "0110"), ("0110",), ("0110", "0011"),
         ("1100", "0110", "0101"), ("0110", "0101"), ("0110", "0101", "0011"),
         ("1100", "1010"), ("1010",), ("1010", "0011"), ("0011",)),
}
# cases 5,6,8,9 arise from 4 and 7 by the stated qubit swaps (cross-checked)
MIXED_PART_DERIVATION = SYM_REDUCTION

# --- the 31 nilpotent orbit representatives ----------------------------------
# (orbit number, basis states summed, N-family, D-family)
NILPOTENT_ORBITS = (
    (1, ("1100",), "N2", "D2"),
    (2, ("1100", "0000"), "N3", "D3"),
    (3, ("1100", "1001"), "N3", "D3"),
    (4, ("1100", "1010"), "N3", "D3"),
    (5, ("1101", "0100"), "N3", "D3"),
    (6, ("1110", "0100"), "N3", "D3"),
    (7, ("1110", "1101"), "N3", "D3"),
    (8, ("1101", "0100", "1000"), "N6", "D6"),
    (9, ("1110", "0100", "1000"), "N6", "D6"),
    (10, ("1110", "1101", "1000"), "N6", "D6"),
    (11, ("1110", "1101", "0100"), "N6", "D6"),
    (12, ("0101", "1100", "1001", "0000"), "N9", "D9"),
    (13, ("0110", "1100", "1010", "0000"), "N9", "D9"),
    (14, ("1111", "1100", "1001", "1010"), "N9", "D9"),
    (15, ("0111", "1110", "1101", "0100"), "N9", "D9"),
    (16, ("1110", "1101", "0100", "1000"), "N4", "D4"),
    (17, ("1110", "1101", "0000"), "N5", "D5"),
    (18, ("1110", "0100", "1001"), "N5", "D5"),
    (19, ("1101", "0100", "1010"), "N5", "D5"),
    (20, ("0101", "1110", "1000"), "N5", "D5"),
    (21, ("0110", "1101", "1000"), "N5", "D5"),
    (22, ("1111", "0100", "1000"), "N5", "D5"),
    (23, ("1110", "0100", "0000", "1001"), "N8", "D8"),
    (24, ("0110", "1101", "1000", "0000"), "N8", "D8"),
    (25, ("1111", "0100", "1000", "1001"), "N8", "D8"),
    (26, ("1111", "0100", "1000", "1010"), "N8", "D8"),
    (27, ("0101", "1110", "0000", "1001"), "N7", "D7"),
    (28, ("0110", "1101", "0000", "1010"), "N7", "D7"),
    (29, ("1111", "0100", "1001", "1010"), "N7", "D7"),
    (30, ("1111", "0110", "0101", "1000"), "N7", "D7"),
    (31, (), "N1", "D1"),
)

# --- permutation-level classes of the nilpotent parts n_{i,j} ----------------

MIXED_PART_SCLASS = {
    (2, 1): ("N2", "D2"),
    (3, 1): ("N2", "D2"), (3, 2): ("N4", "D4"),
    (4, 1): ("N3", "D3"), (4, 2): ("N3", "D3"),
    (4, 3): ("N2", "D2"), (4, 4): ("N2", "D2"),
    (7, 1): ("N4", "D4"), (7, 2): ("N5", "D5"), (7, 3): ("N5", "D5"),
    (7, 4): ("N3", "D3"), (7, 5): ("N3", "D3"), (7, 6): ("N2", "D2"),
    (10, 1): ("N6", "D6"), (10, 2): ("N3", "D3"), (10, 3): ("N6", "D6"),
    (10, 4): ("N3", "D3"), (10, 5): ("N2", "D2"), (10, 6): ("N3", "D3"),
    (10, 7): ("N6", "D6"), (10, 8): ("N3", "D3"), (10, 9): ("N6", "D6"),
    (10, 10): ("N3", "D3"), (10, 11): ("N2", "D2"), (10, 12): ("N3", "D3"),
    (10, 13): ("N2", "D2"),
}

# --- the nine permutation-level nilpotent representatives N1..N9 -------------

SCLASS_NILPOTENT_REPS = {
    "N1": {},
    # (i/2)(u3+u4-u2-u1) + (i/2)(1110+0001+1000+0111-1101-0010-1011-0100)
    "N2": {"0101": "1/2i", "1010": "1/2i", "0011": "1/2i", "1100": "1/2i",
           "0110": "-1/2i", "1001": "-1/2i", "0000": "-1/2i", "1111": "-1/2i",
           "1110": "1/2i", "0001": "1/2i", "1000": "1/2i", "0111": "1/2i",
           "1101": "-1/2i", "0010": "-1/2i", "1011": "-1/2i", "0100": "-1/2i"},
    # (1/2)(u3-u2+0010+1101-1110-0001)
    "N3": {"0101": "1/2", "1010": "1/2", "0110": "-1/2", "1001": "-1/2",
           "0010": "1/2", "1101": "1/2", "1110": "-1/2", "0001": "-1/2"},
    # i(1001-0110) + (1/2)(1101+0100+1011+0010-1110-0001-1000-0111)
    "N4": {"1001": "i", "0110": "-i",
           "1101": "1/2", "0100": "1/2", "1011": "1/2", "0010": "1/2",
           "1110": "-1/2", "0001": "-1/2", "1000": "-1/2", "0111": "-1/2"},
    "N5": {"0001": "2i", "0110": "2i", "1011": "-2i"},
    # ((i+1)/2)(0010+1101-u2) + ((i-1)/2)(1110+0001-u3)
    #   - (i/2)(1011+0100+1000+0111-u1-u4)
    "N6": {"0010": "1/2+1/2i", "1101": "1/2+1/2i",
           "0110": "-1/2-1/2i", "1001": "-1/2-1/2i",
           "1110": "-1/2+1/2i", "0001": "-1/2+1/2i",
           "0101": "1/2-1/2i", "1010": "1/2-1/2i",
           "1011": "-1/2i", "0100": "-1/2i", "1000": "-1/2i", "0111": "-1/2i",
           "0000": "1/2i", "1111": "1/2i", "0011": "1/2i", "1100": "1/2i"},
    "N7": {"1010": "1", "1001": "-1", "0011": "1", "0000": "1",
           "0110": "1+i", "0101": "1+i",
           "1011": "-i", "1000": "-i", "0010": "-i", "0001": "i"},
    # ((i+1)/2)u1 - ((i-1)/2)u4 + ((i-1)/2)(1110+0001) - ((i+1)/2)(1101+0010)
    #   + (1/2)(1011+0110+0101+1000) + ((1-2i)/2)(0111+1010+1001+0100)
    "N8": {"0000": "1/2+1/2i", "1111": "1/2+1/2i",
           "0011": "1/2-1/2i", "1100": "1/2-1/2i",
           "1110": "-1/2+1/2i", "0001": "-1/2+1/2i",
           "1101": "-1/2-1/2i", "0010": "-1/2-1/2i",
           "1011": "1/2", "0110": "1/2", "0101": "1/2", "1000": "1/2",
           "0111": "1/2-i", "1010": "1/2-i", "1001": "1/2-i", "0100": "1/2-i"},
    "N9": {"1111": "1/2", "1100": "1/2", "1011": "1/2", "1000": "1/2",
           "1110": "1/2i", "1101": "1/2i", "1010": "-1/2i", "1001": "1/2i",
           "0111": "1/2", "0100": "1/2", "0011": "1/2", "0000": "1/2",
           "0110": "1/2i", "0101": "1/2i", "0010": "-1/2i", "0001": "1/2i"},
}

# shorthand matrices used by the stabiliser rows (I, J, K, L, D(u[,v]), L(v),
# M(a,b)) are resolved in catalog.quad_from_names and the samplers there

# --- centralisers of the semisimple families ---------------------------------
# family -> (identity component dim, sampler tag, component generator quads)
SEMISIMPLE_STABILIZERS = {
    1: (0, "trivial", (("J", "J", "J", "J"), ("-I", "-I", "I", "I"),
                       ("-I", "I", "-I", "I"), ("K", "K", "K", "K"))),
    2: (1, "d_iid_a", (("-I", "-I", "I", "I"), ("-I", "I", "-I", "I"),
                       ("J", "J", "J", "J"))),
    3: (3, "sharp_AA", (("-I", "-I", "I", "I"), ("-I", "I", "-I", "I"))),
    4: (2, "d_abab", (("-I", "I", "-I", "I"), ("J", "J", "J", "J"))),
    5: (2, "d_aabb", (("-I", "-I", "I", "I"), ("J", "J", "J", "J"))),
    6: (2, "d_abba", (("-I", "I", "-I", "I"), ("J", "J", "J", "J"))),
    7: (6, "sharp_AB_12_34", (("-I", "I", "-I", "I"),)),
    8: (6, "sharp_AB_13_24", (("-I", "-I", "I", "I"),)),
    9: (6, "sharp_AB_14_23", (("-I", "I", "-I", "I"),)),
    10: (3, "d_torus3", (("J", "J", "J", "J"),)),
}

# --- centralisers of the permutation-level nilpotent representatives ---------
# N-family -> (orbit number, identity dim, sampler tag, generator quads)
NILPOTENT_STABILIZERS = {
    "N2": (1, 7, "nilz_n2", ()),
    "N3": (2, 6, "nilz_n3", (("-I", "I", "-I", "I"),)),
    "N4": (16, 3, "nilz_n4", (("-I", "-I", "I", "I"), ("-I", "I", "-I", "I"),
                              ("-L", "L", "L", "L"))),
    "N5": (17, 2, "nilz_n5", (("-I", "I", "-I", "I"), ("-I", "I", "I", "-I"))),
    "N6": (8, 4, "nilz_n6", (("-I", "-I", "I", "I"), ("-I", "I", "-I", "I"))),
    "N7": (27, 0, "trivial", (("-I", "-I", "I", "I"), ("-I", "I", "-I", "I"),
                              ("-I", "I", "I", "-I"))),
    "N8": (23, 1, "nilz_n8", (("-I", "-I", "I", "I"), ("-I", "I", "-I", "I"),
                              ("-I", "I", "I", "-I"))),
    "N9": (12, 3, "nilz_n9", (("-I", "I", "-I", "I"), ("L", "L", "L", "L"))),
}

# --- the twelve mixed permutation-level classes ------------------------------
# (family i, j) -> (D-family, identity dim, sampler tag, generator quads)
MIXED_STABILIZERS = {
    (2, 1): ("D2", 0, "trivial", (("-I", "-I", "I", "I"), ("-I", "I", "-I", "I"),
                                  ("L", "L", "L", "L"))),
    (3, 1): ("D2", 1, "mt_31", (("-I", "-I", "I", "I"), ("-I", "I", "-I", "I"),
                                ("L", "L", "L", "L"))),
    (3, 2): ("D4", 0, "trivial", (("-I", "-I", "I", "I"), ("-I", "I", "-I", "I"),
                                  ("-I", "-I", "-I", "-I"))),
    (4, 1): ("D3", 0, "trivial", (("-I", "-I", "I", "I"), ("-I", "I", "-I", "I"),
                                  ("L", "L", "L", "L"))),
    (4, 3): ("D2", 1, "mt_43", (("-I", "-I", "I", "I"), ("-I", "I", "-I", "I"))),
    (7, 1): ("D4", 1, "mt_71", (("-I", "-I", "I", "I"), ("-I", "I", "-I", "I"),
                                ("-I", "-I", "-I", "-I"))),
    (7, 2): ("D5", 0, "trivial", (("-I", "-I", "I", "I"), ("-I", "I", "-I", "I"),
                                  ("-I", "-I", "-I", "-I"))),
    (7, 4): ("D3", 2, "mt_74", (("-I", "-I", "I", "I"), ("-I", "I", "-I", "I"),
                                ("L", "L", "J", "J"))),
    (7, 6): ("D2", 3, "mt_76", (("-I", "-I", "I", "I"), ("-I", "I", "-I", "I"))),
    (10, 1): ("D6", 0, "trivial", (("-I", "-I", "I", "I"), ("-I", "I", "-I", "I"),
                                   ("L", "L", "L", "L"))),
    (10, 2): ("D3", 1, "mt_102", (("-I", "-I", "I", "I"), ("-I", "I", "-I", "I"))),
    (10, 5): ("D2", 2, "mt_105", (("-I", "-I", "I", "I"),)),
}

# --- stabiliser identity-component dimensions, family order 1..10 ------------
SEMISIMPLE_STABILIZER_DIMS = (0, 1, 3, 2, 2, 2, 6, 6, 6, 3)

# --- invariant values on each semisimple family ------------------------------

FAMILY_INVARIANT_VALUES = {
    1: ("l1^2+l2^2+l3^2+l4^2",
        "-l1^2*l2^2+l1^2*l3^2+l2^2*l4^2-l3^2*l4^2",
        "l1^2*l2^2-l1^2*l4^2-l2^2*l3^2+l3^2*l4^2",
        "l1^4*l2^2+l1^2*l2^4-l1^2*l2^2*l3^2-l1^2*l2^2*l4^2"
        "-l1^2*l3^2*l4^2-l2^2*l3^2*l4^2+l3^4*l4^2+l3^2*l4^4"),
    2: ("l1^2+l2^2+l3^2", "-l1^2*l2^2+l1^2*l3^2", "l1^2*l2^2-l2^2*l3^2",
        "l1^4*l2^2+l1^2*l2^4-l1^2*l2^2*l3^2"),
    3: ("2*l1^2+2*l1*l2+2*l2^2",
        "-l1^4-2*l1^3*l2+2*l1*l2^3+l2^4",
        "l1^4+2*l1^3*l2",
        "2*l1^6+6*l1^5*l2+6*l1^4*l2^2+2*l1^3*l2^3"),
    4: ("l1^2+l2^2", "0", "-l1^2*l2^2", "0"),
    5: ("l1^2+l2^2", "l1^2*l2^2", "0", "0"),
    6: ("l1^2+l2^2", "-l1^2*l2^2", "l1^2*l2^2", "l1^4*l2^2+l1^2*l2^4"),
    7: ("2*l1^2", "0", "-l1^4", "0"),
    8: ("2*l1^2", "l1^4", "0", "0"),
    9: ("2*l1^2", "-l1^4", "l1^4", "2*l1^6"),
    10: ("l1^2", "0", "0", "0"),
}

# --- relation ideals between the evaluated invariants ------------------------

FAMILY_RELATION_IDEALS = {
    2: ("H^5*L*M*D-H^4*L^2*M^2-H^4*L*D^2+H^4*M*D^2-8*H^3*L^2*M*D"
        "+8*H^3*L*M^2*D+8*H^2*L^3*M^2-8*H^2*L^2*M^3-H^3*D^3+8*H^2*L^2*D^2"
        "-46*H^2*L*M*D^2+8*H^2*M^2*D^2+16*H*L^3*M*D+64*H*L^2*M^2*D"
        "+16*H*L*M^3*D-16*L^4*M^2-32*L^3*M^3-16*L^2*M^4+36*H*L*D^3"
        "-36*H*M*D^3-16*L^3*D^2-24*L^2*M*D^2+24*L*M^2*D^2+16*M^3*D^2"
        "+27*D^4",),
    3: ("H^3*D-2*H^2*L*M-4*H*L*D+4*H*M*D+8*L^2*M-8*L*M^2-18*D^2",
        "H^4-8*H^2*L+8*H^2*M-24*H*D+16*L^2+16*L*M+16*M^2"),
    4: ("D", "L"),
    5: ("D", "M"),
    6: ("L+M", "H*M-D"),
    7: ("D", "L", "H^2+4*M"),
    8: ("D", "M", "H^2-4*L"),
    9: ("M^3-1/4*D^2", "L+M", "H*D-4*M^2", "H*M-D", "H^2-4*M"),
    10: ("D", "M", "L"),
}

# --- monomials of the four generating invariants -----------------------------
# i1.i2... stands for x_{i1} x_{i2} ...; a leading '-' negates the monomial.
# The M row is embedded verbatim including the defective token "17.12.14"
# (three indices on a degree-4 invariant, index 17 > 16); the loader repairs
# it to 1.7.12.14 under the degree constraint and flags the repair.

INVARIANT_H_MONOMIALS = (
    "-8.9 7.10 6.11 -5.12 4.13 -3.14 -2.15 1.16 "
)

INVARIANT_L_MONOMIALS = (
    "4.7.10.13 -4.7.9.14 -4.6.11.13 4.6.9.15 4.5.11.14 -4.5.10.15 -3.8.10.13 "
    "3.8.9.14 3.6.12.13 -3.6.9.16 -3.5.12.14 3.5.10.16 2.8.11.13 -2.8.9.15 "
    "-2.7.12.13 2.7.9.16 2.5.12.15 -2.5.11.16 -1.8.11.14 1.8.10.15 1.7.12.14 "
    "-1.7.10.16 -1.6.12.15 1.6.11.16 "
)

INVARIANT_M_MONOMIALS = (
    "-6.7.10.11 6.7.9.12 5.8.10.11 -5.8.9.12 4.6.11.13 -4.6.9.15 -4.5.11.14 "
    "4.5.9.16 -3.6.12.13 3.6.10.15 3.5.12.14 -3.5.10.16 -2.8.11.13 2.8.9.15 "
    "2.7.11.14 -2.7.9.16 -2.3.14.15 2.3.13.16 1.8.12.13 -1.8.10.15 -17.12.14 "
    "1.7.10.16 1.4.14.15 -1.4.13.16 "
)

INVARIANT_D_MONOMIALS = (
    "-4.6.8.9.11.13 4.6.8.9.9.15 -4.6.7.10.11.13 4.6.7.9.12.13 4.6.7.9.11.14 "
    "-4.6.7.9.9.16 4.6.6.11.11.13 -4.6.6.9.11.15 4.5.8.10.11.13 "
    "-4.5.8.9.10.15 -4.5.7.9.12.14 4.5.7.9.10.16 -4.5.6.11.12.13 "
    "-4.5.6.11.11.14 4.5.6.10.11.15 4.5.6.9.11.16 4.5.5.11.12.14 "
    "-4.5.5.10.11.16 4.4.6.11.13.13 -4.4.6.9.13.15 -4.4.5.11.13.14 "
    "4.4.5.9.14.15 3.6.8.10.11.13 -3.6.8.9.10.15 -3.6.7.9.12.14 "
    "3.6.7.9.10.16 -3.6.6.11.12.13 3.6.6.9.12.15 -3.5.8.10.12.13 "
    "-3.5.8.10.11.14 3.5.8.10.10.15 3.5.8.9.12.14 3.5.7.10.12.14 "
    "-3.5.7.10.10.16 3.5.6.12.12.13 3.5.6.11.12.14 -3.5.6.10.12.15 "
    "-3.5.6.9.12.16 -3.5.5.12.12.14 3.5.5.10.12.16 -3.4.6.12.13.13 "
    "-3.4.6.11.13.14 3.4.6.10.13.15 3.4.6.9.13.16 3.4.5.12.13.14 "
    "3.4.5.11.14.14 -3.4.5.10.14.15 -3.4.5.9.14.16 3.3.6.12.13.14 "
    "-3.3.6.10.13.16 -3.3.5.12.14.14 3.3.5.10.14.16 2.8.8.9.11.13 "
    "-2.8.8.9.9.15 -2.7.8.9.12.13 -2.7.8.9.11.14 2.7.8.9.10.15 2.7.8.9.9.16 "
    "2.7.7.9.12.14 -2.7.7.9.10.16 -2.6.8.11.11.13 2.6.8.9.11.15 "
    "2.6.7.11.12.13 -2.6.7.9.12.15 2.5.8.11.11.14 -2.5.8.10.11.15 "
    "2.5.8.9.12.15 -2.5.8.9.11.16 -2.5.7.11.12.14 2.5.7.10.11.16 "
    "-2.4.8.11.13.13 2.4.8.9.13.15 2.4.7.11.13.14 -2.4.7.9.14.15 "
    "-2.4.6.11.13.15 2.4.6.9.15.15 2.4.5.11.13.16 -2.4.5.9.15.16 "
    "2.3.8.12.13.13 -2.3.8.10.13.15 2.3.8.9.14.15 -2.3.8.9.13.16 "
    "-2.3.7.12.13.14 2.3.7.10.13.16 2.3.6.11.13.16 -2.3.6.9.15.16 "
    "2.3.5.12.14.15 -2.3.5.12.13.16 -2.3.5.11.14.16 2.3.5.9.16.16 "
    "2.2.8.11.13.15 -2.2.8.9.15.15 -2.2.7.11.13.16 2.2.7.9.15.16 "
    "-1.8.8.10.11.13 1.8.8.9.10.15 1.7.8.10.12.13 1.7.8.10.11.14 "
    "-1.7.8.10.10.15 -1.7.8.9.10.16 -1.7.7.10.12.14 1.7.7.10.10.16 "
    "1.6.8.11.12.13 -1.6.8.9.12.15 -1.6.7.12.12.13 1.6.7.10.12.15 "
    "-1.6.7.10.11.16 1.6.7.9.12.16 -1.5.8.11.12.14 1.5.8.10.11.16 "
    "1.5.7.12.12.14 -1.5.7.10.12.16 1.4.8.11.13.14 -1.4.8.9.14.15 "
    "-1.4.7.11.14.14 1.4.7.10.14.15 -1.4.7.10.13.16 1.4.7.9.14.16 "
    "1.4.6.12.13.15 1.4.6.11.14.15 -1.4.6.11.13.16 -1.4.6.10.15.15 "
    "-1.4.5.12.14.15 1.4.5.10.15.16 -1.3.8.12.13.14 1.3.8.10.13.16 "
    "1.3.7.12.14.14 -1.3.7.10.14.16 -1.3.6.12.14.15 1.3.6.10.15.16 "
    "1.3.5.12.14.16 -1.3.5.10.16.16 -1.2.8.12.13.15 -1.2.8.11.14.15 "
    "1.2.8.10.15.15 1.2.8.9.15.16 1.2.7.12.13.16 1.2.7.11.14.16 "
    "-1.2.7.10.15.16 -1.2.7.9.16.16 1.1.8.12.14.15 -1.1.8.10.15.16 "
    "-1.1.7.12.14.16 1.1.7.10.16.16 "
)

