from lattres.io import fixture_path, load_fixture
import random

SEMILATTICES = ["L11", "L7", "L8", "L9", "B2", "B3", "M3"]
DISTRIBUTIVE = ["L8", "L9", "B2", "B3"]
SEMILATTICE_COUNTS = [1, 1, 2, 5, 15, 53, 222, 1078]
SEED = 12345

L11_RANKS = [11, 15, 6, 1]
L11_SHIFTS = [{6: 11}, {7: 6, 8: 9}, {10: 6}, {12: 1}]
L11_REGULARITY = 9
L7_RANKS = [7, 8, 2]

L8_IDEAL = ["0", "a", "b", "ab", "c", "abc", "d"]
L8_COIDEAL = ["a", "b", "ab", "c", "abc", "d", "abcd"]
L8_GENERATORS = {
    "x_ay_by_cy_d",
    "x_by_ay_cy_d",
    "x_ax_cy_by_d",
    "x_ax_by_cy_d",
    "x_ax_bx_cy_d",
    "x_ax_bx_dy_c",
}

L9_IDEAL = ["0", "a", "b", "ab", "c", "d", "abc"]
L9_DUAL = {
    "x_ay_a",
    "x_ay_c",
    "x_by_b",
    "x_by_d",
    "x_cy_c",
    "x_dy_d",
    "y_ay_d",
    "y_cy_d",
}

B3_IDEAL = ["0", "a", "b", "c", "ab", "ac", "bc"]
B3_COIDEAL = ["a", "b", "c", "ab", "ac", "bc", "abc"]


def get_fixture_path(name):
    return str(fixture_path(name))


def get_rng():
    return random.Random(SEED)
