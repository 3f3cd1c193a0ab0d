"""Reference parameter tables for the GF(64) and GF(729) codes.

These are data, kept exactly as given, apparent misprints included;
comparisons against freshly computed values live in ``selftest`` and the
test-suite.  Row layouts:

* ``TABLE_I`` / ``TABLE_II`` (C_l at an O1 / O2 point, GF(64)):
  ``(k, rho_l, nu_l, d_ord)``, one row per l = 1, 2, ...
* ``TABLE_III`` / ``TABLE_IV`` (improved codes, GF(64)): ``(d, r_d, k_lb)``
* ``TABLE_VI`` (improved codes, GF(729), n = 6075): ``(k, d, orbit_index)``
* ``IMPROVEMENTS`` (GF(64)): ``(n, k, d)``
"""

from __future__ import annotations

TABLE_I = (
    (223, 0, 2, 2), (222, 6, 2, 2), (222, 8, 2, 2), (220, 9, 3, 3), (219, 12, 4, 3),
    (218, 14, 4, 3), (217, 15, 3, 3), (216, 16, 4, 4), (215, 17, 5, 5), (214, 18, 6, 6),
    (213, 20, 6, 6), (212, 21, 6, 6), (211, 22, 8, 6), (210, 23, 9, 6), (209, 24, 6, 6),
    (208, 25, 10, 8), (207, 26, 8, 8), (206, 27, 9, 9), (205, 28, 12, 12), (204, 29, 13, 12),
    (203, 30, 12, 12), (202, 31, 15, 14), (201, 32, 14, 14), (200, 33, 15, 15), (199, 34, 16, 16),
    (198, 35, 17, 17), (197, 36, 18, 18), (196, 37, 20, 20), (195, 38, 20, 20),
)

TABLE_II = (
    (223, 0, 2, 2), (222, 7, 2, 2), (221, 8, 2, 2), (220, 9, 2, 2), (219, 13, 3, 3),
    (218, 14, 4, 3), (217, 15, 5, 3), (216, 16, 4, 3), (215, 17, 3, 3), (214, 18, 4, 4),
    (213, 20, 6, 6), (212, 21, 8, 7), (211, 22, 8, 7), (210, 23, 8, 7), (209, 24, 8, 7),
    (208, 25, 7, 7), (207, 26, 8, 8), (206, 27, 9, 9), (205, 28, 12, 12), (204, 29, 13, 13),
    (203, 30, 14, 13), (202, 31, 13, 13), (201, 32, 14, 14), (200, 33, 15, 15), (199, 34, 16, 16),
    (198, 35, 17, 17), (197, 36, 18, 18), (196, 37, 20, 20), (195, 38, 20, 20),
)

TABLE_III = (
    (3, 4, 220), (4, 6, 218), (5, 9, 215), (6, 10, 214), (7, 14, 210), (8, 14, 210),
    (9, 16, 208), (10, 18, 206), (11, 19, 205), (12, 19, 205), (13, 21, 203), (14, 22, 202),
    (15, 23, 201), (16, 25, 199), (17, 26, 198), (18, 27, 197), (19, 28, 196), (20, 28, 196),
)

TABLE_IV = (
    (3, 5, 219), (4, 7, 217), (5, 10, 214), (6, 11, 213), (7, 12, 212), (8, 13, 211),
    (9, 18, 206), (10, 19, 205), (11, 19, 205), (12, 19, 205), (13, 20, 204), (14, 22, 202),
    (15, 24, 200), (16, 25, 199), (17, 26, 198), (18, 27, 197), (19, 28, 196), (20, 28, 196),
)

TABLE_VI = (
    (6074, 2, 1), (6071, 3, 1), (6068, 4, 1), (6063, 5, 1), (6062, 6, 1), (6055, 7, 1),
    (6053, 8, 1), (6048, 9, 1), (6045, 10, 1), (6042, 11, 1), (6041, 12, 1), (6032, 13, 1),
    (6031, 14, 1), (6027, 15, 1), (6024, 16, 1), (6020, 17, 1), (6019, 18, 1), (6013, 19, 1),
    (6012, 20, 1), (6008, 21, 1), (6004, 22, 1), (6003, 23, 1), (6002, 24, 1), (5996, 25, 2),
    (5995, 26, 1), (5994, 27, 1), (5992, 28, 1), (5987, 30, 1), (5983, 32, 1), (5981, 33, 1),
    (5980, 34, 1), (5979, 35, 1), (5978, 36, 1), (5973, 37, 1), (5972, 38, 1), (5970, 39, 1),
    (5969, 40, 1), (5966, 42, 1), (5961, 44, 1), (5960, 45, 1), (5958, 46, 1), (5956, 48, 1),
    (5952, 50, 2), (5951, 51, 2), (5949, 52, 2), (5946, 53, 1), (5945, 54, 1), (5942, 55, 1),
    (5940, 56, 1), (5938, 57, 1), (5937, 60, 1), (5932, 62, 1), (5931, 63, 1), (5929, 64, 1),
    (5928, 65, 1), (5927, 66, 1), (5926, 68, 1), (5924, 69, 1), (5922, 70, 1), (5919, 71, 1),
    (5918, 72, 1), (5917, 74, 2), (5916, 75, 2), (5915, 76, 2), (5914, 77, 2), (5913, 78, 2),
    (5910, 79, 2), (5908, 80, 1), (5906, 81, 1), (5905, 82, 1), (5904, 83, 1), (5902, 84, 1),
    (5899, 85, 1), (5898, 86, 1), (5897, 90, 1), (5894, 91, 1), (5892, 92, 1), (5891, 94, 1),
    (5890, 96, 2), (5889, 99, 2), (5888, 100, 2), (5885, 101, 2), (5884, 102, 2), (5880, 103, 1),
    (5878, 104, 1), (5877, 105, 1), (5875, 106, 1), (5874, 108, 1), (5872, 109, 1), (5871, 110, 1),
    (5869, 111, 1), (5868, 112, 1), (5866, 114, 1), (5865, 115, 1), (5864, 117, 1), (5863, 120, 2),
    (5862, 121, 2), (5860, 124, 2), (5857, 125, 2), (5854, 126, 1), (5852, 128, 1), (5851, 129, 1),
    (5849, 130, 1), (5848, 131, 1), (5847, 132, 1), (5846, 133, 1), (5844, 134, 1), (5843, 135, 1),
    (5842, 136, 1), (5841, 137, 1), (5840, 138, 1), (5838, 139, 1), (5837, 140, 1), (5836, 144, 1),
    (5835, 146, 2), (5832, 148, 2), (5830, 149, 2), (5829, 150, 1), (5828, 151, 1), (5827, 152, 1),
    (5825, 153, 1), (5823, 154, 1), (5822, 156, 1), (5821, 157, 1), (5820, 158, 1), (5818, 159, 1),
    (5817, 160, 1), (5816, 161, 1), (5815, 162, 1), (5814, 163, 1), (5813, 164, 1), (5812, 165, 1),
    (5811, 166, 1), (5810, 167, 1), (5809, 168, 1), (5808, 171, 1), (5806, 172, 1), (5805, 173, 2),
    (5804, 174, 2), (5802, 175, 1), (5801, 177, 1), (5800, 178, 1), (5798, 179, 1), (5797, 180, 1),
    (5796, 181, 1), (5795, 182, 1), (5794, 183, 1), (5793, 184, 1), (5792, 185, 1), (5791, 186, 1),
    (5790, 187, 1), (5789, 188, 1), (5788, 189, 1), (5787, 190, 1), (5786, 191, 1), (5785, 192, 1),
    (5784, 193, 1), (5783, 194, 1), (5782, 195, 1), (5781, 196, 1), (5780, 198, 1),
)

IMPROVEMENTS = (
    (224, 204, 13), (223, 203, 13), (222, 202, 13), (221, 201, 13), (220, 200, 13), (219, 199, 13),
    (218, 198, 13), (217, 197, 13), (216, 196, 13), (215, 195, 13), (214, 194, 13), (213, 193, 13),
    (212, 192, 13), (211, 191, 13), (210, 190, 13), (209, 189, 13), (208, 188, 13), (207, 187, 13),
    (206, 186, 13), (205, 185, 13), (204, 184, 13), (203, 183, 13), (202, 182, 13), (201, 181, 13),
    (200, 180, 13), (224, 202, 14), (223, 201, 14), (222, 200, 14), (221, 199, 14), (220, 198, 14),
    (219, 197, 14), (218, 196, 14), (217, 195, 14), (216, 194, 14), (215, 193, 14), (214, 192, 14),
    (213, 191, 14), (212, 190, 14), (211, 189, 14), (210, 188, 14), (224, 201, 15), (223, 200, 15),
    (222, 199, 15), (221, 198, 15), (220, 197, 15), (219, 196, 15), (218, 195, 15), (217, 194, 15),
    (216, 193, 15), (215, 192, 15), (214, 191, 15), (213, 190, 15), (212, 189, 15), (211, 188, 15),
    (210, 187, 15), (224, 196, 20), (223, 195, 20), (222, 194, 20), (221, 193, 20), (220, 192, 20),
    (219, 191, 20), (218, 190, 20), (217, 189, 20), (216, 188, 20), (215, 187, 20), (214, 186, 20),
    (213, 185, 20), (212, 184, 20), (211, 183, 20), (210, 182, 20),
)

# Designed distances of the improved codes that seed the improvement table,
# and the length window (per codimension n - k) in which the derived codes
# beat the best previously known codes.
SEED_DISTANCES = (13, 14, 15, 20)
IMPROVEMENT_WINDOWS = {
    20: (200, 224),
    22: (210, 224),
    23: (210, 224),
    28: (210, 224),
}

# code labels attached to the seed rows of the improvement table
SEED_LABELS = {
    (224, 204, 13): "C_19(P2), C~_13(P2)",
    (224, 202, 14): "C_21(P1), C~_14(Pi)",
    (224, 201, 15): "C~_15(P1)",
    (224, 196, 20): "C_27(Pi), C~_20(Pi)",
}


def code_length(qbar: int) -> int:
    """Number of rational points minus the base point."""
    q = qbar**3
    g = (qbar**3 + 1) * (qbar**2 - 2) // 2 + 1
    return q * q + 2 * g * q


def table_for(qbar: int, orbit: str, kind: str):
    """Look up a reference table by (qbar, orbit, "Cl" | "Improved")."""
    tables = {
        (2, "O1", "Cl"): TABLE_I,
        (2, "O2", "Cl"): TABLE_II,
        (2, "O1", "Improved"): TABLE_III,
        (2, "O2", "Improved"): TABLE_IV,
    }
    return tables[(qbar, orbit, kind)]
