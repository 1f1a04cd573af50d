# Hand transcription of the ten published (alpha_k, beta_k) tables, k = 0..15.
# Keyed by table number: (p, c, d, case tag, m, alphas, betas).

TABLES = {
    1: (3, 7, 11, "Case1", None,
        [2, 2, 0, 0, 1, 1, 2, 0, 0, 1, 1, 2, 0, 0, 1, 1],
        [7, -5, -9, -3, -1, -4, -5, -9, -3, -1, -4, -5, -9, -3, -1, -4]),
    2: (3, 8, 5, "Case21", None,
        [1, 2, 0, 1, 2, 1, 0, 1, 2, 1, 0, 1, 2, 1, 0, 1],
        [8, 1, -3, -1, -2, -4, -3, -1, -2, -4, -3, -1, -2, -4, -3, -1]),
    3: (3, 17, 5, "Case22", 0,
        [1, 2, 2, 1, 0, 1, 2, 1, 0, 1, 2, 1, 0, 1, 2, 1],
        [17, 4, -2, -4, -3, -1, -2, -4, -3, -1, -2, -4, -3, -1, -2, -4]),
    4: (3, 124, 7, "Case22", 1,
        [1, 0, 1, 2, 2, 0, 1, 0, 2, 1, 2, 0, 1, 0, 2, 1],
        [124, 39, 2, -4, -6, -2, -3, -1, -5, -4, -6, -2, -3, -1, -5, -4]),
    5: (3, 247, 7, "Case22", 2,
        [1, 2, 1, 2, 0, 2, 1, 2, 0, 1, 0, 2, 1, 2, 0, 1],
        [247, 80, 22, 5, -3, -1, -5, -4, -6, -2, -3, -1, -5, -4, -6, -2]),
    6: (2, 5, 9, "Case1", None,
        [1, 0, 1, 1, 1, 0, 0, 0, 1, 1, 1, 0, 0, 0, 1, 1],
        [5, -2, -1, -5, -7, -8, -4, -2, -1, -5, -7, -8, -4, -2, -1, -5]),
    7: (2, 5, 3, "Case21", None,
        [1, 1, 1, 0, 1, 0, 1, 0, 1, 0, 1, 0, 1, 0, 1, 0],
        [5, 1, -1, -2, -1, -2, -1, -2, -1, -2, -1, -2, -1, -2, -1, -2]),
    8: (2, 7, 3, "Case22", 0,
        [1, 0, 1, 1, 0, 1, 0, 1, 0, 1, 0, 1, 0, 1, 0, 1],
        [7, 2, 1, -1, -2, -1, -2, -1, -2, -1, -2, -1, -2, -1, -2, -1]),
    9: (2, 13, 3, "Case22", 1,
        [1, 1, 1, 1, 0, 1, 0, 1, 0, 1, 0, 1, 0, 1, 0, 1],
        [13, 5, 1, -1, -2, -1, -2, -1, -2, -1, -2, -1, -2, -1, -2, -1]),
    10: (2, 25, 3, "Case22", 2,
         [1, 1, 0, 0, 1, 1, 0, 1, 0, 1, 0, 1, 0, 1, 0, 1],
         [25, 11, 4, 2, 1, -1, -2, -1, -2, -1, -2, -1, -2, -1, -2, -1]),
}
