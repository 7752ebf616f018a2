"""Shared frozen values for the test suite.

Every row below was produced by the brute-force oracle (pruned RGF search)
in a separate run and frozen here, so formula and bijection tests compare
against numbers that no formula computed.
"""

# avoider counts for patterns of [4], n = 1..10
K4_ROWS = {
    "1234":    (1, 2, 5, 14, 46, 166, 652, 2780, 12644, 61136),
    "1/2/3/4": (1, 2, 5, 14, 41, 122, 365, 1094, 3281, 9842),
    "12/3/4":  (1, 2, 5, 14, 39, 102, 249, 574, 1267, 2710),
    "12/34":   (1, 2, 5, 14, 41, 122, 367, 1114, 3423, 10670),
    "1/234":   (1, 2, 5, 14, 42, 132, 438, 1516, 5500, 20728),
    "134/2":   (1, 2, 5, 14, 42, 135, 459, 1645, 6172, 24163),
    "14/23":   (1, 2, 5, 14, 41, 123, 374, 1147, 3538, 10958),
    "13/24":   (1, 2, 5, 14, 42, 132, 429, 1430, 4862, 16796),
    "14/2/3":  (1, 2, 5, 14, 40, 113, 315, 871, 2400, 6607),
    "1/24/3":  (1, 2, 5, 14, 39, 104, 265, 650, 1547, 3596),
    "1/23/4":  (1, 2, 5, 14, 38, 92, 196, 378, 684, 1194),
}

# complements share rows; convenient aliases used by a few tests
K4_COMPLEMENTS = {
    "123/4": "1/234",
    "124/3": "134/2",
    "1/2/34": "12/3/4",
    "13/2/4": "1/24/3",
}

# punctured-block family of [5] plus the two extremes, n = 1..9
K5_ROWS = {
    "12345":     (1, 2, 5, 15, 51, 196, 827, 3795, 18755),
    "1/2/3/4/5": (1, 2, 5, 15, 51, 187, 715, 2795, 11051),
    "1/2345":    (1, 2, 5, 15, 51, 191, 777, 3395, 15835),   # a = 1
    "1345/2":    (1, 2, 5, 15, 51, 191, 777, 3405, 15925),   # a = 2
    "1245/3":    (1, 2, 5, 15, 51, 191, 777, 3405, 15925),   # a = 3
    "1235/4":    (1, 2, 5, 15, 51, 191, 777, 3405, 15925),   # a = 4
    "1234/5":    (1, 2, 5, 15, 51, 191, 777, 3395, 15835),   # a = 5
}

CATALAN = (1, 1, 2, 5, 14, 42, 132, 429, 1430, 4862, 16796)

BELL = (1, 1, 2, 5, 15, 52, 203, 877, 4140, 21147, 115975)


import pytest


@pytest.fixture(scope="session")
def k4_rows():
    return K4_ROWS


@pytest.fixture(scope="session")
def k5_rows():
    return K5_ROWS


@pytest.fixture(scope="session")
def catalan():
    return list(CATALAN)


@pytest.fixture(scope="session")
def bell():
    return list(BELL)
