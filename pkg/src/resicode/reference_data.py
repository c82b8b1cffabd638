"""Published values that the verification suite checks against.

Polynomial strings use the package's ascending rendering (``a`` is the
generator of GF(4) with a^2 = a + 1).  Larger binary/ternary polynomials are
stored as ``{exponent: coefficient}`` maps.
"""

from __future__ import annotations

# GF(4) = GF(2)[a]/(a^2+a+1);  GF(16) = GF(4)[b]/(b^2+b+a).  Coefficients are
# little-endian raw values (a = 2 in GF(4)).
LENGTH15_BASE_MODULUS = (1, 1, 1)
LENGTH15_TOP_MODULUS = (2, 1, 1)

# signs are (eps_1, eps_3, eps_5); Q_3 = 5 and Q_5 = 3 throughout
LENGTH15_TABLES: dict[int, list[tuple[tuple[int, int, int], str, int]]] = {
    15: [
        ((1, 1, -1), "a+a x^2+x^3+x^4+a x^4+a x^5+x^7", 6),
        ((1, -1, 1), "1+a+x^2+a x^2+x^3+a x^4+x^5+a x^5+x^7", 6),
        ((1, -1, -1), "a+a x+x^2+x^4+a x^4+x^6+x^7", 6),
        ((-1, 1, 1), "1+a+x^2+a x^3+x^4+a x^4+x^5+x^7", 6),
        ((-1, 1, -1), "a+a x+x^3+a x^3+a x^5+x^6+x^7", 6),
        ((-1, -1, 1), "1+a+x+a x+a x^3+x^5+a x^5+x^6+x^7", 6),
        ((-1, -1, -1), "a+x^2+x^3+a x^3+a x^4+x^5+x^7", 6),
        ((1, 1, 1), "1+a+x+a x+x^2+a x^4+x^6+x^7", 6),
    ],
    3: [
        ((1, 1, -1), "1+x+a x+x^2+x^3+a x^4+x^6+a x^6+x^7", 6),
        ((1, -1, 1), "a+x+a x^2+x^5+x^6+a x^6+x^7", 3),
        ((1, -1, -1), "1+a x+x^3+a x^3+x^4+x^5+a x^6+x^7", 6),
        ((-1, 1, 1), "1+x+a x+a x^3+x^4+x^5+x^6+a x^6+x^7", 6),
        ((-1, 1, -1), "1+a+x+x^2+a x^2+x^5+a x^6+x^7", 3),
        ((-1, -1, 1), "1+a x+x^2+x^3+x^4+a x^4+a x^6+x^7", 6),
        ((-1, -1, -1), "1+a+a x+x^2+a x^2+x^5+x^6+a x^6+x^7", 3),
        ((1, 1, 1), "a+x+a x+a x^2+x^5+a x^6+x^7", 3),
    ],
    5: [
        ((1, 1, -1), "a+x+x^3+x^4+a x^4+a x^6+x^7", 4),
        ((1, -1, 1), "1+a+a x+x^3+x^5+a x^6+x^7", 6),
        ((1, -1, -1), "a+x+a x+a x^2+a x^4+x^6+a x^6+x^7", 6),
        ((-1, 1, 1), "1+a+a x+x^2+a x^2+x^4+a x^4+a x^6+x^7", 6),
        ((-1, 1, -1), "a+x+a x+x^3+x^5+x^6+a x^6+x^7", 6),
        ((-1, -1, 1), "1+a+x+x^3+a x^4+x^6+a x^6+x^7", 4),
        ((-1, -1, -1), "a+x+x^3+a x^3+a x^4+a x^6+x^7", 4),
        ((1, 1, 1), "1+a+x+a x^3+x^4+a x^4+x^6+a x^6+x^7", 4),
    ],
}

LENGTH15_DISTANCE_HISTOGRAM = {6: 16, 4: 4, 3: 4}

# (divisor, Q, sign) -> printed factor; Q_1 = 15 factors and the Q_1 = 3, 5
# two-factor products
LENGTH15_FACTORS: dict[tuple[int, int, int], str] = {
    (1, 15, 1): "1+x+x^4",
    (1, 15, -1): "1+x^3+x^4",
    (3, 5, 1): "1+a x+x^2",
    (3, 5, -1): "1+x+a x+x^2",
    (5, 3, 1): "1+a+x",
    (5, 3, -1): "a+x",
}
LENGTH15_SPLIT_FACTORS: dict[tuple[int, int, int], tuple[str, str]] = {
    (1, 3, 1): ("a+x+x^2", "a+a x+x^2"),
    (1, 3, -1): ("1+a+x+x^2", "1+a+x+a x+x^2"),
    (1, 5, 1): ("a+x+x^2", "1+a+x+a x+x^2"),
    (1, 5, -1): ("1+a+x+x^2", "a+a x+x^2"),
}

# all-plus case-1 code: generator and parity-check polynomial
LENGTH15_GENERATOR = "1+a+x+a x+x^2+a x^4+x^6+x^7"
LENGTH15_PARITY_CHECK = "a+a x+x^2+a x^3+x^4+x^5+a x^5+x^6+x^7+x^8"

# 7 x 15 parity-check matrix of that code; entries as GF(4) raw values
# (0, 1, 2 = a, 3 = a+1)
LENGTH15_PARITY_MATRIX_ROW = (1, 1, 1, 3, 1, 2, 1, 2, 2)
# 1-based columns published as a dependent set; they are in fact independent
LENGTH15_DEPENDENT_COLUMNS = (1, 2, 3, 4, 6, 7)


def _exps(*e: int) -> dict[int, int]:
    return {k: 1 for k in e}


# --------------------------------------------------------------- n = 161, q = 2
# The four degree-33 irreducible factors of the unit class
_B161_A = _exps(0, 1, 3, 7, 9, 11, 12, 13, 14, 17, 18, 19, 21, 23, 24, 25, 26, 27, 28, 29, 33)
_B161_B = _exps(0, 2, 3, 5, 8, 9, 10, 12, 14, 16, 19, 20, 24, 26, 29, 31, 33)
_B161_C = _exps(0, 2, 4, 7, 9, 13, 14, 17, 19, 21, 23, 24, 25, 28, 30, 31, 33)
_B161_D = _exps(0, 4, 5, 6, 7, 8, 9, 10, 12, 14, 15, 16, 19, 20, 21, 22, 24, 26, 30, 32, 33)

LENGTH161_FACTORS: dict[tuple[int, int, int], list[dict[int, int]]] = {
    (1, 161, 1): [_B161_A, _B161_B],
    (1, 161, -1): [_B161_C, _B161_D],
    (1, 7, 1): [_B161_A, _B161_C],
    (1, 7, -1): [_B161_B, _B161_D],
    (1, 23, 1): [_B161_A, _B161_D],
    (1, 23, -1): [_B161_B, _B161_C],
    (7, 23, 1): [_exps(0, 1, 5, 6, 7, 9, 11)],
    (7, 23, -1): [_exps(0, 2, 4, 5, 6, 10, 11)],
    (23, 7, 1): [_exps(0, 2, 3)],
    (23, 7, -1): [_exps(0, 1, 3)],
}


# --------------------------------------------------------------- n = 253, q = 3
def _tern(pairs: str) -> dict[int, int]:
    """Parse ``"2+x+x^2+2x^3"``-style text into {exponent: coefficient}."""
    out: dict[int, int] = {}
    for term in pairs.replace(" ", "").split("+"):
        coef = 1
        if term and term[0].isdigit() and "x" in term:
            coef, term = int(term[0]), term[1:]
        if term == "x":
            exp = 1
        elif term.startswith("x^"):
            exp = int(term[2:])
        else:
            coef, exp = int(term), 0
        out[exp] = coef
    return out


_T253_A = _tern(
    "2+x+x^2+2x^3+x^4+x^6+2x^7+x^9+x^10+x^11+2x^12+2x^16+2x^18+x^20+x^21+x^22+x^23+x^24"
    "+2x^26+2x^29+x^30+2x^32+2x^33+x^35+2x^36+x^37+x^38+2x^41+x^42+2x^43+x^44+2x^45+x^46"
    "+2x^48+2x^49+x^55"
)
_T253_B = _tern(
    "2+2x^2+x^3+x^4+x^5+x^6+2x^7+2x^8+x^9+x^10+2x^12+x^13+2x^14+2x^15+x^17+2x^20+2x^21"
    "+x^23+x^24+2x^26+2x^27+x^28+2x^29+x^30+x^31+2x^32+x^34+2x^37+x^38+2x^39+x^41+2x^42"
    "+x^43+2x^45+2x^46+x^47+2x^49+x^50+x^52+x^55"
)
_T253_C = _tern(
    "2+2x^3+2x^5+x^6+2x^8+x^9+x^10+2x^12+x^13+2x^14+x^16+2x^17+x^18+2x^21+x^23+2x^24"
    "+2x^25+x^26+2x^27+x^28+x^29+2x^31+2x^32+x^34+x^35+2x^38+x^40+x^41+2x^42+x^43+2x^45"
    "+2x^46+x^47+x^48+2x^49+2x^50+2x^51+2x^52+x^53+x^55"
)
_T253_D = _tern(
    "2+x^6+x^7+2x^9+x^10+2x^11+x^12+2x^13+x^14+2x^17+2x^18+x^19+2x^20+x^22+x^23+2x^25"
    "+x^26+x^29+2x^31+2x^32+2x^33+2x^34+2x^35+x^37+x^39+x^43+2x^44+2x^45+2x^46+x^48+2x^49"
    "+2x^51+x^52+2x^53+2x^54+x^55"
)

LENGTH253_FACTORS: dict[tuple[int, int, int], list[dict[int, int]]] = {
    (1, 253, 1): [_T253_A, _T253_B],
    (1, 253, -1): [_T253_C, _T253_D],
    (1, 11, 1): [_T253_A, _T253_C],
    (1, 11, -1): [_T253_B, _T253_D],
    (1, 23, 1): [_T253_A, _T253_D],
    (1, 23, -1): [_T253_C, _T253_B],
    (11, 23, 1): [_tern("2+x^3+x^5+2x^7+2x^8+x^9+x^10+x^11")],
    (11, 23, -1): [_tern("2+2x+2x^2+x^3+x^4+2x^6+2x^8+x^11")],
    (23, 11, 1): [_tern("2+x^2+2x^3+x^4+x^5")],
    (23, 11, -1): [_tern("2+2x+x^2+2x^3+x^5")],
}

# ------------------------------------------------------------ residue cosets
MTH_COSETS: dict[tuple[int, int], list[set[int]]] = {
    (7, 3): [{1, 6}, {3, 4}, {2, 5}],
    (17, 4): [{1, 4, 13, 16}, {3, 5, 12, 14}, {2, 8, 9, 15}, {6, 7, 10, 11}],
}

# closed-form counts quoted for the three-prime lengths
DUAL_CONTAINING_COUNT_231 = 2**12
