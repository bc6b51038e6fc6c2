"""Expected tables for the two factorizable families, as exact matrices.

Keys are short anchors; values are built lazily over the instance field so
that comparisons are exact.
"""

from __future__ import annotations

from fractions import Fraction

from ..cyclo import CyclotomicField, sqrt_integer


def _mat(rows, F: CyclotomicField):
    return [[F.coerce(x) if not isinstance(x, Fraction) else F.from_fraction(x) for x in r]
            for r in rows]


# -- U_q sl(2) -------------------------------------------------------------------


def uqsl2_golden(l: int, F: CyclotomicField, qn) -> dict:
    h = (l - 1) // 2
    out: dict = {}
    rl = sqrt_integer(l, F.N)
    inv = rl.inverse()
    q = qn.qpow
    S_N = [[(F.one if r == 0 else q(j * r) + q(-j * r)) * inv for j in range(h + 1)]
           for r in range(h + 1)]
    # the reference T_N divided by its first entry: (-1)^r q^(r^2/2)
    T_N = [[(F.from_int(-1 if r % 2 else 1) * qn.qhalf(r * r) if r == j else F.zero)
            for j in range(h + 1)] for r in range(h + 1)]
    T_N_raw = [[(F.from_int(-1 if (r + 1) % 2 else 1) * qn.qhalf(r * r - 1) if r == j else F.zero)
                for j in range(h + 1)] for r in range(h + 1)]
    S_V = [[(q(j * r) - q(-j * r)) * inv for j in range(1, h + 1)] for r in range(1, h + 1)]
    T_V = [[(F.from_int(-1 if (r + 1) % 2 else 1) * qn.qhalf(r * r - 1) if r == j else F.zero)
            for j in range(1, h + 1)] for r in range(1, h + 1)]
    out["S_N"] = S_N
    out["T_N"] = T_N
    out["T_N_raw"] = T_N_raw
    out["S_V"] = S_V
    out["T_V"] = T_V
    out["S_CW"] = S_N
    out["T_CW"] = T_N
    out["rank"] = l
    out["total_rank"] = 2 * l - 1
    out["center_dim"] = 3 * h + 1
    out["higman_dim"] = h + 1
    if l == 3:
        out["cartan"] = [[2, 2, 0], [2, 2, 0], [0, 0, 1]]
        out["fusion_mixed"] = {"V1": _mat([[1, 0], [0, 1]], F),
                               "V2": _mat([[0, 1], [2, 1]], F),
                               "V3": _mat([[1, 1], [2, 2]], F)}
        out["diagonalized"] = {"V1": [1, 1], "V2": [2, -1], "V3": [3, 0]}
        out["fusion_full"] = [
            ("V2", "V2", {"V1": 1, "V3": 1}),
            ("V2", "V3", {"P2": 1}),
            ("V2", "P1", {"V3": 2, "P2": 1}),
            ("V2", "P2", {"V3": 2, "P1": 1}),
            ("V3", "V3", {"V3": 1, "P1": 1}),
            ("V3", "P1", {"V3": 2, "P2": 2}),
            ("V3", "P2", {"V3": 2, "P2": 2}),
            ("P1", "P1", {"V3": 4, "P1": 2, "P2": 2}),
            ("P1", "P2", {"V3": 4, "P1": 2, "P2": 2}),
            ("P2", "P1", {"V3": 4, "P1": 2, "P2": 2}),
            ("P2", "P2", {"V3": 4, "P1": 2, "P2": 2}),
        ]
        out["fusion_full"] += [("V1", X, {X: 1}) for X in ("V1", "V2", "V3", "P1", "P2")]
    return out


# -- D K_n ---------------------------------------------------------------------------


def dnichols_golden(n: int, F: CyclotomicField) -> dict:
    big = 1 << (2 * n - 1)
    out: dict = {
        "rank": 4,
        "total_rank": 6,
        "cartan": [[big, big, 0, 0], [big, big, 0, 0], [0, 0, 1, 0], [0, 0, 0, 1]],
        "fusion_mixed": {
            "V_1": _mat([[1, 0, 0], [0, 1, 0], [0, 0, 1]], F),
            "V_KKb": _mat([[1, 0, 0], [0, 0, 1], [0, 1, 0]], F),
            "V_K": _mat([[0, 1, 1], [big, 0, 0], [big, 0, 0]], F),
            "V_Kb": _mat([[0, 1, 1], [big, 0, 0], [big, 0, 0]], F),
        },
        "diagonalized": {"V_1": [1, 1, 1], "V_KKb": [-1, 1, 1],
                         "V_K": [0, 1 << n, -(1 << n)], "V_Kb": [0, 1 << n, -(1 << n)]},
    }
    out["higman_dim"] = 3
    if n == 2:
        out["center_dim"] = 11
    if n % 2 == 0:
        s = -1 if (n // 2) % 2 else 1
        a = Fraction(s, 1 << n)
        b = Fraction(s * (1 << (n - 1)))
        c = Fraction(s, 2)
        out["S_CW"] = _mat([[0, a, -a], [b, c, c], [-b, c, c]], F)
        out["T_CW"] = _mat([[1, 0, 0], [0, 1, 0], [0, 0, -1]], F)
    P2 = {"P_1": big, "P_KKb": big}
    Kmix = {"V_K": big, "V_Kb": big}
    sq, mixed = ("P_1", "P_KKb") if n % 2 == 0 else ("P_KKb", "P_1")
    out["fusion_full"] = [
        ("V_KKb", "V_KKb", {"V_1": 1}),
        ("V_KKb", "V_K", {"V_Kb": 1}),
        ("V_KKb", "V_Kb", {"V_K": 1}),
        ("V_K", "V_K", {sq: 1}),
        ("V_Kb", "V_Kb", {sq: 1}),
        ("V_K", "V_Kb", {mixed: 1}),
        ("V_Kb", "V_K", {mixed: 1}),
        ("V_K", "P_1", Kmix),
        ("V_K", "P_KKb", Kmix),
        ("V_Kb", "P_1", Kmix),
        ("V_Kb", "P_KKb", Kmix),
        ("P_1", "P_1", P2),
        ("P_1", "P_KKb", P2),
        ("P_KKb", "P_1", P2),
        ("P_KKb", "P_KKb", P2),
    ]
    out["fusion_full"] += [("V_1", X, {X: 1}) for X in ("V_1", "V_KKb", "V_K", "V_Kb", "P_1", "P_KKb")]
    return out


def nichols_golden(n: int) -> dict:
    m = 1 << (n - 1)
    return {
        "rank": 2,
        "cartan": [[m, m], [m, m]],
        "unimodular": n % 2 == 0,
        "fusion_full": [("P_eps", "P_eps", {"P_eps": m, "P_Kb": m})],
    }
