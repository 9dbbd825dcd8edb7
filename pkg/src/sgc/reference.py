"""Published MDS tables and example claims used as reproduction baselines.

Strings are kept exactly as printed; ``TABLE_READINGS`` maps the one
malformed entry to the reading used for comparisons.
"""

from __future__ import annotations

from dataclasses import dataclass

NONE = None  # rendered as the nonexistence marker


@dataclass(frozen=True)
class RefRow:
    q: int
    n: int
    k: int
    d: int
    g_list: tuple[str, ...]
    a_list: tuple[str, ...] | None  # None: no f = x^n - a
    exhaustive: bool  # True when g_list claims every generator


_LIN8 = ("x+w^6", "x+w^2", "x+w^5", "x+w", "x+w^4", "x+1", "x+w^3")
_ALL8 = ("1", "w", "w^2", "w^6", "w^3", "w^4", "w^5")

_Q8_N3_K1 = (
    "x^2+x+w", "x^2+w^3x+1", "x^2+wx+w^3",
    "x^2+w^4x+w^2", "x^2+w^2x+w^5", "x^2+w^2x+w",
    "x^2+w^5x+w^4", "x^2+w^5x+w", "x^2+x+w^4",
    "x^2+x+w^2", "x^2+w^3x+w^3", "x^2+w^6x+w^6",
    "x^2+w^3x+w", "x^2+w^6x+w^2", "x^2+wx+w^6",
    "x^2+w^6+1", "x^2+wx+w^4", "x^2+w^4x+w^5",
    "x^2+w^4x+w^3", "x^2+w^2x+w^6", "x^2+w^5x+w^5",
)

TABLE_READINGS = {"x^2+w^6+1": "x^2+w^6x+1"}

Q8_ROWS: tuple[RefRow, ...] = (
    RefRow(8, 2, 1, 2, _LIN8, _ALL8, True),
    RefRow(8, 3, 2, 2, _LIN8, _ALL8, True),
    RefRow(8, 3, 1, 3, _Q8_N3_K1, NONE, False),
    RefRow(8, 4, 3, 2, _LIN8, _ALL8, True),
    RefRow(8, 5, 4, 2, _LIN8, _ALL8, True),
    RefRow(8, 6, 5, 2, _LIN8, _ALL8, True),
)

# (n, k) types for which no f = x^n - a admits an MDS generator
Q8_NONEXISTENT = {
    4: ((1, 4), (2, 3)),
    5: ((3, 3), (1, 5), (2, 4)),
    6: ((1, 6), (4, 3), (2, 5), (3, 4)),
}

# n = 7: every type exists with a = 1
Q8_N7_TYPES = ((2, 6), (1, 7), (5, 3), (6, 2), (3, 5), (4, 4))

_G11 = {
    1: "x+10",
    2: "x^2+9x+1",
    3: "x^3+8x^2+3x+10",
    4: "x^4+7x^3+6x^2+7x+1",
    5: "x^5+6x^4+10x^3+x^2+5x+10",
    6: "x^6+5x^5+4x^4+2x^3+4x^2+5x+1",
    7: "x^7+4x^6+10x^5+9x^4+2x^3+x^2+7x+10",
    8: "x^8+3x^7+6x^6+10x^5+4x^4+10x^3+6x^2+3x+1",
    9: "x^9+2x^8+3x^7+4x^6+5x^5+6x^4+7x^3+8x^2+9x+10",
}

# (n, k) pairs listed for q = 11
_Q11_PAIRS = (
    (2, 1),
    (3, 2), (3, 1),
    (4, 3), (4, 2), (4, 1),
    (5, 4), (5, 1), (5, 2), (5, 3),
    (6, 5), (6, 1), (6, 2), (6, 3), (6, 4),
    (7, 6), (7, 2), (7, 3), (7, 4), (7, 1), (7, 5),
    (8, 7), (8, 3), (8, 4), (8, 5), (8, 2), (8, 6), (8, 1),
    (9, 8), (9, 4), (9, 5), (9, 6), (9, 3), (9, 7), (9, 2), (9, 1),
    (10, 9), (10, 5), (10, 6), (10, 7), (10, 4), (10, 8), (10, 3), (10, 2), (10, 1),
)

Q11_ROWS: tuple[RefRow, ...] = tuple(
    RefRow(11, n, k, n - k + 1, (_G11[n - k],), ("1",) if n - k == 1 else NONE, False)
    for n, k in _Q11_PAIRS
)


@dataclass(frozen=True)
class ExampleClaim:
    id: str
    p: int
    m: int
    f: str
    total: int
    params: tuple[tuple[int, int, int], ...]
    id_count: int
    id_params: tuple[tuple[int, int, int], ...]
    id_generators: tuple[str, ...]


EXAMPLES: dict[str, ExampleClaim] = {
    "5.1": ExampleClaim(
        "5.1", 2, 3, "x^5+w*x^4+x^3+w*x^2+1", 21,
        ((5, 4, 2), (5, 1, 5), (5, 3, 3)),
        2, ((5, 4, 2), (5, 3, 3)), ("x+w^6", "x^2+w^3x+w^4"),
    ),
    "5.2": ExampleClaim(
        "5.2", 3, 2, "x^5+x^4+x^3+w*x^2+1", 16,
        ((5, 2, 4), (5, 3, 3)),
        1, ((5, 3, 3),), ("x^2+w^6x+w^7",),
    ),
    "5.3": ExampleClaim(
        "5.3", 3, 2, "x^3+x^2+x+1", 80,
        ((3, 2, 2), (3, 1, 3)),
        3, ((3, 2, 2),), ("x+1", "x+w^2", "x+w^6"),
    ),
    "5.4": ExampleClaim(
        "5.4", 2, 3, "w*x^5+x^4+x^3+x^2+1", 21,
        ((5, 2, 4), (5, 4, 2), (5, 1, 5)),
        2, ((5, 4, 2), (5, 1, 5)), ("x + 4", "x^4 + 2x^3 + 3x^2 + 4x + 4"),
    ),
    "5.5": ExampleClaim(
        "5.5", 3, 2, "w*x^5+x^4+x^3+x^2+1", 24,
        ((5, 2, 4), (5, 4, 2), (5, 3, 3), (5, 1, 5)),
        1, ((5, 4, 2),), ("x+w^7",),
    ),
}
