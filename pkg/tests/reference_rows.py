"""Tabulated stabiliser rows: (class, word, diagonal of linear part or None, translation at half-width 1)."""

MANIFOLD3_ROWS = [
    (0, "c", None, (0, -2, 0)),
    (0, "g' h", None, (0, 0, 4)),
    (0, "a' h", (1, -1, -1), (2, 0, -2)),
    (1, "a", None, (-2, 0, 0)),
    (1, "e' f", None, (0, 4, 0)),
    (1, "e' i", None, (0, 2, -2)),
    (2, "k", None, (0, 0, -2)),
    (2, "d' c", None, (4, 0, 0)),
    (2, "e' c", None, (0, 2, -2)),
    (3, "g", (1, -1, -1), (-2, 0, 0)),
    (3, "k' l", None, (0, 0, 4)),
    (3, "i' l", (-1, 1, -1), (0, -2, 2)),
    (4, "e' g", None, (0, -4, 0)),
    (4, "a' k' a k", None, (8, 0, 0)),
    (4, "a' k' j' b' f c", (-1, -1, 1), (-2, -2, -4)),
]

MANIFOLD1011_ROWS = [
    (0, "c", None, (0, -2, 0)),
    (0, "a' b", None, (4, 0, 0)),
    (0, "a' g", (1, -1, 1), (2, 0, -2)),
    (1, "a", None, (-2, 0, 0)),
    (1, "e' f", None, (0, 4, 0)),
    (1, "e' i", (-1, 1, 1), (0, 2, -2)),
    (2, "k", None, (0, 0, -2)),
    (2, "c' d", None, (4, 0, 0)),
    (2, "c' e", (1, 1, -1), (2, -2, 0)),
    (3, "j", None, (0, -2, 0)),
    (3, "g' h'", None, (4, 0, 0)),
    (3, "g' k", (1, -1, 1), (2, 0, -2)),
    (4, "e' g", None, (0, -4, 0)),
    (4, "a' k' a k", None, (8, 0, 0)),
    (4, "a' k' j' f c", (1, -1, 1), (-4, 2, -4)),
]


def invariants(diag):
    """(pure translation, det, trace) of a diagonal linear part (None = identity)."""
    if diag is None:
        return (True, 1, 3)
    d = 1
    for x in diag:
        d *= x
    return (all(x == 1 for x in diag), d, sum(diag))
