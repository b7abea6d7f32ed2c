"""Pure-Python Z/2 column reduction kernel.

Columns are Python integers used as bitsets over row indices; XOR is native
and the lowest one (highest set bit) comes from int.bit_length.  Same
contract as the compiled kernel in _reduce_cy.
"""

from __future__ import annotations

__all__ = ["reduce_columns"]


def reduce_columns(columns: list[list[int]]) -> list[int]:
    """Standard persistence reduction over Z/2.

    `columns[j]` lists the row indices of the nonzero entries of boundary
    column j; rows and columns share the filtration order.  Returns, per
    column, the row index of its lowest one after reduction, or -1 if the
    column was cleared.
    """
    n = len(columns)
    masks = [0] * n
    low_owner = [-1] * n  # row -> column currently holding that lowest one
    lows = [-1] * n
    for j, rows in enumerate(columns):
        col = 0
        for r in rows:
            col |= 1 << r
        while col:
            low = col.bit_length() - 1
            other = low_owner[low]
            if other < 0:
                break
            col ^= masks[other]
        masks[j] = col
        if col:
            low = col.bit_length() - 1
            lows[j] = low
            low_owner[low] = j
    return lows
