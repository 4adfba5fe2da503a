"""Randomized robustness properties.

The systematic sweeps live with their modules; these checks feed arbitrary
data to the validators and assert they either accept correctly or reject
with a named axiom, never crash or mis-accept.
"""

from hypothesis import given, settings, strategies as st

from crossmod.errors import CheckError
from crossmod.fgroup import cyclic, validate_group
from crossmod.cocycle import Cocycle1, is_valid_cocycle, wbar_check
from crossmod.xmod import shifted_xmod

GROUP_CODES = {
    "DuplicateLabel", "NotClosed", "NotAssociative", "NoIdentity", "NoInverse",
}


@st.composite
def square_tables(draw):
    n = draw(st.integers(min_value=1, max_value=5))
    table = [
        [draw(st.integers(min_value=0, max_value=n - 1)) for _ in range(n)]
        for _ in range(n)
    ]
    return n, table


def naive_is_group(n, t):
    if any(t[t[a][b]][c] != t[a][t[b][c]]
           for a in range(n) for b in range(n) for c in range(n)):
        return False
    ident = [e for e in range(n)
             if all(t[e][x] == x and t[x][e] == x for x in range(n))]
    if not ident:
        return False
    e = ident[0]
    return all(any(t[a][b] == e and t[b][a] == e for b in range(n))
               for a in range(n))


@given(square_tables())
@settings(max_examples=300, deadline=None)
def test_validate_group_agrees_with_naive_checker(data):
    n, table = data
    labels = [f"x{i}" for i in range(n)]
    try:
        validate_group(labels, table)
        accepted = True
    except CheckError as exc:
        assert exc.code in GROUP_CODES
        accepted = False
    assert accepted == naive_is_group(n, table)


@given(
    st.integers(min_value=0, max_value=1),
    st.lists(st.integers(min_value=0, max_value=1), min_size=4, max_size=4),
)
@settings(max_examples=100, deadline=None)
def test_wbar_matches_validator_on_arbitrary_data(x_t, gvals):
    # arbitrary (x, g) tables over Gamma = Z2 with [Z2 -> 1] coefficients
    z2 = cyclic(2)
    xm = shifted_xmod(z2)
    c = Cocycle1(
        z2, xm,
        (0, 0),  # G0 is trivial here, so x is forced anyway
        ((gvals[0], gvals[1]), (gvals[2], gvals[3])),
    )
    assert wbar_check(c).ok == is_valid_cocycle(c)


@given(
    st.integers(min_value=0, max_value=2),
    st.lists(st.integers(min_value=0, max_value=2), min_size=9, max_size=9),
)
@settings(max_examples=100, deadline=None)
def test_wbar_matches_validator_z3(unused, gvals):
    z3 = cyclic(3)
    xm = shifted_xmod(z3)
    g = tuple(tuple(gvals[3 * i + j] for j in range(3)) for i in range(3))
    c = Cocycle1(z3, xm, (0, 0, 0), g)
    assert wbar_check(c).ok == is_valid_cocycle(c)
