"""The simplicial group of a crossed module and its classifying object.

The simplicial group is the nerve of the action groupoid G1 x| G0 => G0:
level n is G0 x G1^n, an n-simplex (x; g1..gn) being the string of arrows
starting at x with labels g1..gn (the arrow (x, g) has target x * delta g).
The level-n group law is componentwise multiplication of arrow strings:

    (x; g1..gn) (y; h1..hn) = (xy; k1..kn),
    k_i = g_i^(y * delta(h1...h_{i-1})) * h_i.

The classifying object Wbar has (Wbar)_n = level_0 x ... x level_{n-1} with
the right-action face and degeneracy maps

    d_0(a0..a_{n-1}) = (d1 a1, d2 a2, ..., d_{n-1} a_{n-1})
    d_i(a0..a_{n-1}) = (a0, ..., a_{i-2}, a_{i-1} * d0 a_i,
                        d1 a_{i+1}, ..., d_{n-i-1} a_{n-1})     0 < i < n
    d_n(a0..a_{n-1}) = (a0, ..., a_{n-2})

    s_0(a0..a_{n-1}) = (1, s0 a0, s1 a1, ..., s_{n-1} a_{n-1})
    s_i(a0..a_{n-1}) = (a0, ..., a_{i-1}, 1, s0 a_i, ..., s_{n-i-1} a_{n-1})
    s_n(a0..a_{n-1}) = (a0, ..., a_{n-1}, 1)

For a constant simplicial group these reduce to the classifying nerve, so a
2-simplex (a, b) of the nerve of Gamma has d2 = a, d0 = b, d1 = ab.

Elements are plain index tuples; everything here is exhaustively checkable.
"""

from __future__ import annotations

import itertools
from typing import Iterator

from .xmod import CrossedModule

Elt = tuple[int, ...]  # (x, g1, ..., gn), indices into G0 and G1
WElt = tuple[Elt, ...]  # element of (Wbar)_n


# ---------------------------------------------------------------------------
# the simplicial group


def level_identity(xm: CrossedModule, n: int) -> Elt:
    return (xm.g0.identity,) + (xm.g1.identity,) * n


def level_elements(xm: CrossedModule, n: int) -> Iterator[Elt]:
    for x in xm.g0.indices():
        for gs in itertools.product(xm.g1.indices(), repeat=n):
            yield (x,) + gs


def level_mul(xm: CrossedModule, n: int, a: Elt, b: Elt) -> Elt:
    x, gs = a[0], a[1:]
    y, hs = b[0], b[1:]
    acc = y
    ks = []
    for i in range(n):
        ks.append(xm.g1.mul(xm.act(gs[i], acc), hs[i]))
        acc = xm.g0.mul(acc, xm.delta.map[hs[i]])
    return (xm.g0.mul(x, y),) + tuple(ks)


def level_face(xm: CrossedModule, n: int, i: int, a: Elt) -> Elt:
    x, gs = a[0], a[1:]
    if i == 0:
        return (xm.g0.mul(x, xm.delta.map[gs[0]]),) + gs[1:]
    if i == n:
        return (x,) + gs[:-1]
    return (x,) + gs[: i - 1] + (xm.g1.mul(gs[i - 1], gs[i]),) + gs[i + 1 :]


def level_degen(xm: CrossedModule, n: int, i: int, a: Elt) -> Elt:
    x, gs = a[0], a[1:]
    return (x,) + gs[:i] + (xm.g1.identity,) + gs[i:]


# ---------------------------------------------------------------------------
# the classifying object Wbar


def wbar_identity(xm: CrossedModule, n: int) -> WElt:
    return tuple(level_identity(xm, j) for j in range(n))


def wbar_face(xm: CrossedModule, n: int, i: int, w: WElt) -> WElt:
    if i == 0:
        return tuple(level_face(xm, j + 1, j + 1, w[j + 1]) for j in range(n - 1))
    if i == n:
        return w[:-1]
    merged = level_mul(xm, i - 1, w[i - 1], level_face(xm, i, 0, w[i]))
    tail = tuple(level_face(xm, j, j - i, w[j]) for j in range(i + 1, n))
    return w[: i - 1] + (merged,) + tail


def wbar_degen(xm: CrossedModule, n: int, i: int, w: WElt) -> WElt:
    if i == n:
        return w + (level_identity(xm, n),)
    head = w[:i]
    tail = tuple(level_degen(xm, j, j - i, w[j]) for j in range(i, n))
    return head + (level_identity(xm, i),) + tail


# ---------------------------------------------------------------------------
# exhaustive verification helpers (used by the test suite)


def check_simplicial_group(xm: CrossedModule, max_level: int = 3) -> None:
    """Assert group laws, homomorphism property of faces/degeneracies, and
    the simplicial identities on levels <= max_level."""
    for n in range(max_level + 1):
        elems = list(level_elements(xm, n))
        ident = level_identity(xm, n)
        for a in elems:
            assert level_mul(xm, n, a, ident) == a
            assert level_mul(xm, n, ident, a) == a
        for a in elems:
            for b in elems:
                ab = level_mul(xm, n, a, b)
                for c in elems:
                    assert level_mul(xm, n, ab, c) == level_mul(
                        xm, n, a, level_mul(xm, n, b, c)
                    )

    # faces/degeneracies are homomorphisms
    for n in range(1, max_level + 1):
        elems = list(level_elements(xm, n))
        for i in range(n + 1):
            for a in elems:
                for b in elems:
                    assert level_face(
                        xm, n, i, level_mul(xm, n, a, b)
                    ) == level_mul(
                        xm,
                        n - 1,
                        level_face(xm, n, i, a),
                        level_face(xm, n, i, b),
                    )
    for n in range(max_level):
        elems = list(level_elements(xm, n))
        for i in range(n + 1):
            for a in elems:
                for b in elems:
                    assert level_degen(
                        xm, n, i, level_mul(xm, n, a, b)
                    ) == level_mul(
                        xm,
                        n + 1,
                        level_degen(xm, n, i, a),
                        level_degen(xm, n, i, b),
                    )

    # simplicial identities d_i d_j = d_{j-1} d_i (i < j), etc.
    for n in range(2, max_level + 1):
        for a in level_elements(xm, n):
            for j in range(n + 1):
                for i in range(j):
                    assert level_face(
                        xm, n - 1, j - 1, level_face(xm, n, i, a)
                    ) == level_face(xm, n - 1, i, level_face(xm, n, j, a))
    for n in range(max_level):
        for a in level_elements(xm, n):
            for i in range(n + 1):
                for j in range(i, n + 1):
                    assert level_degen(
                        xm, n + 1, j + 1, level_degen(xm, n, i, a)
                    ) == level_degen(xm, n + 1, i, level_degen(xm, n, j, a))
    for n in range(1, max_level):
        for a in level_elements(xm, n):
            for j in range(n + 1):
                for i in range(n + 2):
                    lhs = level_face(xm, n + 1, i, level_degen(xm, n, j, a))
                    if i < j:
                        rhs = level_degen(xm, n - 1, j - 1, level_face(xm, n, i, a))
                    elif i in (j, j + 1):
                        rhs = a
                    else:
                        rhs = level_degen(xm, n - 1, j, level_face(xm, n, i - 1, a))
                    assert lhs == rhs


def check_wbar_simplicial(xm: CrossedModule, samples: list[WElt], n: int) -> None:
    """Assert the simplicial identities of Wbar on the given degree-n samples."""
    for w in samples:
        for j in range(n + 1):
            for i in range(j):
                assert wbar_face(
                    xm, n - 1, j - 1, wbar_face(xm, n, i, w)
                ) == wbar_face(xm, n - 1, i, wbar_face(xm, n, j, w))
        if n >= 1:
            for j in range(n + 1):
                for i in range(n + 2):
                    lhs = wbar_face(xm, n + 1, i, wbar_degen(xm, n, j, w))
                    if i < j:
                        rhs = wbar_degen(xm, n - 1, j - 1, wbar_face(xm, n, i, w))
                    elif i in (j, j + 1):
                        rhs = w
                    else:
                        rhs = wbar_degen(xm, n - 1, j, wbar_face(xm, n, i - 1, w))
                    assert lhs == rhs
