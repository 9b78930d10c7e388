"""The carry-approximation magma on finite sets of naturals.

The binary operation treats a set as the positions of 1-bits in a binary
number and performs one round of carry propagation on the sum:

    oplus(A, B) = (A sym_diff B) sym_diff ((A intersect B) + 1)

It is commutative, has the empty set as neutral element, and every set
has an inverse, but it is not associative: ({0} oplus {0}) oplus {1}
gives {2} while {0} oplus ({0} oplus {1}) gives the empty set.
"""

from .bitset import FinSet, intersect, shift_up, sym_diff


def oplus(a: FinSet, b: FinSet) -> FinSet:
    """Apply one carry round to the pair: (A △ B) △ ((A ∩ B) + 1).

    The symmetric difference plays the role of bitwise XOR and the
    shifted intersection injects each colliding element as a carry one
    position higher, without propagating further.
    """
    return sym_diff(sym_diff(a, b), shift_up(intersect(a, b), 1))


def stretch(a: FinSet, n: int) -> int:
    """Length of the contiguous run of members of ``a`` ending at n.

    Returns 0 when n is not a member; otherwise 1 + the largest k <= n
    such that n-k .. n all belong to ``a``.  Computed by scanning
    downward from n, stopping at the first gap or at 0.
    """
    if n < 0:
        raise ValueError(f"position must be a natural number, got {n}")
    if n not in a:
        return 0
    k = 0
    while k < n and (n - k - 1) in a:
        k += 1
    return k + 1


def invert(a: FinSet) -> FinSet:
    """A set B with oplus(a, B) = {}, built from stretch parities.

    Construction: keep every member whose backward stretch is odd, and
    additionally include the successor of any such member when the
    successor is not itself a member.  (Positions y not in ``a`` enter
    the inverse exactly when y > 0 and stretch(a, y-1) is odd, and a
    positive stretch at y-1 forces y-1 to be a member, so only member
    successors need checking.)  The empty set is neutral, hence its own
    inverse.  For non-empty ``a`` the minimum element always has
    stretch 1, so min(invert(a)) = min(a).
    """
    bits = 0
    for x in a:
        if stretch(a, x) % 2 == 1:
            bits |= 1 << x
            if (x + 1) not in a:
                bits |= 1 << (x + 1)
    return FinSet(bits)


def solve(a: FinSet, b: FinSet) -> FinSet:
    """The finite X with oplus(a, X) = b, found by a forward bit sweep.

    Writing a_n, b_n, x_n for membership bits, the result bit at n is
    b_n = a_n XOR x_n XOR (a_{n-1} AND x_{n-1}), so x_n is forced:

        x_n = b_n XOR a_n XOR (a_{n-1} AND x_{n-1}),  x_{-1} = 0.

    Every bit beyond max(max(a) + 1, max(b)) comes out 0, so the sweep
    stops there and X is finite.  The determinism of the recurrence is
    what makes the solution unique.  Raises RuntimeError if the result
    fails the defining equation, which would indicate a bug here rather
    than bad input.
    """
    abits, bbits = a.bits, b.bits
    x = 0
    top = max(abits.bit_length() + 1, bbits.bit_length())
    for n in range(top + 1):
        an = (abits >> n) & 1
        bn = (bbits >> n) & 1
        carry = (abits >> (n - 1)) & (x >> (n - 1)) & 1 if n else 0
        x |= (bn ^ an ^ carry) << n
    result = FinSet(x)
    if oplus(a, result) != b:
        raise RuntimeError(
            f"internal error: solver produced {result} for a={a}, b={b} "
            "but it does not satisfy the defining equation")
    return result
