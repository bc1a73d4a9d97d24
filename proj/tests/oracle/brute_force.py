#!/usr/bin/env python3
"""Independent brute-force oracle used to freeze golden values for the C++ tests.

Uses frozensets only (no bit tricks) so it shares no code path with the library.
"""
from itertools import combinations
import sys


def subsets(universe):
    items = sorted(universe)
    for r in range(len(items) + 1):
        for c in combinations(items, r):
            yield frozenset(c)


def coverings(n):
    U = frozenset(range(1, n + 1))
    nonempty = [s for s in subsets(U) if s]
    for r in range(1, len(nonempty) + 1):
        for fam in combinations(nonempty, r):
            if frozenset().union(*fam) == U:
                yield U, list(fam)


def neighborhood(C, x):
    out = None
    for K in C:
        if x in K:
            out = K if out is None else out & K
    return out


def md(C, x):
    ks = [K for K in C if x in K]
    return [K for K in ks if not any(S < K for S in ks)]


def fl(C, X):
    return frozenset().union(*[K for K in C if K <= X])


def reducible(C, K):
    return frozenset().union(*[S for S in C if S != K and S <= K]) == K


def reduct(C):
    C = list(C)
    while True:
        r = [K for K in C if reducible(C, K)]
        if not r:
            return C
        C.remove(r[0])


def F_members(U, C):
    return [X for X in subsets(U) if fl(C, X) == X]


def dual_blocks_reading(U, C, X):
    Xc = U - X
    R = reduct(C)
    return frozenset().union(*[K for K in R if K & Xc])


def dual_definitional(U, fam, X):
    cands = [Y for Y in fam if X | Y == U]
    mins = [Y for Y in cands if all(Y <= Z for Z in cands)]
    return mins[0] if mins else None


def main():
    for n in range(1, 5):
        print("coverings", n, sum(1 for _ in coverings(n)))
    diverge = 0
    unary = 0
    first = None
    for U, C in coverings(4):
        if all(len(md(C, x)) == 1 for x in U):
            unary += 1
            fam = F_members(U, C)
            for X in fam:
                if dual_blocks_reading(U, C, X) != dual_definitional(U, fam, X):
                    diverge += 1
                    if first is None:
                        first = (C, X)
    print("unary coverings n=4", unary)
    print("blocks-reading divergences n=4", diverge, first)


if __name__ == "__main__":
    sys.exit(main())
