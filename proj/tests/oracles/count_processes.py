#!/usr/bin/env python3
"""Brute-force count of canonical processes, independent of the C++ enumerator.

Every raw process term of height <= depth is generated, where choices take
an ordered tuple of 2..width operands (repetitions allowed) and 0 and 1 have
height 0; a prefix or a choice adds one level.  Each raw term is
canonicalized by flattening same-operator choice chains and collapsing
duplicate operands into a set.  Canonical forms whose chains have more than
`width` operands are discarded; the remaining distinct forms are counted.

Usage: count_processes.py NAMES DEPTH [WIDTH]
       e.g. count_processes.py a,b 2
"""
import itertools
import sys


def canon_choice(op, operands):
    ops = set()
    for c in operands:
        if isinstance(c, tuple) and c[0] == op:
            ops.update(c[1])
        else:
            ops.add(c)
    if len(ops) == 1:
        return next(iter(ops))
    return (op, frozenset(ops))


def max_width(c):
    if isinstance(c, tuple):
        if c[0] in ("+", "(+)"):
            return max([len(c[1])] + [max_width(x) for x in c[1]])
        return max_width(c[2])
    return 0


def raw_layers(names, depth, width=2):
    actions = [(pol, n) for n in names for pol in ("in", "out")]
    layer = ["0", "1"]          # canonical forms of raw terms of height <= h
    by_height = [list(layer)]
    seen = set(layer)
    for h in range(1, depth + 1):
        prev = by_height[h - 1]
        pool = [c for layer_ in by_height for c in layer_]
        new = []
        # raw prefix terms of height exactly h come from raw terms of height h-1
        for (pol, n) in actions:
            for c in prev:
                new.append(("pfx", (pol, n), c))
        for op in ("+", "(+)"):
            for k in range(2, width + 1):
                for operands in itertools.product(pool, repeat=k):
                    new.append(canon_choice(op, operands))
        fresh = []
        for c in new:
            if max_width(c) > width:
                continue
            if c not in seen:
                seen.add(c)
                fresh.append(c)
        by_height.append(fresh)
    return seen


def main():
    names = sys.argv[1].split(",")
    depth = int(sys.argv[2])
    width = int(sys.argv[3]) if len(sys.argv) > 3 else 2
    print(len(raw_layers(names, depth, width)))


if __name__ == "__main__":
    main()
