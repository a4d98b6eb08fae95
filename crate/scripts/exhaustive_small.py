#!/usr/bin/env python3
"""Brute-force domination numbers for a handful of tiny graphs.

Tries every vertex subset in order of size and reports the first size that
satisfies the membership condition. Used as an independent cross-check of
the exact solver; the expected output is frozen in the acceptance suite.
"""
from fractions import Fraction
from itertools import combinations
from math import ceil


def cycle(n):
    return n, [(i, (i + 1) % n) for i in range(n)]


def complete(n):
    return n, [(i, j) for i in range(n) for j in range(i + 1, n)]


def neighbours(n, edges):
    nb = [set() for _ in range(n)]
    for u, v in edges:
        nb[u].add(v)
        nb[v].add(u)
    return nb


def ok_alpha(nb, x, a):
    return all(len(nb[v] & x) >= ceil(a * len(nb[v])) for v in range(len(nb)) if v not in x)


def ok_rate(nb, x, a):
    return all(len((nb[v] | {v}) & x) >= a * len(nb[v]) for v in range(len(nb)))


def ok_tuple(nb, x, k):
    return all(len((nb[v] | {v}) & x) >= k for v in range(len(nb)))


def minimum(n, ok):
    for size in range(n + 1):
        for x in combinations(range(n), size):
            if ok(set(x)):
                return size
    raise AssertionError("full vertex set always qualifies")


if __name__ == "__main__":
    c5 = neighbours(*cycle(5))
    k4 = neighbours(*complete(4))
    one, half = Fraction(1), Fraction(1, 2)
    rows = [
        ("gamma(C5)", minimum(5, lambda x: ok_alpha(c5, x, Fraction(1, 1000)))),
        ("gamma_1(C5)", minimum(5, lambda x: ok_alpha(c5, x, one))),
        ("gamma_x1/2(C5)", minimum(5, lambda x: ok_rate(c5, x, half))),
        ("gamma_1(K4)", minimum(4, lambda x: ok_alpha(k4, x, one))),
        ("gamma_x2(K4)", minimum(4, lambda x: ok_tuple(k4, x, 2))),
    ]
    for name, value in rows:
        print(f"{name} = {value}")
