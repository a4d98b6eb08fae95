#!/usr/bin/env python3
"""Arbitrary-precision reference values for the bound formulas.

Every number printed here is frozen into the Rust test suites. The
binomials are exact integers; all real arithmetic runs at 60 digits.
"""
from math import comb

from mpmath import mp, mpf, log, exp

mp.dps = 60


def upper_thm(dh, dbar):
    # 1 - dh / ((1+dh)^(1+1/dh) * dbar^(1/dh))
    dh = mpf(dh)
    return 1 - dh / ((1 + dh) ** (1 + 1 / dh) * mpf(dbar) ** (1 / dh))


def optimal_p(dh, dbar):
    dh = mpf(dh)
    return 1 - (1 / ((1 + dh) * mpf(dbar))) ** (1 / dh)


def upper_cor(dh, dbar):
    dh = mpf(dh)
    return (log(dh + 1) + log(mpf(dbar)) + 1) / (dh + 1)


def caro_roditty(delta):
    d = mpf(delta)
    return 1 - d / (1 + d) ** (1 + 1 / d)


def classical(delta):
    d = mpf(delta)
    return (log(d + 1) + 1) / (d + 1)


def show(label, value):
    print(f"{label:40s} {mp.nstr(value, 25)}")


if __name__ == "__main__":
    c = comb(1000, 99)
    show("ln C(1000,99)", log(mpf(c)))
    show("thm2 1000-regular a=1/10", upper_thm(901, c))
    show("optimal_p 1000-regular a=1/10", optimal_p(901, c))
    show("cor1 1000-regular a=1/10", upper_cor(901, c))
    show("cor1_p 1000-regular a=1/10", (log(mpf(902)) + log(mpf(c))) / 902)
    show("dunbar upper 1000-regular", mpf(1000) / 1900)
    show("dunbar lower 1000-regular", mpf(100) / 1100)
    cc = comb(1001, 99)
    show("thm3 1000-regular a=1/10", upper_thm(901, cc))
    show("cor2 1000-regular a=1/10", upper_cor(901, cc))
    show("caro_roditty delta=2", caro_roditty(2))
    show("C5 thm2 a=1/2 (x5)", upper_thm(2, 1) * 5)
    show("C5 optimal_p a=1/2", optimal_p(2, 1))
    show("K4 thm3 a=1", upper_thm(1, 6))
    show("cor1 dh=1 dbar=1", upper_cor(1, 1))
    show("classical delta=1", classical(1))
    show("classical delta=1000", classical(1000))
    # Petersen: 3-regular, a=1/2 -> ceil(1.5)=2, k=1; dh = floor(1.5)+1 = 2
    show("Petersen thm2 a=1/2", upper_thm(2, comb(3, 1)))
    show("Petersen thm3 a=1/2", upper_thm(2, comb(4, 1)))
    # Petersen a=1: k=2, dh=1
    show("Petersen thm2 a=1", upper_thm(1, comb(3, 2)))
