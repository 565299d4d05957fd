#!/usr/bin/env python3
"""Independent oracle for the frozen expected values in the C++ tests.

Closed forms are evaluated with mpmath at 40 digits; anything needing linear
algebra goes through numpy/LAPACK (never through the library under test).
Run: python3 tests/oracle/oracle_values.py
"""
import mpmath as mp
import numpy as np

mp.mp.dps = 40
log2 = lambda x: mp.log(x, 2)


def h(p):
    p = mp.mpf(p)
    out = mp.mpf(0)
    for x in (p, 1 - p):
        if x > 0:
            out -= x * log2(x)
    return out


def wootters_f(x):
    return h((1 + mp.sqrt(1 - mp.mpf(x))) / 2)


def lf(x, k):
    x, k = mp.mpf(x), mp.mpf(k)
    return ((1 + k) ** x - mp.mpf(0.5) ** x) / k ** x


def show(name, v):
    print(f"{name:48s} {mp.nstr(v, 17)}")


# --- Example 1 (generalized Schmidt, lambda0=lambda3=1/2, lambda2=sqrt2/2)
e1_split = 2 - mp.mpf(3) / 4 * log2(3)
e1_12 = h((2 + mp.sqrt(2)) / 4)
e1_13 = h((2 + mp.sqrt(3)) / 4)
show("ex1 E(1|23) = 2 - 3/4 log2 3", e1_split)
show("ex1 E(12)", e1_12)
show("ex1 E(13)", e1_13)
show("wootters_f(0.75)", wootters_f(0.75))
show("wootters_f(0.25)", wootters_f(0.25))
show("wootters_f(0.5)", wootters_f(0.5))

a, r, k = mp.mpf(0.5), mp.mpf(2), mp.mpf(1.71)
u = a / r
z1 = mp.mpf(0.5) ** u * e1_13 ** a + lf(u, k) * e1_12 ** a
z2 = e1_13 ** a + ((1 + k) ** u - 1) / k ** u * e1_12 ** a
show("ex1 thm2 LHS alpha=.5", e1_split ** a)
show("ex1 thm2 z1 (alpha=.5,r=2,k=1.71)", z1)
show("ex1 ref26 z2", z2)
show("ex1 z = z1 - z2", z1 - z2)

# --- W state
w_split = log2(3) - mp.mpf(2) / 3
w_pair = wootters_f(mp.mpf(4) / 9)
s0 = mp.log(2) / mp.log(1 / w_pair)
show("W E(1|23) = log2 3 - 2/3", w_split)
show("W pair EoF f(4/9)", w_pair)
show("W s0", s0)
show("W eq35 rhs s=1", 2 * w_pair)
show("W eq35 lhs at s0", w_split ** s0)
show("W thm5 lhs beta=1.5", w_split ** mp.mpf(1.5))
for s in (mp.mpf("0.9"), mp.mpf(1), mp.mpf("1.1")):
    show(f"W thm5 rhs beta=1.5 s={s}", 2 ** (mp.mpf(1.5) / s) * w_pair ** mp.mpf(1.5))
show("W thm5 rhs beta=s=1.1", 2 * w_pair ** mp.mpf("1.1"))
show("W thm5 lhs beta=1.1", w_split ** mp.mpf("1.1"))
show("W S21(1|23) = 4/9", mp.mpf(4) / 9)

# --- scalar lemma values
show("l(1/2,1)", lf(0.5, 1))
show("l(1,1)", lf(1, 1))
show("l(2,1)", lf(2, 1))
show("lemma1 t=2,k=1,x=1/2 lhs", mp.sqrt(3))
show("lemma1 t=2,k=1,x=1/2 rhs", mp.sqrt(0.5) + lf(0.5, 1) * mp.sqrt(2))
lw = lf(0.5, 1)
show("lemma2 [2/9,2/9] weighted", mp.sqrt(0.5) * (lw * mp.sqrt(mp.mpf(2) / 9) + mp.sqrt(mp.mpf(2) / 9)))
l2 = lf(2, 1)
show("lemma2 [3,2,1] x=2 weighted", mp.mpf(0.25) * (l2 ** 2 * 9 + l2 * 4 + 1))
show("thm1 W3 m=1 rhs", mp.sqrt(0.5) * (lw * mp.sqrt(mp.mpf(2) / 9) + mp.sqrt(mp.mpf(2) / 9)))
show("thm4 W3 m=2 beta=1 rhs", mp.mpf(0.5) * (lf(1, 1) * mp.mpf(4) / 9 + mp.mpf(4) / 9))
show("thm4 GHZ3 m=2 beta=2 rhs", mp.mpf(0.25) * (lf(2, 1) * mp.mpf(0.5) + mp.mpf(0.5)))

# --- Werner concurrence
for p in (0, 0.2, mp.mpf(1) / 3, 0.5, 0.8, 1):
    show(f"Werner C p={mp.nstr(p, 6)}", max(0, (3 * mp.mpf(p) - 1) / 2))

# --- W4 (numpy): pairwise concurrence 1/2, split entropy h(1/4)
w4_pair = wootters_f(mp.mpf(1) / 4)
w4_split = h(mp.mpf(1) / 4)
show("W4 pair EoF f(1/4)", w4_pair)
show("W4 E(1|234) = h(1/4)", w4_split)
# thm3 on W4, k=1, alpha=.5, r=sqrt2: all three pairwise E equal; surrogate
# for i=2 is f(C13^2 + C14^2) = f(1/2) > E12, i=3 is E14 = E13: both low -> case 2
a, r = mp.mpf(0.5), mp.sqrt(2)
u = a / r
L = lf(u, 1)
rhs_case2 = mp.mpf(0.5) ** u * (w4_pair ** a + L * w4_pair ** a) + L ** 2 * w4_pair ** a
show("W4 thm3 lhs", w4_split ** a)
show("W4 thm3 case2 rhs", rhs_case2)
rhs_case1 = mp.mpf(0.5) ** u * w4_pair ** a + L ** 2 * w4_pair ** a + L * mp.mpf(0.5) ** u * w4_pair ** a
show("W4 thm3 case1(m=2) rhs", rhs_case1)
# thm6 on W4, k=1, s=1, beta=1.5: P_i = E, T_2 = 2E >= P_2 (low), T_3 = E >= P_3 (low & high)
b, s = mp.mpf(1.5), mp.mpf(1)
x = b / s
L = lf(x, 1)
c2 = mp.mpf(0.5) ** x * (w4_pair ** b + L * w4_pair ** b) + L ** 2 * w4_pair ** b
c1 = mp.mpf(0.5) ** x * w4_pair ** b + L ** 2 * w4_pair ** b + L * mp.mpf(0.5) ** x * w4_pair ** b
show("W4 thm6 lhs", w4_split ** b)
show("W4 thm6 case2 rhs", c2)
show("W4 thm6 case1(m=2) rhs", c1)
show("W4 s0 = ln3/ln(1/E) (three equal terms)", mp.log(3) / mp.log(1 / w4_pair))

# --- Haar moment oracle: E<sigma_z> over 1-qubit Haar is 0; sd of mean ~ 1/sqrt(3N)
print("Haar 1-qubit <sz> sd of mean for N=1e4:", 1 / mp.sqrt(3 * 10 ** 4))
