#!/usr/bin/env python3
"""Reference values at 30 digits, used as expected values in the tests."""
from mpmath import diff, log, log1p, mp, mpc, mpf

mp.dps = 30


def G(z):
    return z * log(z) * log1p(1 / z) / log1p(z)


def main():
    print("G(2)          ", G(mpf(2)))
    print("1 - G(2)      ", 1 - G(mpf(2)))
    print("G(1/2)        ", G(mpf("0.5")))
    print("h(2)          ", 1 / (2 * (1 - G(mpf(2)))))
    print("G(1+i)        ", G(mpc(1, 1)))
    print("G'(1+i)       ", diff(G, mpc(1, 1)))
    print("G'(e^{i pi/4})", diff(G, mp.expjpi(mpf(1) / 4)))
    # 1 - G(x) cancels like 1/x, so the working precision grows with x
    for e in (10, 50, 200):
        with mp.workdps(e + 40):
            x = mpf(10) ** e
            v = x * (1 - G(x)) - 1 / log(x)
        print(f"x(1-G(x)) - 1/log x at x=1e{e}:", mp.nstr(v, 25))


if __name__ == "__main__":
    main()
