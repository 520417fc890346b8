#!/usr/bin/env python3
"""How the total mass of rho converges.

The tail rho(t) ~ -1/(t log^2 t) makes int_0^X rho approach its limit only
like 1/log X.  Prints the truncated integrals next to 1/2 + 1/log X, and the
real-axis limit x (1 - G(x)), which tends to the same value.
"""
import math

from cmlog.cutplane import eval_one_minus_g
from cmlog.density import density_constants, rho
from cmlog.quad import TailSpec, integrate_semi_infinite


def main():
    c = density_constants()
    head = c.total
    print(f"int_0^inf rho = {head:.12f}")
    print("a cutoff near X = 1e22 leaves 1/log X ~ 0.019 of the tail unaccounted for")
    print()
    print(f"{'X':>10} {'int_0^X rho':>16} {'1/2 + 1/log X':>16}")
    # int_0^X = total - int_X^inf
    for X in (10.0, 1e2, 1e3, 1e4, 1e6, 1e10, 1e22):
        tail = integrate_semi_infinite(rho, X, 1e-12, TailSpec.log_squared_reciprocal()).value
        print(f"{X:10.0e} {head - tail:16.10f} {0.5 + 1 / math.log(X):16.10f}")
    print()
    print(f"{'x':>10} {'x (1 - G(x))':>16} {'minus 1/log x':>16}")
    for x in (1e3, 1e10, 1e50, 1e200):
        v = x * eval_one_minus_g(x).real
        print(f"{x:10.0e} {v:16.12f} {v - 1 / math.log(x):16.12f}")


if __name__ == "__main__":
    main()
