#!/usr/bin/env python3
"""Exploratory scan: is G one-to-one on the whole right half-plane?

Samples random pairs z1 != z2 with Re z > 0 and reports the smallest
|G(z2) - G(z1)| / |z2 - z1| seen, raw and relative to |G'| at the midpoint
(G' decays like 1/|z|^2, so the raw ratio is small far out).  A value far from zero is evidence, not proof;
this never gates anything.
"""
import argparse

import numpy as np

from cmlog.cutplane import eval_g_direct, eval_g_prime_direct


def sample(rng, n, r_min, r_max):
    r = np.exp(rng.uniform(np.log(r_min), np.log(r_max), n))
    th = rng.uniform(-0.5 * np.pi, 0.5 * np.pi, n) * (1 - 1e-9)
    return r * np.exp(1j * th)


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--pairs", type=int, default=200_000)
    ap.add_argument("--seed", type=int, default=0)
    ap.add_argument("--r-min", type=float, default=1e-3)
    ap.add_argument("--r-max", type=float, default=1e3)
    args = ap.parse_args()

    rng = np.random.default_rng(args.seed)
    z1 = sample(rng, args.pairs, args.r_min, args.r_max)
    # half the partners are close neighbours, half are anywhere
    near = z1 * (1 + 0.05 * (rng.standard_normal(args.pairs) + 1j * rng.standard_normal(args.pairs)))
    far = sample(rng, args.pairs, args.r_min, args.r_max)
    z2 = np.where(np.arange(args.pairs) % 2 == 0, near, far)
    z2 = np.where(z2.real > 0, z2, z2.conj() * -1)
    ratio = np.abs(eval_g_direct(z2) - eval_g_direct(z1)) / np.abs(z2 - z1)
    scaled = ratio / np.abs(eval_g_prime_direct(0.5 * (z1 + z2)))
    i, j = int(np.argmin(ratio)), int(np.argmin(scaled))
    print(f"pairs sampled:            {args.pairs}")
    print(f"min |dG|/|dz|:            {ratio[i]:.6e} at z1 = {z1[i]:.6g}, z2 = {z2[i]:.6g}")
    print(f"min |dG|/(|dz| |G'(mid)|): {scaled[j]:.6e} at z1 = {z1[j]:.6g}, z2 = {z2[j]:.6g}")


if __name__ == "__main__":
    main()
