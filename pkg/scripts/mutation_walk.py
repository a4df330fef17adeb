"""Walk the exchange graph of cluster tilting sets C_i = {M_i, M_i+1} of K_m.

At each step both mutations are computed inside the window; the table shows
the exchanged pair, the dimension vectors F(M_j) relative to C_0 and whether
the exchange pair has one-dimensional extensions in both directions.

    python3 scripts/mutation_walk.py --m 3 --start -3 --steps 6
"""

import argparse

from rigidlab import clustercat as cc


def main():
    p = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    p.add_argument("--m", type=int, default=3)
    p.add_argument("--start", type=int, default=-3)
    p.add_argument("--steps", type=int, default=6)
    p.add_argument("--window", type=int, default=None,
                   help="defaults to one more than the largest index visited")
    p.add_argument("--module-bound", type=int, default=10)
    args = p.parse_args()
    m = args.m
    window = args.window or max(abs(args.start), abs(args.start + args.steps + 1)) + 1
    C0 = cc.chamber(m, 0)
    T = cc.chamber(m, args.start)
    print(f"m={m} window={window} module_bound={args.module_bound}")
    print("step  tilting set      out   in    F(in) w.r.t. C_0    ext both ways")
    for step in range(args.steps):
        X = min(T, key=lambda A: A.index)
        new = cc.mutate(T, X, window, args.module_bound)
        (Y,) = [A for A in new if A not in T]
        F = cc.functor_F(C0, Y) if not cc.in_shifted(C0, Y) else "killed"
        exchange = cc.cluster_hom_dim(X, Y, 1) == cc.cluster_hom_dim(Y, X, 1) == 1
        print(f"{step:4d}  {' '.join(T.names()):15s}  {X.name:4s}  {Y.name:4s}  {str(F):18s}  {exchange}")
        T = new
    print(f"end   {' '.join(T.names())}")


if __name__ == "__main__":
    main()
