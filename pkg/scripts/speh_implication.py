"""Exhaustively check that symplectic multisegments are of Speh type on a window."""
import argparse
import time

from sympladder.symplectic import verify_speh_implication
from sympladder.textformat import to_text


def main():
    p = argparse.ArgumentParser(description=__doc__)
    p.add_argument("--max-segs", type=int, default=3)
    p.add_argument("--window", default="0:3")
    args = p.parse_args()
    lo, hi = map(int, args.window.split(":"))
    t0 = time.perf_counter()
    rep = verify_speh_implication(args.max_segs, lo, hi)
    print(f"cases={rep.cases} symplectic={rep.symplectic} speh_type={rep.speh_type} "
          f"both={rep.both} counterexamples={len(rep.counterexamples)} "
          f"({time.perf_counter() - t0:.1f}s)")
    for m in rep.counterexamples:
        print("  ", to_text(m))


if __name__ == "__main__":
    main()
