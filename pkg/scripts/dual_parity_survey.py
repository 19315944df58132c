"""Compare the parity test on the dual ladder, read literally and blockwise, against Speh type."""
import argparse

from sympladder.checks import Window, default_line, ladders
from sympladder.classify import parity_conditions
from sympladder.core import is_ladder, speh_halve
from sympladder.textformat import to_text
from sympladder.zelevinsky import mw_dual


def main():
    p = argparse.ArgumentParser(description=__doc__)
    p.add_argument("--max-segs", type=int, default=4)
    p.add_argument("--max-len", type=int, default=3)
    p.add_argument("--window", default="0:6")
    args = p.parse_args()
    lo, hi = map(int, args.window.split(":"))
    counts = {"cases": 0, "literal": 0, "blockwise": 0}
    for m in ladders(default_line(), Window(args.max_segs, lo, hi, args.max_len)):
        counts["cases"] += 1
        speh = speh_halve(m) is not None
        order = is_ladder(mw_dual(m))
        lit, blk = parity_conditions(order, blockwise=False), parity_conditions(order, blockwise=True)
        counts["literal"] += lit != speh
        counts["blockwise"] += blk != speh
        if lit != speh or blk != speh:
            print(f"speh={speh!s:5} literal={lit!s:5} blockwise={blk!s:5} {to_text(m)}  dual {to_text(mw_dual(m))}")
    print(f"{counts['cases']} ladders: {counts['literal']} literal mismatches, "
          f"{counts['blockwise']} blockwise mismatches")


if __name__ == "__main__":
    main()
