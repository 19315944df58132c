"""Print every rank-4 ladder with its verdict and whether it is among the listed shapes."""
import argparse

from sympladder.checks import RANK4_WINDOW, Window, rank4_expected, rank4_ladders
from sympladder.classify import classify_ladder_Q
from sympladder.core import Line
from sympladder.textformat import to_text


def main():
    p = argparse.ArgumentParser(description=__doc__)
    p.add_argument("--window", default=f"{RANK4_WINDOW.lo}:{RANK4_WINDOW.hi}")
    p.add_argument("--all", action="store_true", help="also print NotDistinguished ladders")
    args = p.parse_args()
    lo, hi = map(int, args.window.split(":"))
    w = Window(4, lo, hi, None)
    for line in (Line("rho2", 2, False, False), Line("mu", 1, False, True)):
        print(f"# {to_text(line)}")
        for m in rank4_ladders(line, w):
            v = classify_ladder_Q(m)
            listed = rank4_expected(m)
            if v.distinguished or listed or args.all:
                flag = "" if v.distinguished == listed else "   <- not among the listed shapes"
                print(f"{str(v.status):17} {to_text(m)}{flag}")


if __name__ == "__main__":
    main()
