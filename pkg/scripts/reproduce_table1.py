"""Rebuild the Figure 4 pseudo-t-norm, compare it with the pinned CSV and list its law failures."""
import argparse
import sys

from latnorm import corpus
from latnorm.formats import emit_optable
from latnorm.tnorm import construct_planar, verify_tnorm


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("-o", "--output", help="write the constructed CSV here")
    args = ap.parse_args()

    L = corpus.get("fig4_L")
    T = construct_planar(L, "f", "h")
    text = emit_optable(T)
    if args.output:
        with open(args.output, "w") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    same = text == corpus.table1_text()
    print(f"\nmatches pinned table: {same}")
    for law, w in verify_tnorm(T).failures.items():
        print(f"fails {law}: {w.labelled(L)}")
    f, g, h = (L.idx(x) for x in "fgh")
    print(f"T(T(f,g),h) = {L.labels[T(T(f, g), h)]}, T(f,T(g,h)) = {L.labels[T(f, T(g, h))]}")
    return 0 if same else 1


if __name__ == "__main__":
    sys.exit(main())
