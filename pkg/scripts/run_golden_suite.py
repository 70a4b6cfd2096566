#!/usr/bin/env python3
"""Run the shipped golden scenarios and write one combined JSON report."""

import argparse
import sys

from multitime_lab.cli import main

if __name__ == "__main__":
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--out", default=None)
    ap.add_argument("--jobs", type=int, default=4)
    args = ap.parse_args()
    argv = ["suite", "--jobs", str(args.jobs)] + (["--out", args.out] if args.out else [])
    sys.exit(main(argv))
