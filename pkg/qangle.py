#!/usr/bin/env python3

HELP_TEXT = """
How to use

* Angle between two states (JSON arrays of [re, im] pairs):
    ./qangle.py angle a.json b.json

* Check the certainty principle for a generator file and a shift:
    ./qangle.py verdict generator.json state.json 1.5

* Run a worked example:
    ./qangle.py demo line
    ./qangle.py demo circle --modes 0,1
    ./qangle.py demo lifetime --profile gaussian
    ./qangle.py demo rotation-axes --spin 1 --rotation 1.5,1.5,0

Defaults for --hbar, --seed and --format come from .env (or .env.default).
"""
import os
import sys

SCRIPT_DIR = os.path.dirname(os.path.abspath(__file__))
sys.path.insert(0, SCRIPT_DIR)

from src.quantum_angle.cli import main  # noqa: E402

if __name__ == "__main__":
    if len(sys.argv) == 1:
        print(HELP_TEXT)
        sys.exit(0)
    sys.exit(main())
