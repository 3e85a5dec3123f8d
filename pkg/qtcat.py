#!/usr/bin/env python3
"""
qtcat - command line entry point

Usage:
    ./qtcat.py pc --m 3 --n 2
    ./qtcat.py compare --m 1,2 --n 1,2,3,4 --which pc,wc,dc
    ./qtcat.py check transfactor --n 5 --seed 7
"""
import sys
from pathlib import Path

sys.path.insert(0, str(Path(__file__).parent))

from qtcatalan.verify.cli import main  # noqa: E402

if __name__ == '__main__':
    sys.exit(main())
