"""python -m qtcatalan"""
import sys

from qtcatalan.verify.cli import main

sys.exit(main())
