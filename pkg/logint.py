#!/usr/bin/env python
"""logint 명령줄 진입점 (python logint.py <subcommand> ...)."""
import sys

from apps.cli import run

if __name__ == '__main__':
    sys.exit(run(sys.argv[1:]))
