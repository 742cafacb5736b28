#!/usr/bin/env python
"""
Entry point for the command-line toolkit.
Run directly with: python run.py <command> ...  (python run.py --help for the list)
"""
import sys

from app.main import main

if __name__ == "__main__":
    sys.exit(main())
