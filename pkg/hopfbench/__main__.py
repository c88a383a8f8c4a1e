import sys

from hopfbench.cli import main

if __name__ == "__main__":
    sys.exit(main())
