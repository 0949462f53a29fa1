import sys

from tour_split.main import main

if __name__ == "__main__":
    sys.exit(main())
