import sys

from dominatorColoring.cli import main

sys.exit(main())
