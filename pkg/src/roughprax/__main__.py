import sys

from roughprax.cli import main

sys.exit(main())
