import sys

from hyperlie.cli import main

sys.exit(main())
