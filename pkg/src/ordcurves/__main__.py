import sys

from ordcurves.cli import main

sys.exit(main())
