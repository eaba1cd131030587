import sys

from qgimli.cli import main

sys.exit(main())
