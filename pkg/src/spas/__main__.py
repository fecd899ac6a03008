import sys

from spas.cli import main

sys.exit(main())
