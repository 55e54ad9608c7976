import sys

from gamma2.cli import main

sys.exit(main())
