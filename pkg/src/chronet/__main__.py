import sys

from chronet.cli import main

sys.exit(main())
