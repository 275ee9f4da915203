import sys

from himena_mdim.cli import main

sys.exit(main())
