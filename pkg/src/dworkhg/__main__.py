import sys

from dworkhg.cli.main import main

sys.exit(main())
