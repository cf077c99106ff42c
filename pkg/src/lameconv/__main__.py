import sys

from lameconv.cli import main

sys.exit(main())
