import sys

from scx.cli import main

sys.exit(main())
