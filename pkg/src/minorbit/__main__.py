import sys

from minorbit.cli import main

sys.exit(main())
