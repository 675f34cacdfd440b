import sys

from tropcommute.cli import main

sys.exit(main())
