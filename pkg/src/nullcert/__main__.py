import sys

from nullcert.cli import main

sys.exit(main())
