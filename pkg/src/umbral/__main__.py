import sys

from umbral.cli import main

sys.exit(main())
