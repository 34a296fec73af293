import sys

from chebbound.cli import main

sys.exit(main())
