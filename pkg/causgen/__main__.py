import sys

from causgen.cli import main


sys.exit(main())
