import sys

from hfnoise_cli.main import main

sys.exit(main())
