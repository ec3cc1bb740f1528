import sys

from samba_gqw.cli.main import main

sys.exit(main())
