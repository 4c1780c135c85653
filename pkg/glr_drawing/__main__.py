import sys

from glr_drawing.cli import main

sys.exit(main())
