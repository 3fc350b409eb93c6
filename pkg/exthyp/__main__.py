# -*- coding: utf-8 -*-
import sys

from exthyp.cli import main

sys.exit(main())
