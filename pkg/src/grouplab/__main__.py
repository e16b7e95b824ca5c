# -*- coding: utf-8 -*-
"""Allow `python -m grouplab`."""

import sys

from .cli import main

sys.exit(main())
