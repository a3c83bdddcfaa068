#!/usr/bin/env python3

# Copyright (C) 2026 tgmod Developers
# This program is free software under the terms of the GNU GPLv3 or later.

"""Load all modules at package import."""

from . import MPI
from . import carleson
from . import disc
from . import distances
from . import hardy
from . import ladder
from . import misc
from . import quadrature
from . import series
from . import symbols
from . import verify
from . import volterra
