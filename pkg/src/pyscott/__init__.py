from __future__ import (absolute_import, print_function, division)
import logging

# setup the logger
logger = logging.getLogger("pyscott")
logger.setLevel(logging.INFO)
logger.propagate = 0

ch = logging.StreamHandler()
# Add formatter
FORMAT = "%(name)s - %(levelname)s: %(message)s"
formatter = logging.Formatter(FORMAT)
ch.setFormatter(formatter)
logger.addHandler(ch)

from .config import Budget, RunConfig  # NOQA
from .presentation import Presentation, Word, TermTuple, \
    parse_presentation, load_presentation  # NOQA
from .backends import FreeGroupBackend, FreeAbelianBackend, \
    InfiniteDihedralBackend, FiniteCosetTableBackend, \
    RewritingSystemBackend, make_backend  # NOQA
from .morphisms import Endomorphism, endo_from_tuple  # NOQA
from .orbit import orbit_decide, orbit_semi_yes, orbit_semi_no  # NOQA
from .tsets import enumerate_T, enumerate_That, member_T_decide  # NOQA
from .scott import build_theta_prefix, emit_scott_sentence  # NOQA
