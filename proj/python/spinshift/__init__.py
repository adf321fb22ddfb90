# Copyright 2026 The spinshift authors
# SPDX-License-Identifier: Apache-2.0
"""Temperature-dependent transition frequencies of spin defects.

Thin python layer over the C++ core: phonon thermal averaging, the
brute-force occupation oracle, spin-Hamiltonian level structure, and
hyperfine/EFG/quadrupole tensor evaluation on density grids.
"""

from ._core import *  # noqa: F401,F403
from ._core import __version__  # noqa: F401
