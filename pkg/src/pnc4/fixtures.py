"""Published reference data, transcribed verbatim.

Covers the twelve two-user (A, B) subspace groups, the 64 all-D1 groups and
the two 4x4x4x4 relay tables. Vectors are written as comma-separated
entries; tables are flattened in row-major ``(x_A, x_B, x_C, x_D)`` order,
one ``(x_A, x_B)`` slice per line. Printed data that contradicts itself is
left untouched here; the known misprints are listed in ``*_ERRATA`` and
applied when a helper is called with ``corrected=True``, so the verbatim
transcription stays diffable.
"""

from __future__ import annotations

import itertools
from typing import Dict, List, Tuple

import numpy as np

from .constellation import Gaussian

PAIR_PRINTED = (
    (  # 1
        "1+j,1+j,0,0",
        "-1-j,-1-j,0,0",
        "1-j,1-j,0,0",
        "-1+j,-1+j,0,0",
        "2j,2j,0,0",
        "-2j,-2j,0,0",
        "2,2,0,0",
        "-2,-2,0,0",
    ),
    (  # 2
        "1+j,-1-j,0,0",
        "-1-j,1+j,0,0",
        "-1+j,1-j,0,0",
        "1-j,-1+j,0,0",
        "2j,-2j,0,0",
        "-2j,2j,0,0",
        "2,-2,0,0",
        "-2,2,0,0",
    ),
    (  # 3
        "1+j,1-j,0,0",
        "-1-j,-1+j,0,0",
        "-1+j,1+j,0,0",
        "1-j,-1-j,0,0",
        "2j,2,0,0",
        "-2j,-2,0,0",
        "-2,2j,0,0",
        "2,-2j,0,0",
    ),
    (  # 4
        "1+j,-1+j,0,0",
        "-1-j,1-j,0,0",
        "-1+j,-1-j,0,0",
        "1-j,1+j,0,0",
        "2j,-2,0,0",
        "-2j,2,0,0",
        "2,2j,0,0",
        "-2,-2j,0,0",
    ),
    (  # 5
        "1+j,2j,0,0",
        "-1-j,-2j,0,0",
        "-1+j,2,0,0",
        "1-j,-2,0,0",
    ),
    (  # 6
        "1+j,-2j,0,0",
        "-1-j,2j,0,0",
        "-1+j,-2,0,0",
        "1-j,2,0,0",
    ),
    (  # 7
        "1+j,2,0,0",
        "-1-j,-2,0,0",
        "-1+j,2j,0,0",
        "1-j,-2j,0,0",
    ),
    (  # 8
        "1+j,-2,0,0",
        "-1-j,2,0,0",
        "-1+j,-2j,0,0",
        "1-j,2j,0,0",
    ),
    (  # 9
        "2j,1+j,0,0",
        "-2j,-1-j,0,0",
        "2,-1+j,0,0",
        "-2,1-j,0,0",
    ),
    (  # 10
        "-2j,1+j,0,0",
        "2j,-1-j,0,0",
        "-2,-1+j,0,0",
        "2,1-j,0,0",
    ),
    (  # 11
        "2,1+j,0,0",
        "-2,-1-j,0,0",
        "2j,-1+j,0,0",
        "-2j,1-j,0,0",
    ),
    (  # 12
        "-2,1+j,0,0",
        "2,-1-j,0,0",
        "-2j,-1+j,0,0",
        "2j,1-j,0,0",
    ),
)

APPENDIX_PRINTED = (
    (  # 1
        "1+j,1+j,1+j,1+j",
        "-1-j,-1-j,-1-j,-1-j",
        "-1+j,-1+j,-1+j,-1+j",
        "1-j,1-j,1-j,1-j",
        "2j,2j,2j,2j",
        "-2j,-2j,-2j,-2j",
        "2,2,2,2",
        "-2,-2,-2,-2",
    ),
    (  # 2
        "1+j,1+j,1+j,-1-j",
        "-1-j,-1-j,-1-j,1+j",
        "-1+j,-1+j,-1+j,1-j",
        "1-j,1-j,1-j,-1+j",
        "2j,2j,2j,-2j",
        "-2j,-2j,-2j,2j",
        "2,2,2,-2",
        "-2,-2,-2,2",
    ),
    (  # 3
        "1+j,1+j,1+j,1-j",
        "-1-j,-1-j,-1-j,-1+j",
        "-1+j,-1+j,-1+j,1+j",
        "1-j,1-j,1-j,-1-j",
        "2j,2j,2j,2",
        "-2j,-2j,-2j,-2",
        "2,2,2,-2j",
        "-2,-2,-2,2j",
    ),
    (  # 4
        "1+j,1+j,1+j,-1+j",
        "-1-j,-1-j,-1-j,1-j",
        "-1+j,-1+j,-1+j,-1-j",
        "1-j,1-j,1-j,1+j",
        "2j,2j,2j,-2",
        "-2j,-2j,-2j,2",
        "2,2,2,2j",
        "-2,-2,-2,-2j",
    ),
    (  # 5
        "1+j,1+j,-1-j,1+j",
        "-1-j,-1-j,1+j,-1+j",
        "-1+j,-1+j,1-j,-1+j",
        "1-j,1-j,-1+j,1-j",
        "2j,2j,-2j,2j",
        "-2j,-2j,2j,-2j",
        "2,2,-2,2",
        "-2,-2,2,-2",
    ),
    (  # 6
        "1+j,1+j,1-j,1+j",
        "-1-j,-1-j,-1+j,-1-j",
        "-1+j,-1+j,1+j,-1+j",
        "1-j,1-j,-1-j,1-j",
        "2j,2j,2,2j",
        "-2j,-2j,-2,-2j",
        "2,2,-2j,2",
        "-2,-2,2j,-2",
    ),
    (  # 7
        "1+j,1+j,-1+j,1+j",
        "-1-j,-1-j,1-j,-1-j",
        "-1+j,-1+j,-1-j,-1+j",
        "1-j,1-j,1+j,1-j",
        "2j,2j,-2,2j",
        "-2j,-2j,2,-2j",
        "2,2,2j,2",
        "-2,-2,-2j,-2",
    ),
    (  # 8
        "1+j,-1-j,1+j,1+j",
        "-1-j,1+j,-1-j,-1+j",
        "-1+j,1-j,-1+j,-1+j",
        "1-j,-1+j,1-j,1-j",
        "2j,-2j,2j,2j",
        "-2j,2j,-2j,-2j",
        "2,-2,2,2",
        "-2,2,-2,-2",
    ),
    (  # 9
        "1+j,1-j,1+j,1+j",
        "-1-j,-1+j,-1-j,-1-j",
        "-1+j,1+j,-1+j,-1+j",
        "1-j,-1-j,1-j,1-j",
        "2j,2,2j,2j",
        "-2j,-2,-2j,-2j",
        "2,-2j,2,2",
        "-2,2j,-2,-2",
    ),
    (  # 10
        "1+j,-1+j,1+j,1+j",
        "-1-j,1-j,-1-j,-1-j",
        "-1+j,-1-j,-1+j,-1+j",
        "1-j,1+j,1-j,1-j",
        "2j,-2,2j,2j",
        "-2j,2,-2j,-2j",
        "2,2j,2,2",
        "-2,-2j,-2,-2",
    ),
    (  # 11
        "-1-j,1+j,1+j,1+j",
        "1+j,-1-j,-1-j,-1+j",
        "1-j,-1+j,-1+j,-1+j",
        "-1+j,1-j,1-j,1-j",
        "-2j,2j,2j,2j",
        "2j,-2j,-2j,-2j",
        "-2,2,2,2",
        "2,-2,-2,-2",
    ),
    (  # 12
        "1-j,1+j,1+j,1+j",
        "-1+j,-1-j,-1-j,-1-j",
        "1+j,-1+j,-1+j,-1+j",
        "-1-j,1-j,1-j,1-j",
        "2,2j,2j,2j",
        "-2,-2j,-2j,-2j",
        "-2j,2,2,2",
        "2j,-2,-2,-2",
    ),
    (  # 13
        "-1+j,1+j,1+j,1+j",
        "1-j,-1-j,-1-j,-1-j",
        "-1-j,-1+j,-1+j,-1+j",
        "1+j,1-j,1-j,1-j",
        "-2,2j,2j,2j",
        "2,-2j,-2j,-2j",
        "2j,2,2,2",
        "-2j,-2,-2,-2",
    ),
    (  # 14
        "1+j,1+j,-1-j,-1-j",
        "-1-j,-1-j,1+j,1+j",
        "-1+j,-1+j,1-j,1-j",
        "1-j,1-j,-1+j,-1+j",
        "2j,2j,-2j,-2j",
        "-2j,-2j,2j,2j",
        "2,2,-2,-2",
        "-2,-2,2,2",
    ),
    (  # 15
        "1+j,1+j,-1-j,1-j",
        "-1-j,-1-j,1+j,-1+j",
        "-1+j,-1+j,1-j,1+j",
        "1-j,1-j,-1+j,-1-j",
        "2j,2j,-2j,2",
        "-2j,-2j,2j,-2",
        "2,2,-2,-2j",
        "-2,-2,2,2j",
    ),
    (  # 16
        "1+j,1+j,-1-j,-1+j",
        "-1-j,-1-j,1+j,1-j",
        "-1+j,-1+j,1-j,-1-j",
        "1-j,1-j,-1+j,1+j",
        "2j,2j,-2j,-2",
        "-2j,-2j,2j,2",
        "2,2,-2,2j",
        "-2,-2,2,-2j",
    ),
    (  # 17
        "1+j,1+j,1-j,-1-j",
        "-1-j,-1-j,-1+j,1+j",
        "-1+j,-1+j,1+j,1-j",
        "1-j,1-j,-1-j,-1+j",
        "2j,2j,2,-2j",
        "-2j,-2j,-2,2j",
        "2,2,-2j,-2",
        "-2,-2,2j,2",
    ),
    (  # 18
        "1+j,1+j,1-j,1-j",
        "-1-j,-1-j,-1+j,-1+j",
        "-1+j,-1+j,1+j,1+j",
        "1-j,1-j,-1-j,-1-j",
        "2j,2j,2,2",
        "-2j,-2j,-2,-2",
        "2,2,-2j,-2j",
        "-2,-2,2j,2j",
    ),
    (  # 19
        "1+j,1+j,1-j,-1+j",
        "-1-j,-1-j,-1+j,1-j",
        "-1+j,-1+j,1+j,-1-j",
        "1-j,1-j,-1-j,1+j",
        "2j,2j,2,-2",
        "-2j,-2j,-2,2",
        "2,2,-2j,2j",
        "-2,-2,2j,-2j",
    ),
    (  # 20
        "1+j,1+j,-1+j,-1-j",
        "-1-j,-1-j,1-j,1+j",
        "-1+j,-1+j,-1-j,1-j",
        "1-j,1-j,1+j,-1+j",
        "2j,2j,-2,-2j",
        "-2j,-2j,2,2j",
        "2,2,2j,-2",
        "-2,-2,-2j,2",
    ),
    (  # 21
        "1+j,1+j,-1+j,1-j",
        "-1-j,-1-j,1-j,-1+j",
        "-1+j,-1+j,-1-j,1+j",
        "1-j,1-j,1+j,-1-j",
        "2j,2j,-2,2",
        "-2j,-2j,2,-2",
        "2,2,2j,-2j",
        "-2,-2,-2j,2j",
    ),
    (  # 22
        "1+j,1+j,-1+j,-1+j",
        "-1-j,-1-j,1-j,1-j",
        "-1+j,-1+j,-1-j,-1-j",
        "1-j,1-j,1+j,1+j",
        "2j,2j,-2,-2",
        "-2j,-2j,2,2",
        "2,2,2j,2j",
        "-2,-2,-2j,-2j",
    ),
    (  # 23
        "1+j,-1-j,1+j,-1-j",
        "-1-j,1+j,-1-j,1+j",
        "-1+j,1-j,-1+j,1-j",
        "1-j,-1+j,1-j,-1+j",
        "2j,-2j,2j,-2j",
        "-2j,2j,-2j,2j",
        "2,-2,2,-2",
        "-2,2,-2,2",
    ),
    (  # 24
        "1+j,-1-j,1+j,1-j",
        "-1-j,1+j,-1-j,-1+j",
        "-1+j,1-j,-1+j,1+j",
        "1-j,-1+j,1-j,-1-j",
        "2j,-2j,2j,2",
        "-2j,2j,-2j,-2",
        "2,-2,2,-2j",
        "-2,2,-2,2j",
    ),
    (  # 25
        "1+j,-1-j,1+j,-1+j",
        "-1-j,1+j,-1-j,1-j",
        "-1+j,1-j,-1+j,-1-j",
        "1-j,-1+j,1-j,1+j",
        "2j,-2j,2j,-2",
        "-2j,2j,-2j,2",
        "2,-2,2,2j",
        "-2,2,-2,-2j",
    ),
    (  # 26
        "1+j,1-j,1+j,-1-j",
        "-1-j,-1+j,-1-j,1+j",
        "-1+j,1+j,-1+j,1-j",
        "1-j,-1-j,1-j,-1+j",
        "2j,2,2j,-2j",
        "-2j,-2,-2j,2j",
        "2,-2j,2,-2",
        "-2,2j,-2,2",
    ),
    (  # 27
        "1+j,1-j,1+j,1-j",
        "-1-j,-1+j,-1-j,-1+j",
        "-1+j,1+j,-1+j,1+j",
        "1-j,-1-j,1-j,-1-j",
        "2j,2,2j,2",
        "-2j,-2,-2j,-2",
        "2,-2j,2,-2j",
        "-2,2j,-2,2j",
    ),
    (  # 28
        "1+j,1-j,1+j,-1+j",
        "-1-j,-1+j,-1-j,1-j",
        "-1+j,1+j,-1+j,-1-j",
        "1-j,-1-j,1-j,1+j",
        "2j,2,2j,-2",
        "-2j,-2,-2j,2",
        "2,-2j,2,2j",
        "-2,2j,-2,-2j",
    ),
    (  # 29
        "1+j,-1+j,1+j,-1-j",
        "-1-j,1-j,-1-j,1+j",
        "-1+j,-1-j,-1+j,1-j",
        "1-j,1+j,1-j,-1+j",
        "2j,-2,2j,-2j",
        "-2j,2,-2j,2j",
        "2,2j,2,-2",
        "-2,-2j,-2,2",
    ),
    (  # 30
        "1+j,-1+j,1+j,1-j",
        "-1-j,1-j,-1-j,-1+j",
        "-1+j,-1-j,-1+j,1+j",
        "1-j,1+j,1-j,-1-j",
        "2j,-2,2j,2",
        "-2j,2,-2j,-2",
        "2,2j,2,-2j",
        "-2,-2j,-2,2j",
    ),
    (  # 31
        "1+j,-1+j,1+j,-1+j",
        "-1-j,1-j,-1-j,1-j",
        "-1+j,-1-j,-1+j,-1-j",
        "1-j,1+j,1-j,1+j",
        "2j,-2,2j,-2",
        "-2j,2,-2j,2",
        "2,2j,2,2j",
        "-2,-2j,-2,-2j",
    ),
    (  # 32
        "1+j,-1-j,-1-j,1+j",
        "-1-j,1+j,1+j,-1-j",
        "-1+j,1-j,1-j,-1+j",
        "1-j,-1+j,-1+j,1-j",
        "2j,-2j,-2j,2j",
        "-2j,2j,2j,-2j",
        "2,-2,-2,2",
        "-2,2,2,-2",
    ),
    (  # 33
        "1+j,-1-j,1-j,1+j",
        "-1-j,1+j,-1+j,-1-j",
        "-1+j,1-j,1+j,-1+j",
        "1-j,-1+j,-1-j,1-j",
        "2j,-2j,2,2j",
        "-2j,2j,-2,-2j",
        "2,-2,-2j,2",
        "-2,2,2j,-2",
    ),
    (  # 34
        "1+j,-1-j,-1+j,1+j",
        "-1-j,1+j,1-j,-1-j",
        "-1+j,1-j,-1-j,-1+j",
        "1-j,-1+j,1+j,1-j",
        "2j,-2j,-2,2j",
        "-2j,2j,2,-2j",
        "2,-2,2j,2",
        "-2,2,-2j,-2",
    ),
    (  # 35
        "1+j,1-j,-1-j,1+j",
        "-1-j,-1+j,1+j,-1-j",
        "-1+j,1+j,1-j,-1+j",
        "1-j,-1-j,-1+j,1-j",
        "2j,2,-2j,2j",
        "-2j,-2,2j,-2j",
        "2,-2j,-2,2",
        "-2,2j,2,-2",
    ),
    (  # 36
        "1+j,1-j,1-j,1+j",
        "-1-j,-1+j,-1+j,-1-j",
        "-1+j,1+j,1+j,-1+j",
        "1-j,-1-j,-1-j,1-j",
        "2j,2,2,2j",
        "-2j,-2,-2,-2j",
        "2,-2j,-2j,2",
        "-2,2j,2j,-2",
    ),
    (  # 37
        "1+j,1-j,-1+j,1+j",
        "-1-j,-1+j,1-j,-1-j",
        "-1+j,1+j,-1-j,-1+j",
        "1-j,-1-j,1+j,1-j",
        "2j,2,-2,2j",
        "-2j,-2,2,-2j",
        "2,-2j,2j,2",
        "-2,2j,-2j,-2",
    ),
    (  # 38
        "1+j,-1+j,-1-j,1+j",
        "-1-j,1-j,1+j,-1-j",
        "-1+j,-1-j,1-j,-1+j",
        "1-j,1+j,-1+j,1-j",
        "2j,-2,-2j,2j",
        "-2j,2,2j,-2j",
        "2,2j,-2,2",
        "-2,-2j,2,-2",
    ),
    (  # 39
        "1+j,-1+j,1-j,1+j",
        "-1-j,1-j,-1+j,-1-j",
        "-1+j,-1-j,1+j,-1+j",
        "1-j,1+j,-1-j,1-j",
        "2j,-2,2,2j",
        "-2j,2,-2,-2j",
        "2,2j,-2j,2",
        "-2,-2j,2j,-2",
    ),
    (  # 40
        "1+j,-1+j,-1+j,1+j",
        "-1-j,1-j,1-j,-1-j",
        "-1+j,-1-j,-1-j,-1+j",
        "1-j,1+j,1+j,1-j",
        "2j,-2,-2,2j",
        "-2j,2,2,-2j",
        "2,2j,2j,2",
        "-2,-2j,-2j,-2",
    ),
    (  # 41
        "-1-j,1+j,1-j,1+j",
        "1+j,-1-j,-1+j,-1-j",
        "1-j,-1+j,1+j,-1+j",
        "-1+j,1-j,-1-j,1-j",
        "-2j,2j,2,2j",
        "2j,-2j,-2,-2j",
        "-2,2,-2j,2",
        "2,-2,2j,-2",
    ),
    (  # 42
        "-1-j,1+j,-1+j,1+j",
        "1+j,-1-j,1-j,-1-j",
        "1-j,-1+j,-1-j,-1+j",
        "-1+j,1-j,1+j,1-j",
        "-2j,2j,-2,2j",
        "2j,-2j,2,-2j",
        "-2,2,2j,2",
        "2,-2,-2j,-2",
    ),
    (  # 43
        "1-j,1+j,-1-j,1+j",
        "-1+j,-1-j,1+j,-1-j",
        "1+j,-1+j,1-j,-1+j",
        "-1-j,1-j,-1+j,1-j",
        "2,2j,-2j,2j",
        "-2,-2j,2j,-2j",
        "-2j,2,-2,2",
        "2j,-2,2,-2",
    ),
    (  # 44
        "1-j,1+j,-1+j,1+j",
        "-1+j,-1-j,1-j,-1-j",
        "1+j,-1+j,-1-j,-1+j",
        "-1-j,1-j,1+j,1-j",
        "2,2j,-2,2j",
        "-2,-2j,2,-2j",
        "-2j,2,2j,2",
        "2j,-2,-2j,-2",
    ),
    (  # 45
        "-1+j,1+j,-1-j,1+j",
        "1-j,-1-j,1+j,-1-j",
        "-1-j,-1+j,1-j,-1+j",
        "1+j,1-j,-1+j,1-j",
        "-2,2j,-2j,2j",
        "2,-2j,2j,-2j",
        "2j,2,-2,2",
        "-2j,-2,2,-2",
    ),
    (  # 46
        "-1+j,1+j,1-j,1+j",
        "1-j,-1-j,-1+j,-1-j",
        "-1-j,-1+j,1+j,-1+j",
        "1+j,1-j,-1-j,1-j",
        "-2,2j,2,2j",
        "2,-2j,-2,-2j",
        "2j,2,-2j,2",
        "-2j,-2,2j,-2",
    ),
    (  # 47
        "-1-j,1+j,1+j,1-j",
        "1+j,-1-j,-1-j,-1+j",
        "1-j,-1+j,-1+j,1+j",
        "-1+j,1-j,1-j,-1-j",
        "-2j,2j,2j,2",
        "2j,-2j,-2j,-2",
        "-2,2,2,-2j",
        "2,-2,-2,2j",
    ),
    (  # 48
        "-1-j,1+j,1+j,-1+j",
        "1+j,-1-j,-1-j,1-j",
        "1-j,-1+j,-1+j,-1-j",
        "-1+j,1-j,1-j,1+j",
        "-2j,2j,2j,-2",
        "2j,-2j,-2j,2",
        "-2,2,2,2j",
        "2,-2,-2,-2j",
    ),
    (  # 49
        "1-j,1+j,1+j,-1-j",
        "-1+j,-1-j,-1-j,1+j",
        "1+j,-1+j,-1+j,1-j",
        "-1-j,1-j,1-j,-1+j",
        "2,2j,2j,-2j",
        "-2,-2j,-2j,2j",
        "-2j,2,2,-2",
        "2j,-2,-2,2",
    ),
    (  # 50
        "1-j,1+j,1+j,-1+j",
        "-1+j,-1-j,-1-j,1-j",
        "1+j,-1+j,-1+j,-1-j",
        "-1-j,1-j,1-j,1+j",
        "2,2j,2j,-2",
        "-2,-2j,-2j,2",
        "-2j,2,2,2j",
        "2j,-2,-2,-2j",
    ),
    (  # 51
        "-1+j,1+j,1+j,-1-j",
        "1-j,-1-j,-1-j,1+j",
        "-1-j,-1+j,-1+j,1-j",
        "1+j,1-j,1-j,-1+j",
        "-2,2j,2j,-2j",
        "2,-2j,-2j,2j",
        "2j,2,2,-2",
        "-2j,-2,-2,2",
    ),
    (  # 52
        "-1+j,1+j,1+j,1-j",
        "1-j,-1-j,-1-j,-1+j",
        "-1-j,-1+j,-1+j,1+j",
        "1+j,1-j,1-j,-1-j",
        "-2,2j,2j,2",
        "2,-2j,-2j,-2",
        "2j,2,2,-2j",
        "-2j,-2,-2,2j",
    ),
    (  # 53
        "-1-j,1-j,1+j,1+j",
        "1+j,-1+j,-1-j,-1-j",
        "1-j,1+j,-1+j,-1+j",
        "-1+j,-1-j,1-j,1-j",
        "-2j,2,2j,2j",
        "2j,-2,-2j,-2j",
        "-2,-2j,2,2",
        "2,2j,-2,-2",
    ),
    (  # 54
        "-1-j,-1+j,1+j,1+j",
        "1+j,1-j,-1-j,-1-j",
        "1-j,-1-j,-1+j,-1+j",
        "-1+j,1+j,1-j,1-j",
        "-2j,-2,2j,2j",
        "2j,2,-2j,-2j",
        "-2,2j,2,2",
        "2,-2j,-2,-2",
    ),
    (  # 55
        "1-j,-1-j,1+j,1+j",
        "-1+j,1+j,-1-j,-1-j",
        "1+j,1-j,-1+j,-1+j",
        "-1-j,-1+j,1-j,1-j",
        "2,-2j,2j,2j",
        "-2,2j,-2j,-2j",
        "-2j,-2,2,2",
        "2j,2,-2,-2",
    ),
    (  # 56
        "1-j,-1+j,1+j,1+j",
        "-1+j,1-j,-1-j,-1-j",
        "1+j,-1-j,-1+j,-1+j",
        "-1-j,1+j,1-j,1-j",
        "2,-2,2j,2j",
        "-2,2,-2j,-2j",
        "-2j,2j,2,2",
        "2j,-2j,-2,-2",
    ),
    (  # 57
        "-1+j,-1-j,1+j,1+j",
        "1-j,1+j,-1-j,-1-j",
        "-1-j,1-j,-1+j,-1+j",
        "1+j,-1+j,1-j,1-j",
        "-2,-2j,2j,2j",
        "2,2j,-2j,-2j",
        "2j,-2,2,2",
        "-2j,2,-2,-2",
    ),
    (  # 58
        "-1+j,1-j,1+j,1+j",
        "1-j,-1+j,-1-j,-1-j",
        "-1-j,1+j,-1+j,-1+j",
        "1+j,-1-j,1-j,1-j",
        "-2,2,2j,2j",
        "2,-2,-2j,-2j",
        "2j,-2j,2,2",
        "-2j,2j,-2,-2",
    ),
    (  # 59
        "1+j,-1-j,1-j,-1+j",
        "-1-j,1+j,-1+j,1-j",
        "-1+j,1-j,1+j,-1-j",
        "1-j,-1+j,-1-j,1+j",
        "2j,-2j,2,-2",
        "-2j,2j,-2,2",
        "2,-2,-2j,2j",
        "-2,2,2j,-2j",
    ),
    (  # 60
        "1+j,-1-j,-1+j,1-j",
        "-1-j,1+j,1-j,-1+j",
        "-1+j,1-j,-1-j,1+j",
        "1-j,-1+j,1+j,-1-j",
        "2j,-2j,-2,2",
        "-2j,2j,2,-2",
        "2,-2,2j,-2j",
        "-2,2,-2j,2j",
    ),
    (  # 61
        "1+j,1-j,-1-j,-1+j",
        "-1-j,-1+j,1+j,1-j",
        "-1+j,1+j,1-j,-1-j",
        "1-j,-1-j,-1+j,1+j",
        "2j,2,-2j,-2",
        "-2j,-2,2j,2",
        "2,-2j,-2,2j",
        "-2,2j,2,-2j",
    ),
    (  # 62
        "1+j,1-j,-1+j,-1-j",
        "-1-j,-1+j,1-j,1+j",
        "-1+j,1+j,-1-j,1-j",
        "1-j,-1-j,1+j,-1+j",
        "2j,2,-2,-2j",
        "-2j,-2,2,2j",
        "2,-2j,2j,-2",
        "-2,2j,-2j,2",
    ),
    (  # 63
        "1+j,-1+j,-1-j,1-j",
        "-1-j,1-j,1+j,-1+j",
        "-1+j,-1-j,1-j,1+j",
        "1-j,1+j,-1+j,-1-j",
        "2j,-2,-2j,2",
        "-2j,2,2j,-2",
        "2,2j,-2,-2j",
        "-2,2,2j,-2j",
    ),
    (  # 64
        "1+j,-1+j,1-j,-1-j",
        "-1-j,1-j,-1+j,1+j",
        "-1+j,-1-j,1+j,1-j",
        "1-j,1+j,-1-j,-1+j",
        "2j,-2,2,-2j",
        "-2j,2,-2,2j",
        "2,2j,-2j,-2",
        "-2,2,-2j,2j",
    ),
)

TABLE1_PRINTED = (
    16, 17, 18, 19, 30, 29, 32, 31, 47, 48, 45, 46, 64, 63, 62, 61,  # x_A=0 x_B=0
    25, 26, 27, 28,  9, 10, 20, 21, 11, 12, 60, 59, 52, 51, 50, 49,  # x_A=0 x_B=1
    37, 38, 39, 40, 13, 14, 57, 58, 15,  2,  1, 22, 36,  4,  3, 35,  # x_A=0 x_B=2
    53, 54, 55, 56, 42, 41, 44, 43, 33,  6,  5, 24, 24,  8,  7, 33,  # x_A=0 x_B=3
    20, 21, 10,  9, 26, 25, 28, 27, 51, 52, 49, 50, 60, 59, 12, 11,  # x_A=1 x_B=0
    29, 30, 31, 32, 17, 16, 19, 18, 63, 64, 61, 62, 48, 47, 46, 45,  # x_A=1 x_B=1
    41, 42, 43, 44, 54, 53, 56, 55, 23,  7,  8, 24, 34,  5,  6, 33,  # x_A=1 x_B=2
    57, 58, 14, 13, 38, 37, 40, 39, 35,  3,  4, 36, 22,  1,  2, 15,  # x_A=1 x_B=3
     1, 22, 15,  2,  3, 36, 35,  4, 39, 40, 37, 38, 58, 57, 13, 14,  # x_A=2 x_B=0
     5, 33, 34,  6,  7, 24, 23,  8, 55, 56, 53, 54, 44, 43, 42, 41,  # x_A=2 x_B=1
    45, 46, 47, 48, 62, 61, 64, 63, 18, 19, 16, 17, 32, 31, 30, 29,  # x_A=2 x_B=2
    59, 60, 11, 12, 50, 49, 52, 51, 27, 28, 25, 26, 21, 20,  9, 10,  # x_A=2 x_B=3
     8, 23, 24,  7,  6, 34, 33,  5, 43, 44, 41, 42, 56, 55, 54, 53,  # x_A=3 x_B=0
     4, 35, 36,  3,  2, 15, 22,  1, 14, 13, 58, 57, 40, 39, 38, 37,  # x_A=3 x_B=1
    49, 50, 51, 52, 12, 11, 59, 60, 10,  9, 21, 20, 28, 27, 26, 25,  # x_A=3 x_B=2
    61, 62, 63, 64, 46, 45, 48, 47, 31, 32, 29, 30, 19, 18, 17, 16,  # x_A=3 x_B=3
)

TABLE2_PRINTED = (
     1,  2,  3,  4,  5,  6,  7,  8,  9, 10, 11, 12, 13, 14, 15, 16,  # x_A=0 x_B=0
    22, 21, 24, 23, 18, 17, 20, 19, 30, 29, 32, 31, 26, 25, 28, 27,  # x_A=0 x_B=1
    43, 44, 41, 42, 47, 48, 45, 46, 35, 36, 33, 34, 39, 40, 37, 38,  # x_A=0 x_B=2
    64, 63, 62, 61, 60, 59, 58, 57, 56, 55, 54, 53, 52, 51, 50, 49,  # x_A=0 x_B=3
    17, 18, 19, 20, 21, 22, 23, 24, 25, 26, 27, 28, 29, 30, 31, 32,  # x_A=1 x_B=0
    38, 37, 40, 39, 34, 33, 36, 35, 46, 45, 48, 47, 42, 41, 44, 43,  # x_A=1 x_B=1
    59, 60, 57, 58, 63, 64, 61, 62, 51, 52, 49, 50, 55, 56, 53, 54,  # x_A=1 x_B=2
    48, 47, 46, 45, 44, 43, 42, 41, 40, 39, 38, 37, 36, 35, 34, 33,  # x_A=1 x_B=3
    33, 34, 35, 36, 37, 38, 39, 40, 41, 42, 43, 44, 45, 46, 47, 48,  # x_A=2 x_B=0
    54, 53, 56, 55, 50, 49, 52, 51, 62, 61, 64, 63, 58, 57, 60, 59,  # x_A=2 x_B=1
    11, 12,  9, 10, 15, 16, 13, 14,  3,  4,  1,  2,  7,  8,  5,  6,  # x_A=2 x_B=2
    32, 31, 30, 29, 28, 27, 26, 25, 24, 23, 22, 21, 20, 19, 18, 17,  # x_A=2 x_B=3
    49, 50, 51, 52, 53, 54, 55, 56, 57, 58, 59, 60, 61, 62, 63, 64,  # x_A=3 x_B=0
     6,  5,  8,  7,  2,  1,  4,  3, 14, 13, 16, 15, 10,  9, 12, 11,  # x_A=3 x_B=1
    27, 28, 25, 26, 31, 32, 29, 30, 19, 20, 17, 18, 23, 24, 21, 22,  # x_A=3 x_B=2
    16, 15, 14, 13, 12, 11, 10,  9,  8,  7,  6,  5,  4,  3,  2,  1,  # x_A=3 x_B=3
)


# Misprinted orbit members: (item number, printed vector, corrected vector).
# Each printed vector is not a complex multiple of its group's leading
# vector; the correction is the unique orbit member missing from the group.
PAIR_ERRATA = (
    (5, "-1+j,2,0,0", "-1+j,-2,0,0"),
    (5, "1-j,-2,0,0", "1-j,2,0,0"),
    (6, "-1+j,-2,0,0", "-1+j,2,0,0"),
    (6, "1-j,2,0,0", "1-j,-2,0,0"),
    (9, "2,-1+j,0,0", "-2,-1+j,0,0"),
    (9, "-2,1-j,0,0", "2,1-j,0,0"),
    (10, "-2,-1+j,0,0", "2,-1+j,0,0"),
    (10, "2,1-j,0,0", "-2,1-j,0,0"),
)

APPENDIX_ERRATA = (
    (5, "-1-j,-1-j,1+j,-1+j", "-1-j,-1-j,1+j,-1-j"),
    (8, "-1-j,1+j,-1-j,-1+j", "-1-j,1+j,-1-j,-1-j"),
    (11, "1+j,-1-j,-1-j,-1+j", "1+j,-1-j,-1-j,-1-j"),
    (63, "-2,2,2j,-2j", "-2,-2j,2,2j"),
    (64, "-2,2,-2j,2j", "-2,-2j,2j,2"),
)

# (x_A, x_B, x_C, x_D) -> corrected label. Both cells sit in the x_A=0,
# x_B=3 slice; the printed values repeat L24 and L33 inside one cube.
TABLE1_ERRATA = (
    ((0, 3, 2, 3), 24, 34),
    ((0, 3, 3, 3), 33, 23),
)

# In the x_B=1 block the x_A=1 and x_A=3 cubes are printed in each other's
# place; swapping them back gives the XOR hyper-cube
# label(a, b, c, d) = (a ^ b, c ^ b, d ^ b) read as a base-4 number.
TABLE2_SWAPPED_CUBES = (1, (1, 3))


_ENTRY = {
    "0": (0, 0), "1+j": (1, 1), "1-j": (1, -1), "-1+j": (-1, 1), "-1-j": (-1, -1),
    "2": (2, 0), "-2": (-2, 0), "2j": (0, 2), "-2j": (0, -2),
}
_ENTRY_STR = {v: k for k, v in _ENTRY.items()}


def parse_vector(text: str) -> Tuple[Gaussian, ...]:
    return tuple(_ENTRY[e.strip()] for e in text.split(","))


def format_vector(v) -> str:
    return ",".join(_ENTRY_STR[tuple(e)] for e in v)


def _groups(printed, errata=None) -> List[frozenset]:
    fixes: Dict[Tuple[int, str], str] = {}
    for item, bad, good in errata or ():
        fixes[(item, bad)] = good
    out = []
    for n, group in enumerate(printed, start=1):
        out.append(frozenset(parse_vector(fixes.get((n, v), v)) for v in group))
    return out


def pair_groups(corrected: bool = True) -> List[frozenset]:
    return _groups(PAIR_PRINTED, PAIR_ERRATA if corrected else None)


def appendix_groups(corrected: bool = True) -> List[frozenset]:
    return _groups(APPENDIX_PRINTED, APPENDIX_ERRATA if corrected else None)


def _as_array(flat) -> np.ndarray:
    return np.array(flat, dtype=np.int64).reshape(4, 4, 4, 4)


def table1_labels(corrected: bool = True) -> np.ndarray:
    arr = _as_array(TABLE1_PRINTED)
    if corrected:
        for cell, printed, fixed in TABLE1_ERRATA:
            assert arr[cell] == printed
            arr[cell] = fixed
    return arr


def table2_labels(corrected: bool = True) -> np.ndarray:
    arr = _as_array(TABLE2_PRINTED)
    if corrected:
        b, (a1, a2) = TABLE2_SWAPPED_CUBES
        arr[[a1, a2], b] = arr[[a2, a1], b]
    return arr


def example1_pairs() -> List[Tuple[Tuple[int, ...], Tuple[int, ...]]]:
    """The sixteen tuple pairs spelled out for the worked example.

    Symbols are given as constellation indices (1, j, -1, -j) -> (0, 1, 2, 3).
    """
    pairs = []
    # x - x' = (-1-j, 1+j, 1+j, 1-j); each coordinate has two realisations.
    a = ((2, 1), (3, 0))
    bc = ((0, 3), (1, 2))
    d = ((0, 1), (3, 2))
    for pa, pb, pc, pd in itertools.product(a, bc, bc, d):
        pairs.append(((pa[0], pb[0], pc[0], pd[0]), (pa[1], pb[1], pc[1], pd[1])))
    return pairs


EXAMPLE1_VECTOR = "-1-j,1+j,1+j,1-j"
