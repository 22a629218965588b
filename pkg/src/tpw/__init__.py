"""tpw: a workbench for transpension-style shape quantification.

Subpackages: catkit (base categories), multkit (multipliers and their
classifier), pshkit (finite presheaves, Kan extensions, theorem checks),
modekit (mode-theory expressions), tcalc (the shape-variable calculus).
"""

__version__ = "0.1.0"
