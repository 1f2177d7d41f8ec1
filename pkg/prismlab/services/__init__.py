# prismlab/services/__init__.py
from . import prism_complex
from . import orientation
from . import homology
from . import symmetry
from . import lp
from . import tverberg
