from .geometry import *
from .incidence import *
from .decorators import *
from .io import *
