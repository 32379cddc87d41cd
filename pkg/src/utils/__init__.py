from .default import *
from .converters import *
from .formats import *
from .exceptions import *
from .bits import *
from .logs import *
