from .geometry import *
from .instance import *
from .graphs import *
from .results import *
from .schemas import *
