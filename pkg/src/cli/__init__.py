from .commands import *
from .group import *
