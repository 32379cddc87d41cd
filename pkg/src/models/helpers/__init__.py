from .validators import *
