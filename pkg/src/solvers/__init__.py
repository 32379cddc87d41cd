from .local_search import *
from .exact import *
