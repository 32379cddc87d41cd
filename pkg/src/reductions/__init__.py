from .errors import *
from .graphs import *
from .special3ds import *
from .embeddings import *
from .coloring import *
from .subdivision import *
