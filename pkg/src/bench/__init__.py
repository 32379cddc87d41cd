from .harness import *
