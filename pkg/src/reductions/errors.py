from utils.exceptions import GeoError, PreconditionError

__all__ = ("NotCubicGraph", "MissingEdge", "InvalidDominatingSet", "ConstructionError", "DimacsError")


class NotCubicGraph(PreconditionError):
    def __init__(self, vertex: int, degree: int):
        super().__init__(f"Graph is not cubic: vertex {vertex} has degree {degree}.")


class MissingEdge(PreconditionError):
    def __init__(self, u: int, v: int):
        super().__init__(f"Edge ({u}, {v}) is not in the graph.")


class InvalidDominatingSet(PreconditionError):
    def __init__(self, vertex: int):
        super().__init__(f"Vertex set is not dominating: vertex {vertex} has no selected closed neighbour.")


class ConstructionError(GeoError):
    pass


class DimacsError(GeoError):
    def __init__(self, line: int, reason: str):
        self.line = line
        super().__init__(f"DIMACS line {line}: {reason}")
