class EmbeddingInputError(ValueError):
    """
    Base class of every input error raised by p3embed.
    "No embedding exists" is never an error, it is returned as a value.
    """
    pass


class DegenerateInputError(EmbeddingInputError):
    pass


class DegenerateTriangleError(DegenerateInputError):
    pass


class CoordinateBoundError(EmbeddingInputError):
    pass


class DuplicatePointError(EmbeddingInputError):
    pass


class InputSizeError(EmbeddingInputError):
    pass


class GraphError(EmbeddingInputError):
    pass


class MalformedGraphError(GraphError):
    pass


class DisconnectedGraphError(MalformedGraphError):
    pass


class NotTriangulatedError(GraphError):
    pass


class BadOuterFaceError(GraphError):
    pass


class InstanceFormatError(EmbeddingInputError):
    def __init__(self, message, lineno=None):
        if lineno is not None:
            message = f'line {lineno}: {message}'
        super().__init__(message)
        self.lineno = lineno


class BenchFormatError(EmbeddingInputError):
    pass


class GeneratorError(EmbeddingInputError):
    """
    Raised when the requested instance cannot be generated, e.g. the points do not fit under the
    coordinate bound.
    """
    pass
