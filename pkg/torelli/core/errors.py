from typing import Optional


class TorelliError(ValueError):
    """Error de dominio base del paquete"""


class WordSyntaxError(TorelliError):
    """Token mal formado en una palabra o trenza"""

    def __init__(self, message: str, position: Optional[int] = None):
        self.position = position
        if position is not None:
            message = f"{message} (token {position})"
        super().__init__(message)


class IndexRangeError(TorelliError):
    """Índice de generador fuera de rango"""

    def __init__(self, message: str, position: Optional[int] = None):
        self.position = position
        if position is not None:
            message = f"{message} (token {position})"
        super().__init__(message)


class RankMismatchError(TorelliError):
    pass


class DimensionMismatchError(TorelliError):
    pass


class SpecializationError(TorelliError):
    pass


class OddWordError(TorelliError):
    pass


class NotInKernelError(TorelliError):
    pass


class BalanceError(TorelliError):
    pass


class TokenRangeError(WordSyntaxError, IndexRangeError):
    """Índice fuera de rango detectado al leer texto"""

    def __init__(self, message: str, position: Optional[int] = None):
        if position is not None:
            message = f"{message} (token {position})"
        TorelliError.__init__(self, message)
        self.position = position
