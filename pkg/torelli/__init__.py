# torelli/__init__.py
# Álgebra de palabras para la sucesión de Birman de los grupos de Torelli hiperelípticos

__version__ = "0.1.0"
