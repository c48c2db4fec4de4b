import logging
import os
from pathlib import Path

from dotenv import load_dotenv

load_dotenv()

# Directorios base
BASE_DIR = Path(__file__).resolve().parent.parent
UPLOADS_DIR = Path(os.getenv("UPLOADS_DIR", BASE_DIR / "uploads"))
EXPORTS_DIR = Path(os.getenv("EXPORTS_DIR", BASE_DIR / "exports"))

# Servidor
API_HOST = os.getenv("API_HOST", "0.0.0.0")
API_PORT = int(os.getenv("API_PORT", "8000"))
API_VERSION = "0.1.0"

# Configuración de CORS
ALLOWED_ORIGINS = [
    origin.strip()
    for origin in os.getenv(
        "ALLOWED_ORIGINS", "http://localhost:4200,http://localhost,http://localhost:3000"
    ).split(",")
    if origin.strip()
]

# Límites de enumeración para peticiones HTTP
MAX_ENUM_LENGTH = int(os.getenv("MAX_ENUM_LENGTH", "8"))
MAX_SCHREIER_RADIUS = int(os.getenv("MAX_SCHREIER_RADIUS", "3"))

# Configuración de archivos
MAX_FILE_SIZE = 10 * 1024 * 1024  # 10 MB
ALLOWED_EXTENSIONS = {'.xlsx', '.xls'}

# Logging
LOG_LEVEL = os.getenv("LOG_LEVEL", "INFO").upper()
LOG_FORMAT = "%(asctime)s %(levelname)s %(name)s: %(message)s"


def configure_logging(level=LOG_LEVEL, stream=None) -> logging.Logger:
    """Instala un único handler en el logger ``torelli``"""
    logger = logging.getLogger("torelli")
    for handler in list(logger.handlers):
        logger.removeHandler(handler)
    handler = logging.StreamHandler(stream)
    handler.setFormatter(logging.Formatter(LOG_FORMAT))
    logger.addHandler(handler)
    logger.setLevel(level)
    logger.propagate = False
    return logger
