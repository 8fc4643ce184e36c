import sys
from loguru import logger
from app.config.settings import settings

logger.remove()

# stdout fica reservado para os relatórios da CLI; diagnósticos vão para stderr
_level = settings.LOG_LEVEL.upper()
logger.add(
    sys.stderr,
    level=_level,
    format="<green>{time:YYYY-MM-DD HH:mm:ss.SSS}</green> | "
           "<level>{level: <8}</level> | "
           "<cyan>{extra[name]}:{function}:{line}</cyan> - <level>{message}</level>",
    backtrace=_level == "DEBUG",
    diagnose=_level == "DEBUG",
)
logger.configure(extra={"name": "extremal"})

def get_logger(name: str):
    """Logger do loguru com o módulo de origem em extra[name]."""
    return logger.bind(name=name)
