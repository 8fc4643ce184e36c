from app.cli import cli
from app.core.logger import get_logger

logger = get_logger(__name__)

def main():
    try:
        cli(prog_name="extremal")
    except KeyboardInterrupt:
        logger.info("Execução interrompida pelo usuário")
        raise SystemExit(130)

if __name__ == "__main__":
    main()
