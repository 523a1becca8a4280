"""
Main entry point for the cdtwist command line
"""
import logging
from pathlib import Path

from cdtwist.cli.dependencies import get_config

logging_config = get_config()['logging_config']

Path(logging_config['file']).parent.mkdir(parents=True, exist_ok=True)

logging.basicConfig(
    level=getattr(logging, logging_config['level'].upper(), logging.INFO),
    format='%(asctime)s - %(name)s - %(levelname)s - %(message)s',
    handlers=[
        logging.FileHandler(logging_config['file']),
        logging.StreamHandler()
    ]
)
logger = logging.getLogger(__name__)

from cdtwist.cli.main import create_cli

cli = create_cli()

if __name__ == "__main__":
    logger.debug("Starting cdtwist")
    cli()
