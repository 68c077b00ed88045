import sys

from loguru import logger


LOG_FORMAT = '<green>{time:HH:mm:ss}</green> | <level>{level: <7}</level> | {message}'


def setup_logger(level='INFO'):
    """Single stderr sink; called once by the entry scripts."""
    logger.remove()
    logger.add(sys.stderr, level=level, format=LOG_FORMAT)
