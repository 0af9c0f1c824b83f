"""Logging configuration for the application."""

import logging
from pathlib import Path
from typing import Optional

from src.config.settings import EVALUATION_LOG_FILE, LOG_LEVEL


def setup_logger(log_file: Optional[Path] = None) -> tuple[logging.Logger, logging.Logger]:
    """
    Set up loggers for the application.

    Args:
        log_file: Optional path to the log file. Defaults to EVALUATION_LOG_FILE.

    Returns:
        tuple: A tuple containing (evaluation_logger, system_logger).
    """
    # Preprocessing removals, fallbacks and substitutions go to their own file
    evaluation_logger = logging.getLogger('evaluation')
    evaluation_logger.setLevel(logging.INFO)

    formatter = logging.Formatter('%(asctime)s - %(levelname)s - %(message)s')

    log_path = Path(log_file) if log_file else Path(EVALUATION_LOG_FILE)
    log_path.parent.mkdir(parents=True, exist_ok=True)

    # Repeated setup (tests, embedding) must not stack handlers
    for handler in list(evaluation_logger.handlers):
        evaluation_logger.removeHandler(handler)
        handler.close()

    file_handler = logging.FileHandler(log_path, encoding='utf-8')
    file_handler.setFormatter(formatter)
    evaluation_logger.addHandler(file_handler)

    # Disable log propagation to parent logger
    evaluation_logger.propagate = False

    # Basic setup for system logs
    logging.basicConfig(
        format='%(asctime)s - %(name)s - %(levelname)s - %(message)s',
        level=getattr(logging, LOG_LEVEL, logging.INFO)
    )
    system_logger = logging.getLogger('system')

    return evaluation_logger, system_logger
