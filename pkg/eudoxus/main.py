from eudoxus.config import AppSettings, get_settings
from eudoxus.core.logging import configure_logging, get_logger
from eudoxus.services.endo_core import configure_memo

logger = get_logger(__name__)


def make_logger(config: AppSettings) -> None:
    configure_logging(config.log_level)
    logger.info("logger_initialized", log_level=config.log_level)


def make_memo(config: AppSettings) -> None:
    """Apply the per-node memo cap."""
    configure_memo(config.arithmetic.memo_max_entries)
    logger.info("memo_configured", max_entries=config.arithmetic.memo_max_entries)


def bootstrap(config: AppSettings | None = None) -> AppSettings:
    """Configure logging and the evaluation memo from settings."""
    config = config or get_settings()
    make_logger(config)
    make_memo(config)
    return config
