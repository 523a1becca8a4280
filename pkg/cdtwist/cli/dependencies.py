"""
Shared configuration for the cdtwist command line.

Settings come from cdtwist_config.ini (or the file named by CDTWIST_CONFIG),
with environment overrides loaded from .env first.
"""
import configparser
import logging
import os
from typing import Any, Dict, Optional

from dotenv import load_dotenv
from pydantic import BaseModel, Field, model_validator

from cdtwist.errors import InvalidParameterError
from cdtwist.scalars.kinds import parse_gammas

logger = logging.getLogger(__name__)

load_dotenv()

DEFAULT_CONFIG_FILE = "cdtwist_config.ini"

_config_cache: Optional[Dict[str, Dict[str, Any]]] = None


class CliConfig(BaseModel):
    """Validated options shared by the commands"""
    command: str
    t: int = Field(0, ge=0)
    gammas: str = "symbolic"
    format: str = Field("text", pattern="^(text|csv|json)$")
    seed: int = 0
    budget: Optional[int] = Field(None, ge=0)
    trials: int = Field(50, ge=0)

    @model_validator(mode="after")
    def check_gammas(self) -> "CliConfig":
        parse_gammas(self.gammas, self.t)
        return self


def _env_int(name: str) -> Optional[int]:
    raw = os.environ.get(name)
    if raw is None or raw.strip() == "":
        return None
    try:
        return int(raw)
    except ValueError as e:
        raise InvalidParameterError(f"{name} must be an integer, got {raw!r}") from e


def load_config(path: Optional[str] = None) -> Dict[str, Dict[str, Any]]:
    """
    Read the INI file and apply environment overrides

    Args:
        path: Config file to read (default: $CDTWIST_CONFIG or cdtwist_config.ini)

    Returns:
        Dictionary of per-section settings
    """
    path = path or os.environ.get("CDTWIST_CONFIG", DEFAULT_CONFIG_FILE)
    config = configparser.ConfigParser()
    if not config.read(path):
        logger.debug(f"Config file {path} not found, using defaults")

    table_config = {
        'cap': config.getint('TABLE', 'CAP', fallback=1 << 10)
    }
    cap_override = _env_int("CDTWIST_TABLE_CAP")
    if cap_override is not None:
        table_config['cap'] = cap_override

    verify_config = {
        'exhaustive_max_t': config.getint('VERIFY', 'EXHAUSTIVE_MAX_T', fallback=6),
        'random_pairs': config.getint('VERIFY', 'RANDOM_PAIRS', fallback=100000),
        'workers': config.getint('VERIFY', 'WORKERS', fallback=1)
    }

    search_config = {
        'budget': config.getint('SEARCH', 'BUDGET', fallback=0) or None
    }

    bench_config = {
        'n': config.getint('BENCH', 'N', fallback=1000000)
    }

    logging_config = {
        'level': config.get('LOGGING', 'LEVEL', fallback='INFO'),
        'file': config.get('LOGGING', 'FILE', fallback='logs/cdtwist.log')
    }

    return {
        'table_config': table_config,
        'verify_config': verify_config,
        'search_config': search_config,
        'bench_config': bench_config,
        'logging_config': logging_config
    }


def get_config() -> Dict[str, Dict[str, Any]]:
    """
    Dependency to get the configuration, read once per process
    """
    global _config_cache
    if _config_cache is None:
        _config_cache = load_config()
    return _config_cache


def reset_config() -> None:
    """Forget the cached configuration so the next get_config() rereads it"""
    global _config_cache
    _config_cache = None
