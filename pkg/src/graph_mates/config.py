"""
Configuration and environment management for the census engine
"""

import logging
import os
from pathlib import Path
from typing import Dict, Optional

from dotenv import load_dotenv

logger = logging.getLogger(__name__)

ENV_FILES = (Path('.env'), Path('config/config.env'))


class Config:
    """Centralized configuration management"""

    def __init__(self, env_file: Optional[Path] = None):
        self._load_environment(env_file)

    def _load_environment(self, env_file: Optional[Path]):
        """Load environment variables from the first env file that exists"""
        candidates = (env_file,) if env_file else ENV_FILES
        for path in candidates:
            if path is not None and path.exists():
                # Values already exported in the shell win over the file
                load_dotenv(path, override=False)
                logger.debug(f"Loaded configuration from {path}")
                break

    def _get_int(self, key: str, default: int) -> int:
        raw = os.getenv(key)
        if raw is None or not raw.strip():
            return default
        try:
            value = int(raw)
        except ValueError:
            logger.warning(f"Ignoring non-integer {key}={raw!r}; using {default}")
            return default
        if value < 1:
            logger.warning(f"Ignoring non-positive {key}={raw!r}; using {default}")
            return default
        return value

    @property
    def workers(self) -> int:
        """Default worker count for signature computation"""
        return self._get_int('GRAPH_MATES_WORKERS', os.cpu_count() or 1)

    @property
    def chunk_size(self) -> int:
        """Graphs handed to a worker per task"""
        return self._get_int('GRAPH_MATES_CHUNK_SIZE', 256)

    @property
    def log_level(self) -> str:
        """Default logging level name"""
        return os.getenv('GRAPH_MATES_LOG_LEVEL', 'WARNING').upper()

    @property
    def reports_dir(self) -> Path:
        """Directory for CSV reports and mate files"""
        return Path(os.getenv('GRAPH_MATES_REPORTS_DIR', 'reports'))

    @property
    def hashing_mode(self) -> str:
        """Default census hashing mode: exact or hashed"""
        mode = os.getenv('GRAPH_MATES_HASHING', 'exact').strip().lower()
        if mode not in ('exact', 'hashed'):
            logger.warning(f"Unknown GRAPH_MATES_HASHING={mode!r}; using exact")
            return 'exact'
        return mode

    def as_dict(self) -> Dict[str, str]:
        """Resolved settings, for diagnostics"""
        return {
            'workers': str(self.workers),
            'chunk_size': str(self.chunk_size),
            'log_level': self.log_level,
            'reports_dir': str(self.reports_dir),
            'hashing_mode': self.hashing_mode,
        }
