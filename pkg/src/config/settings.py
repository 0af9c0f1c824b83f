"""Application configuration settings."""

import os
from pathlib import Path
from typing import Final
from dotenv import load_dotenv

# Load environment variables from .env file
load_dotenv()

# Paths
BASE_DIR: Final[Path] = Path(__file__).resolve().parents[2]

DATA_DIR: Final[Path] = Path(os.getenv('DATA_DIR', BASE_DIR / 'data'))
LOGS_DIR: Final[Path] = Path(os.getenv('LOGS_DIR', DATA_DIR / 'logs'))
REPORTS_DIR: Final[Path] = Path(os.getenv('REPORTS_DIR', DATA_DIR / 'reports'))

EVALUATION_LOG_FILE: Final[Path] = Path(os.getenv('EVALUATION_LOG_FILE', LOGS_DIR / 'evaluation.log'))
LOG_LEVEL: Final[str] = os.getenv('LOG_LEVEL', 'INFO').upper()

# Indicator defaults
DEFAULT_GD_P: Final[float] = float(os.getenv('DEFAULT_GD_P', 1))
DEFAULT_GRID_DIVISIONS: Final[int] = int(os.getenv('DEFAULT_GRID_DIVISIONS', 10))
HV_MAX_OBJECTIVES: Final[int] = int(os.getenv('HV_MAX_OBJECTIVES', 10))
WEIGHT_TOLERANCE: Final[float] = float(os.getenv('WEIGHT_TOLERANCE', 1e-9))

# Plotting: scatter plots are readable up to this many objectives
SCATTER_MAX_OBJECTIVES: Final[int] = int(os.getenv('SCATTER_MAX_OBJECTIVES', 3))

# IO
CSV_FLOAT_FORMAT: Final[str] = os.getenv('CSV_FLOAT_FORMAT', '.17g')
MAX_WORKERS: Final[int] = int(os.getenv('MAX_WORKERS', 4))
