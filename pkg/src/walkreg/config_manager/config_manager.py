import os
from pathlib import Path
from typing import Optional, Union

import yaml
from pydantic import BaseModel, ConfigDict, Field, ValidationError

from ..errors import GraphInputError
from ..utils.logging import get_logger

logger = get_logger(__name__)

DEFAULT_CONFIG_FILE = "config/walkreg.yaml"
CONFIG_ENV_VAR = "WALKREG_CONFIG"
THREADS_ENV_VAR = "WALKREG_THREADS"


class AnalysisConfig(BaseModel):
    """Tolerances, budgets and worker limits shared by every analysis."""

    model_config = ConfigDict(extra="forbid", frozen=True)

    tau_group_rel: float = Field(1e-7, gt=0, description="Eigenvalue grouping tolerance, relative to max(1, ||A||_2)")
    tau_const_rel: float = Field(1e-8, gt=0, description="Idempotent constancy tolerance, relative to alpha_0")
    tau_id_rel: float = Field(1e-6, gt=0, description="Representation identification tolerance, relative to sqrt(alpha_0)")
    residual_tol: float = Field(1e-8, gt=0, description="Residual tolerance for projector identities, scaled by n")
    delsarte_integer_tol: float = Field(1e-6, gt=0, description="Distance of 1 - k/theta_d to an integer")
    delsarte_chi_tol: float = Field(1e-7, gt=0, description="||E chi|| tolerance, scaled by sqrt(|C|)")
    local_eigen_tol: float = Field(1e-6, gt=0, description="Matching tolerance for local-graph eigenvalues")
    bound_slack: float = Field(1e-8, ge=0, description="Slack allowed on floating inequalities")
    clique_cap: int = Field(200_000, gt=0, description="Maximum number of maximal cliques to enumerate")
    node_budget: int = Field(10_000_000, gt=0, description="Exact-cover branch node budget")
    max_n: int = Field(2000, gt=0, description="Largest vertex count accepted by analyze")
    threads: Optional[int] = Field(None, gt=0, description="Worker threads; defaults to the CPU count")
    float_digits: int = Field(12, gt=0, le=17, description="Significant digits for reals in JSON reports")

    def worker_count(self) -> int:
        """Number of worker threads, capped by WALKREG_THREADS when it is set."""
        workers = self.threads or os.cpu_count() or 1
        cap = os.environ.get(THREADS_ENV_VAR)
        if cap:
            try:
                workers = min(workers, max(1, int(cap)))
            except ValueError:
                logger.warning(f"Ignoring non-integer {THREADS_ENV_VAR}={cap!r}")
        return workers


class ConfigManager:
    """Loads AnalysisConfig from YAML, honouring the WALKREG_CONFIG override."""

    def __init__(self, config_file: Optional[Union[str, Path]] = None):
        # Environment variable first, then argument, then default
        self.config_file = Path(os.environ.get(CONFIG_ENV_VAR) or config_file or DEFAULT_CONFIG_FILE)
        logger.debug(f"ConfigManager initialized with config_file={self.config_file}")

    def load(self) -> AnalysisConfig:
        if not self.config_file.exists():
            logger.debug(f"No configuration file at {self.config_file}, using defaults")
            return AnalysisConfig()

        try:
            with open(self.config_file, "r") as f:
                data = yaml.safe_load(f) or {}
        except yaml.YAMLError as e:
            raise GraphInputError(f"Invalid YAML in {self.config_file}: {e}") from e

        if not isinstance(data, dict):
            raise GraphInputError(f"Configuration in {self.config_file} must be a mapping")

        # Accept either a flat mapping or one nested under 'analysis'
        data = data.get("analysis", data)
        try:
            config = AnalysisConfig(**data)
        except ValidationError as e:
            raise GraphInputError(f"Invalid configuration in {self.config_file}: {e}") from e

        logger.debug(f"Loaded configuration from {self.config_file}: {config.model_dump()}")
        return config


def load_config(config_file: Optional[Union[str, Path]] = None) -> AnalysisConfig:
    """Load the analysis configuration (defaults when no file is present)."""
    return ConfigManager(config_file).load()
