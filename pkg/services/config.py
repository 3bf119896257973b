"""
Run configuration. Defaults come from TETRO_* environment variables (a .env
file is honoured); CLI flags override them.
"""
from dataclasses import dataclass, replace
import os

from dotenv import load_dotenv

from services.errors import ConfigError

load_dotenv()

DEFAULT_SEED = 20240601


def _env_int(name, default):
    raw = os.getenv(name)
    if raw is None or raw.strip() == "":
        return default
    try:
        return int(raw)
    except ValueError:
        raise ConfigError(f"{name} must be an integer, got {raw!r}") from None


def _env_float(name, default):
    raw = os.getenv(name)
    if raw is None or raw.strip() == "":
        return default
    try:
        return float(raw)
    except ValueError:
        raise ConfigError(f"{name} must be a number, got {raw!r}") from None


@dataclass(frozen=True)
class RunConfig:
    output: str = "human"
    seed: int = DEFAULT_SEED
    threads: int = 1
    tol: float = 1e-12
    max_tilings: int = 5_000_000
    max_subset_edges: int = 25
    max_strip_width: int = 10

    def __post_init__(self):
        if self.output not in ("human", "json"):
            raise ConfigError(f"output must be 'human' or 'json', got {self.output!r}")
        for name in ("threads", "max_tilings", "max_subset_edges", "max_strip_width"):
            if getattr(self, name) < 1:
                raise ConfigError(f"{name} must be positive, got {getattr(self, name)}")
        if not self.tol > 0:
            raise ConfigError(f"tol must be positive, got {self.tol}")

    @classmethod
    def from_env(cls, **overrides):
        base = cls(
            seed=_env_int("TETRO_SEED", DEFAULT_SEED),
            threads=_env_int("TETRO_THREADS", 1),
            tol=_env_float("TETRO_TOL", 1e-12),
            max_tilings=_env_int("TETRO_MAX_TILINGS", 5_000_000),
            max_subset_edges=_env_int("TETRO_MAX_SUBSET_EDGES", 25),
            max_strip_width=_env_int("TETRO_MAX_STRIP_WIDTH", 10),
        )
        overrides = {k: v for k, v in overrides.items() if v is not None}
        return replace(base, **overrides)

    def budgets(self):
        return {
            "max_tilings": self.max_tilings,
            "max_subset_edges": self.max_subset_edges,
            "max_strip_width": self.max_strip_width,
        }
