"""Configuration management for orbitkit."""

from pydantic_settings import BaseSettings, SettingsConfigDict


class Settings(BaseSettings):
    model_config = SettingsConfigDict(
        env_prefix="ORBITKIT_", env_file=".env", env_file_encoding="utf-8", extra="ignore"
    )

    tol: float = 1e-9
    jacobi_tol: float = 1e-10
    degeneracy_threshold: float = 1e-12

    fd_step_flat: float = 1e-5
    fd_step_map: float = 1e-6
    fd_step_poisson: float = 1e-6
    fd_tol: float = 1e-6

    haar_chunk_size: int = 2048
    haar_workers: int = 1

    default_samples: int = 10
    default_seed: int = 0

    log_level: str = "WARNING"
    float_digits: int = 17


settings = Settings()
