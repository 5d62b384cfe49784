from __future__ import annotations

from pydantic import Field
from pydantic_settings import BaseSettings, SettingsConfigDict


class QuarticBasisSettings(BaseSettings):
    model_config = SettingsConfigDict(env_prefix="QUARTIC_BASIS_", extra="ignore")

    # Trial-division bound handed to the discriminant factorizer.
    # Larger discriminants leave a cofactor and the global basis is flagged conditional.
    max_trial_division: int = Field(default=1_000_000)

    # Comma-separated primes scanned by `check` when --p is not given.
    check_primes: str = Field(default="2,3,5,7,11,13")

    # Worker threads for the `check` grid.
    check_workers: int = Field(default=4)

    # "json" | "text"
    output_format: str = Field(default="json")

    log_level: str = Field(default="WARNING")

    # Cap on the 2-regularizing shift search (b = 3 mod 8, v2(a) = 2).
    max_shift_iterations: int = Field(default=64)

    def check_prime_list(self) -> list[int]:
        return [int(part) for part in self.check_primes.split(",") if part.strip()]


def get_settings() -> QuarticBasisSettings:
    return QuarticBasisSettings()
