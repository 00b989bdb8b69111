import logging
import os
from functools import lru_cache
from typing import Literal

from dotenv import load_dotenv
from pydantic import BaseModel, ConfigDict, Field, ValidationError, field_validator

from errors import ConfigError

load_dotenv()  # Load environment variables from .env file


class Settings(BaseModel):
    model_config = ConfigDict(frozen=True)

    max_steps: int = Field(default=8, ge=0)  # bound for language enumeration
    log_level: str = "WARNING"
    tie_break: Literal["begin", "input"] = "begin"  # event order for log ingestion

    @field_validator("log_level")
    @classmethod
    def _known_level(cls, value: str) -> str:
        value = value.upper()
        if not isinstance(logging.getLevelName(value), int):
            raise ValueError(f"unknown log level {value!r}")
        return value


@lru_cache
def get_settings() -> Settings:
    try:
        return Settings(
            max_steps=os.getenv("HDALANG_MAX_STEPS", "8"),
            log_level=os.getenv("HDALANG_LOG_LEVEL", "WARNING"),
            tie_break=os.getenv("HDALANG_TIE_BREAK", "begin"),
        )
    except ValidationError as exc:
        raise ConfigError(f"invalid HDALANG_* setting: {exc}") from exc
