# prismlab/core/config.py
from pydantic import Field
from pydantic_settings import BaseSettings
from functools import lru_cache


class Settings(BaseSettings):
    # Ограничение размера: команды отказываются от спецификаций, где верхних клеток больше
    MAX_CELLS: int = Field(default=10**6, gt=0)

    LOG_LEVEL: str = "WARNING"

    # Ниже этого порога (включительно) поиск O-ориентации полный перебор, выше - распространение ограничений
    EXHAUSTIVE_SEARCH_MAX_TOP_CELLS: int = Field(default=24, ge=0)

    JSON_INDENT: int = Field(default=2, ge=0)

    # Сид для случайных рациональных конфигураций (тесты, демонстрации)
    RANDOM_SEED: int = 20240521

    class Config:
        env_prefix = "PRISMLAB_"
        env_file = ".env"
        env_file_encoding = "utf-8"
        case_sensitive = True
        extra = "ignore"


@lru_cache() # Кэшируем, чтобы настройки читались один раз
def get_settings() -> Settings:
    return Settings()
