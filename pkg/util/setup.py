import logging
import os
import sys
from functools import lru_cache
from typing import ClassVar, Optional, TextIO

try:
    from typing import Self
except ImportError:  # Python < 3.11
    from typing_extensions import Self

from dotenv import load_dotenv
from pydantic import BaseModel


def setup_logger(root, level: int = logging.INFO, stream: Optional[TextIO] = None) -> None:
    """
    Set up consistent logging
    :param root: the logger to configure, normally the root logger
    :param level: INFO for interactive runs, WARNING when stdout carries a report
    :param stream: where log lines go, sys.stdout at call time by default
    """
    root.setLevel(level)
    handler = logging.StreamHandler(stream or sys.stdout)
    handler.setLevel(level)
    formatter = logging.Formatter(
        "[%(asctime)s] [%(levelname)s] [%(name)s] %(message)s",
        datefmt="%Y-%m-%d %H:%M:%S %z",
    )
    handler.setFormatter(formatter)
    root.handlers.clear()
    root.addHandler(handler)


class Settings(BaseModel):
    """
    Budgets and caps shared by the library, the CLI and the dashboard
    """

    oracle_cap: int = 512
    factor_budget: int = 10**7
    enumeration_cap: int = 5
    size_budget: int = 1 << 24
    workers: int = 4
    big_k: int = 22

    PREFIX: ClassVar[str] = "SUFFIXIENT_"

    @classmethod
    def from_env(cls) -> Self:
        """
        Read overrides such as SUFFIXIENT_ORACLE_CAP=1024 from the environment (and a .env file)
        :return: a Settings instance
        """
        load_dotenv(override=True)
        values = {}
        for name in cls.model_fields:
            raw = os.getenv(cls.PREFIX + name.upper())
            if raw:
                values[name] = int(raw)
        return cls(**values)


@lru_cache(maxsize=1)
def settings() -> Settings:
    return Settings.from_env()


STYLE = """
<style>
.small-font {
    font-size:12px !important;
}
.mono {
    font-family: monospace;
    word-break: break-all;
}
</style>
"""
