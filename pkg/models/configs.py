from typing import Any, ClassVar, Dict, List, Literal, Optional

from pydantic import BaseModel, Field, field_validator

Command = Literal["measure", "gen", "verify", "sweep", "conjecture"]
Format = Literal["text", "json", "csv"]
Scope = Literal["clustered", "runmin", "sigma-bounds", "primitivity", "all"]
Kind = Literal["clustered", "runmin", "debruijn", "lfsr"]


class RunConfig(BaseModel):
    """
    Every choice that shapes one command run; the seed alone determines randomized sweeps
    """

    command: Command
    format: Format = "text"
    seed: int = Field(default=0, ge=0)
    oracle: bool = False
    big: bool = False
    quiet: bool = False
    k: Optional[int] = None
    sigma: Optional[int] = None
    exponents: Optional[List[int]] = None
    input: Optional[str] = None
    word: Optional[str] = None
    alphabet: Optional[str] = None
    sentinel: Optional[str] = None
    scope: Scope = "all"
    kind: Kind = "runmin"
    poly: Optional[str] = None
    trials: int = Field(default=50, ge=1)
    workers: Optional[int] = Field(default=None, ge=1)

    @field_validator("sentinel")
    @classmethod
    def check_sentinel(cls, sentinel: Optional[str]) -> Optional[str]:
        if sentinel is not None and len(sentinel) != 1:
            raise ValueError(f"The sentinel label is a single character, got {sentinel!r}")
        return sentinel

    @field_validator("exponents", mode="before")
    @classmethod
    def split_exponents(cls, value):
        if isinstance(value, str):
            return [int(part) for part in value.split(",") if part.strip()]
        return value

    PARAMETERS: ClassVar[Dict[str, List[str]]] = {
        "measure": ["word", "input", "alphabet", "sentinel", "oracle"],
        "gen": ["kind", "k", "sigma", "exponents", "poly", "seed"],
        "verify": ["scope", "k", "sigma", "trials", "seed", "oracle", "big"],
        "sweep": ["sigma", "trials", "seed", "oracle"],
        "conjecture": ["k"],
    }

    def params(self) -> Dict[str, Any]:
        """
        :return: the options that shape this command, echoed into its report
        """
        return self.model_dump(include=set(self.PARAMETERS[self.command]), exclude_none=True)
