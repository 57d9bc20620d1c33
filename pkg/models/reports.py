from fractions import Fraction
from typing import Any, ClassVar, Dict, FrozenSet, List, Optional

from pydantic import BaseModel, ConfigDict, model_validator


class RunCounts(BaseModel):
    """
    The three BWT run measures of an unterminated word
    """

    model_config = ConfigDict(frozen=True)

    r: int
    r_bar: int
    r_c: int


class ExtensionReport(BaseModel):
    """
    Right-extensions, super-maximal extensions and a smallest suffixient set of a word
    right_extensions is None when the caller asked not to materialize E_r
    witness maps each super-maximal extension to the end position chosen for it
    """

    model_config = ConfigDict(frozen=True)

    right_extensions: Optional[FrozenSet[str]] = None
    super_maximal: FrozenSet[str]
    sre: int
    suffixient_positions: FrozenSet[int]
    witness: Dict[str, int]
    chi: int

    @model_validator(mode="after")
    def check_bijection(self):
        if self.chi != self.sre or len(self.suffixient_positions) != self.chi:
            raise ValueError("chi must equal sre and count the suffixient positions")
        if self.right_extensions is not None and not self.super_maximal <= self.right_extensions:
            raise ValueError("Super-maximal extensions must be right-extensions")
        return self


class Ratio(BaseModel):
    """
    An exact chi / r ratio kept as an integer pair
    """

    model_config = ConfigDict(frozen=True)

    num: int
    den: int

    @classmethod
    def of(cls, value: Fraction) -> "Ratio":
        return cls(num=value.numerator, den=value.denominator)

    @property
    def value(self) -> Fraction:
        return Fraction(self.num, self.den)

    def __str__(self) -> str:
        return f"{self.num}/{self.den}"


class ClusteredReport(BaseModel):
    """
    Measures of a clustered word and the checks of its closed forms
    """

    word: str
    sigma: int
    exponents: List[int]
    n: int
    r: int
    chi: int
    ratio: Ratio
    r_ok: bool
    chi_ok: bool
    column_ok: bool

    @property
    def ok(self) -> bool:
        return self.r_ok and self.chi_ok and self.column_ok


class RunMinReport(BaseModel):
    """
    The run-minimal member M_k and its linearized, terminated measures
    """

    k: int
    cycle: str
    rotation: str
    last_column: str
    r_c: int
    r: int
    chi: int
    sre: Optional[int] = None
    ratio: Ratio
    cbwt_pattern_ok: bool
    column_ok: bool
    r_ok: bool
    chi_ok: bool
    oracle_ok: Optional[bool] = None
    mismatch: str = ""

    @property
    def ok(self) -> bool:
        return (
            self.cbwt_pattern_ok
            and self.column_ok
            and self.r_ok
            and self.chi_ok
            and self.oracle_ok is not False
        )


class SigmaBoundsReport(BaseModel):
    """
    The sigma-ary de Bruijn measures against their bounds
    """

    sigma: int
    k: int
    n: int
    sre: int
    chi: int
    r: int
    r_lower_bound: int
    ratio: Ratio
    sre_ok: bool
    chi_ok: bool
    r_lb_ok: bool
    ratio_ok: bool

    @property
    def ok(self) -> bool:
        return self.sre_ok and self.chi_ok and self.r_lb_ok and self.ratio_ok


class DollarScan(BaseModel):
    """
    Every sentinel insertion point that turns a column into a valid BWT
    """

    base: str
    valid_positions: List[int]
    recovered: List[str]


class ConjectureReport(BaseModel):
    """
    Dollar scan of the run-minimal pattern alongside the census of achievers
    """

    k: int
    trinomial_primitive: bool
    scan: DollarScan
    census_done: bool
    cycle_count: Optional[int] = None
    achievers: List[str] = []
    runmin_member: Optional[str] = None
    member_found: Optional[bool] = None
    orbit_count: Optional[int] = None
    implied_positions: List[int] = []
    consistent: bool = True
    matches_expectation: bool = True
    notice: str = ""


class MeasureRecord(BaseModel):
    """
    All measures of one input word
    """

    n: int
    sigma: int
    chi: int
    r: int
    r_bar: int
    r_c: int
    sre: int
    ratio: Ratio
    oracle_chi: Optional[int] = None


class ReportRow(BaseModel):
    """
    One checked instance, mirroring the CSV columns
    """

    family: str
    k: Optional[int] = None
    sigma: Optional[int] = None
    n: Optional[int] = None
    chi: Optional[int] = None
    r: Optional[int] = None
    r_bar: Optional[int] = None
    r_c: Optional[int] = None
    sre: Optional[int] = None
    ratio_num: Optional[int] = None
    ratio_den: Optional[int] = None
    passed: bool = True
    detail: str = ""

    COLUMNS: ClassVar[List[str]] = ["family", "k", "sigma", "n", "chi", "r", "r_bar", "r_c", "sre", "ratio_num", "ratio_den", "pass"]

    def sort_key(self) -> tuple:
        return (self.family, self.sigma or 0, self.k or 0, self.n or 0, self.detail)

    def as_record(self) -> Dict[str, Any]:
        """
        :return: the row keyed by the CSV column names
        """
        record = self.model_dump(exclude={"passed", "detail"})
        record["pass"] = self.passed
        return {column: record[column] for column in self.COLUMNS}


class Report(BaseModel):
    """
    The machine-readable result of one command
    """

    command: str
    params: Dict[str, Any]
    rows: List[ReportRow] = []
    passed: bool = True
    complete: bool = True
    notes: List[str] = []
    payload: Optional[str] = None
    details: Dict[str, Any] = {}

    def fail(self, note: str) -> None:
        self.passed = False
        self.notes.append(note)

    def finish(self) -> "Report":
        """
        Sort the rows deterministically and fold their outcomes into the report
        """
        self.rows.sort(key=ReportRow.sort_key)
        self.passed = self.passed and all(row.passed for row in self.rows)
        return self
