"""
The five commands, each turning a RunConfig into a Report
"""

import logging
from fractions import Fraction
from pathlib import Path
from typing import Dict, List

import numpy as np

from conjectures.lab import conjecture_census
from families.clustered import (
    ClusteredShape,
    closed_form_ratio as clustered_ratio,
    clustered_sweep,
    make_clustered,
    make_shape,
)
from families.debruijn import DeBruijnCycle, canonical_rotation, lex_least_debruijn, verify_sigma_bounds
from families.runmin import expected_measures, make_runmin, verify_linearized
from fields.lfsrs import cycle_join
from fields.polynomials import F2Poly, is_primitive, primitive_trinomial_degrees, trinomial
from measures.oracles import brute_force_chi, brute_force_sre
from measures.suffixient import chi, sre
from models.configs import RunConfig
from models.reports import MeasureRecord, Ratio, Report, ReportRow
from runs.sweeps import ProgressCallback, Sweep, Task, quiet_progress
from transforms.bwt import r_measures
from util.errors import ContractError
from util.setup import settings
from words.alphabets import Alphabet
from words.strings import SymbolString, terminate

logger = logging.getLogger(__name__)

PRIMITIVE_TRINOMIAL_DEGREES = [2, 3, 4, 6, 7, 15, 22]

CLUSTERED_SIGMA = 12
RUNMIN_K = 15
BOUNDS_SIGMA = 5
BOUNDS_K = 4
RANDOM_LENGTH = 48


def read_word(config: RunConfig) -> SymbolString:
    """
    Decode the literal word or the bytes of --input into a ranked word
    """
    if config.input:
        text = Path(config.input).read_bytes().decode("latin-1")
    elif config.word is not None:
        text = config.word
    else:
        raise ContractError("measure needs a literal word or --input PATH")
    if not text:
        raise ContractError("The input is empty")
    alphabet = Alphabet.from_text(text, config.alphabet, config.sentinel)
    return SymbolString(np.array([alphabet.rank(char) + 1 for char in text]), alphabet)


def measure_word(w: SymbolString, oracle: bool = False) -> MeasureRecord:
    """
    chi, r, r-bar, r_c and sre of a word given without sentinel
    :param w: the word
    :param oracle: recount chi by brute force, failing beyond the oracle cap
    :return: a MeasureRecord
    """
    terminated = terminate(w)
    runs = r_measures(w)
    measured_chi = chi(terminated)
    return MeasureRecord(
        n=w.n,
        sigma=w.sigma,
        chi=measured_chi,
        r=runs.r,
        r_bar=runs.r_bar,
        r_c=runs.r_c,
        sre=sre(w),
        ratio=Ratio.of(Fraction(measured_chi, runs.r)),
        oracle_chi=brute_force_chi(terminated) if oracle else None,
    )


def _row(family: str, ratio: Ratio = None, **fields) -> ReportRow:
    if ratio is not None:
        fields.update(ratio_num=ratio.num, ratio_den=ratio.den)
    return ReportRow(family=family, **fields)


def cmd_measure(config: RunConfig) -> Report:
    w = read_word(config)
    record = measure_word(w, config.oracle)
    passed = record.oracle_chi is None or record.oracle_chi == record.chi
    row = _row(
        "measure",
        record.ratio,
        sigma=record.sigma,
        n=record.n,
        chi=record.chi,
        r=record.r,
        r_bar=record.r_bar,
        r_c=record.r_c,
        sre=record.sre,
        passed=passed,
        detail="" if passed else f"brute-force chi = {record.oracle_chi}",
    )
    report = Report(command="measure", params=config.params(), rows=[row])
    report.details = record.model_dump()
    return report.finish()


def generate(config: RunConfig) -> Dict:
    """
    Build the requested family member and what its closed forms predict
    :return: provenance with the generated word under "word"
    """
    if config.kind == "clustered":
        if config.exponents:
            shape = make_shape(config.sigma or len(config.exponents), config.exponents)
        else:
            shape = ClusteredShape.random(config.sigma or 2, np.random.default_rng(config.seed))
        word = make_clustered(shape)
        expected = {"r": shape.sigma + 1, "chi": 2 * shape.sigma, "ratio": str(clustered_ratio(shape.sigma))}
        parameters = {"sigma": shape.sigma, "exponents": shape.exponents}
    elif config.kind == "runmin":
        k = config.k or 3
        word = canonical_rotation(make_runmin(k))
        expected = expected_measures(k)
        parameters = {"k": k}
    elif config.kind == "debruijn":
        sigma, k = config.sigma or 2, config.k or 3
        word = canonical_rotation(lex_least_debruijn(sigma, k))
        expected = {"sre": sigma**k, "chi": sigma**k + 1, "r_lower_bound": sigma ** (k - 1) * (sigma - 1) + 1}
        parameters = {"sigma": sigma, "k": k}
    else:
        if not config.poly:
            raise ContractError("gen --kind lfsr needs --poly, e.g. x^4+x+1 or 0x13")
        poly = F2Poly.parse(config.poly)
        cycle = DeBruijnCycle(cycle_join(poly).cycle(), poly.degree)
        word = canonical_rotation(cycle)
        k = poly.degree
        expected = {"sre": 1 << k, "chi": (1 << k) + 1}
        parameters = {"poly": str(poly), "hex": poly.hex}
    return {"family": config.kind, "parameters": parameters, "expected": expected, "word": str(word)}


def cmd_gen(config: RunConfig) -> Report:
    provenance = generate(config)
    report = Report(command="gen", params=config.params(), payload=provenance["word"])
    report.details = {key: value for key, value in provenance.items() if key != "word"}
    return report.finish()


def _clustered_rows(sigma: int, trials: int, seed: int) -> List[ReportRow]:
    rows = []
    for report in clustered_sweep(sigma, trials, seed):
        passed = report.ok and report.ratio.value == clustered_ratio(sigma)
        rows.append(
            _row(
                "clustered",
                report.ratio,
                sigma=sigma,
                n=report.n,
                chi=report.chi,
                r=report.r,
                passed=passed,
                detail=",".join(map(str, report.exponents)),
            )
        )
    return rows


def _runmin_rows(k: int, oracle: bool) -> List[ReportRow]:
    report = verify_linearized(k, oracle=oracle)
    return [
        _row(
            "runmin",
            report.ratio,
            k=k,
            sigma=2,
            n=len(report.rotation) + k,
            chi=report.chi,
            r=report.r,
            r_c=report.r_c,
            sre=report.sre,
            passed=report.ok,
            detail=report.mismatch,
        )
    ]


def _bounds_rows(sigma: int, k: int) -> List[ReportRow]:
    report = verify_sigma_bounds(lex_least_debruijn(sigma, k))
    detail = f"r >= {report.r_lower_bound}"
    return [
        _row(
            "sigma-bounds",
            report.ratio,
            k=k,
            sigma=sigma,
            n=report.n,
            chi=report.chi,
            r=report.r,
            sre=report.sre,
            passed=report.ok,
            detail=detail,
        )
    ]


def _primitivity_rows(k_max: int) -> List[ReportRow]:
    degrees = primitive_trinomial_degrees(k_max)
    expected = [k for k in PRIMITIVE_TRINOMIAL_DEGREES if k <= k_max]
    passed = degrees == expected if k_max <= PRIMITIVE_TRINOMIAL_DEGREES[-1] else degrees[: len(expected)] == expected
    return [_row("primitivity", k=k_max, sigma=2, passed=passed, detail=",".join(map(str, degrees)))]


def verification_tasks(config: RunConfig) -> List[Task]:
    """
    The checks selected by --scope, with --k and --sigma acting as upper limits
    """
    scopes = ["clustered", "runmin", "sigma-bounds", "primitivity"] if config.scope == "all" else [config.scope]
    tasks = []
    if "clustered" in scopes:
        for sigma in range(2, (config.sigma or CLUSTERED_SIGMA) + 1):
            tasks.append(
                Task(f"clustered sigma={sigma}", "clustered", lambda s=sigma: _clustered_rows(s, config.trials, config.seed))
            )
    if "runmin" in scopes:
        degrees = primitive_trinomial_degrees(config.k or RUNMIN_K)
        if config.big and settings().big_k not in degrees and is_primitive(trinomial(settings().big_k)):
            degrees.append(settings().big_k)
        for k in degrees:
            tasks.append(Task(f"runmin k={k}", "runmin", lambda k=k: _runmin_rows(k, config.oracle)))
    if "sigma-bounds" in scopes:
        for sigma in range(2, (config.sigma or BOUNDS_SIGMA) + 1):
            for k in range(2, (config.k or BOUNDS_K) + 1):
                tasks.append(Task(f"sigma-bounds sigma={sigma} k={k}", "sigma-bounds", lambda s=sigma, k=k: _bounds_rows(s, k)))
    if "primitivity" in scopes:
        k_max = settings().big_k if config.scope == "all" else (config.k or settings().big_k)
        tasks.append(Task(f"primitivity k<={k_max}", "primitivity", lambda: _primitivity_rows(k_max)))
    return tasks


def cmd_verify(config: RunConfig, progress: ProgressCallback = quiet_progress) -> Report:
    report = Report(command="verify", params=config.params())
    Sweep(verification_tasks(config), config.workers).run(report, progress)
    if not report.complete:
        logger.warning("Verification report is incomplete; some checks exceeded their budget")
    return report


def _random_rows(trials: int, seed: int, oracle: bool) -> List[ReportRow]:
    rng = np.random.default_rng(seed)
    rows = []
    for trial in range(trials):
        sigma = int(rng.integers(1, 5))
        n = int(rng.integers(1, RANDOM_LENGTH + 1))
        w = SymbolString.from_ranks(rng.integers(0, sigma, size=n), Alphabet.default(sigma))
        record = measure_word(w, oracle)
        passed = True
        if oracle:
            passed = record.oracle_chi == record.chi and brute_force_sre(w) == record.sre
        rows.append(
            _row(
                "random",
                record.ratio,
                sigma=sigma,
                n=n,
                chi=record.chi,
                r=record.r,
                r_bar=record.r_bar,
                r_c=record.r_c,
                sre=record.sre,
                passed=passed,
                detail=f"{trial:04d}:{w}",
            )
        )
    return rows


def cmd_sweep(config: RunConfig, progress: ProgressCallback = quiet_progress) -> Report:
    """
    Seeded random clustered members for every sigma up to --sigma, plus --trials seeded random words
    """
    tasks = [
        Task(f"clustered sigma={sigma}", "clustered", lambda s=sigma: _clustered_rows(s, config.trials, config.seed))
        for sigma in range(2, (config.sigma or CLUSTERED_SIGMA) + 1)
    ]
    tasks.append(Task("random words", "random", lambda: _random_rows(config.trials, config.seed, config.oracle)))
    report = Report(command="sweep", params=config.params())
    return Sweep(tasks, config.workers).run(report, progress)


def cmd_conjecture(config: RunConfig) -> Report:
    k = config.k or 5
    census = conjecture_census(k)
    row = _row(
        "conjecture",
        k=k,
        sigma=2,
        n=1 << k,
        passed=census.consistent,
        detail=f"valid={census.scan.valid_positions} achievers={len(census.achievers)}",
    )
    report = Report(command="conjecture", params=config.params(), rows=[row])
    report.details = census.model_dump()
    if census.notice:
        report.notes.append(census.notice)
    if not census.matches_expectation:
        report.notes.append(f"k = {k}: outcome differs from the expected pattern")
    return report.finish()


COMMANDS = {
    "measure": cmd_measure,
    "gen": cmd_gen,
    "verify": cmd_verify,
    "sweep": cmd_sweep,
    "conjecture": cmd_conjecture,
}


def run(config: RunConfig) -> Report:
    logger.info(f"Running {config.command} with {config.params()}")
    return COMMANDS[config.command](config)
