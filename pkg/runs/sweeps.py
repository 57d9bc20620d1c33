import logging
from concurrent.futures import ThreadPoolExecutor
from typing import Callable, List, NamedTuple, Optional

from models.reports import Report, ReportRow
from util.errors import BudgetExceededError, PrimitivityUndecided, VerificationFailure
from util.setup import settings

logger = logging.getLogger(__name__)

ProgressCallback = Callable[[float, str], None]


def quiet_progress(fraction: float, message: str) -> None:
    logger.debug(f"{fraction:.0%} {message}")


class Task(NamedTuple):
    """
    One independent unit of checking that yields report rows
    """

    label: str
    family: str
    run: Callable[[], List[ReportRow]]


class Outcome(NamedTuple):
    label: str
    rows: List[ReportRow]
    note: str = ""
    complete: bool = True


class Sweep:
    """
    Fans independent checks out over a thread pool and collects their rows in a deterministic order
    """

    tasks: List[Task]
    workers: int

    def __init__(self, tasks: List[Task], workers: Optional[int] = None):
        """
        :param tasks: the checks to run
        :param workers: thread count, settings().workers by default
        """
        self.tasks = tasks
        self.workers = workers or settings().workers

    @staticmethod
    def run_task(task: Task) -> Outcome:
        """
        Run one task, turning budget exhaustion into an incomplete outcome and a failed cross-check
        into a failing row
        :param task: the task
        :return: an Outcome
        """
        try:
            rows = task.run()
            logger.info(f"{task.label} finished with {len(rows)} rows")
            return Outcome(task.label, rows)
        except (BudgetExceededError, PrimitivityUndecided) as e:
            logger.warning(f"{task.label} skipped: {e}")
            return Outcome(task.label, [], note=f"{task.label}: {e}", complete=False)
        except VerificationFailure as e:
            logger.error(f"{task.label} failed a cross-check")
            logger.error(e)
            row = ReportRow(family=task.family, passed=False, detail=f"{task.label}: {e}")
            return Outcome(task.label, [row], note=f"{task.label}: {e}")

    def run(self, report: Report, progress: ProgressCallback = quiet_progress) -> Report:
        """
        Run every task and add the rows to the report
        :param report: the report to fill
        :param progress: a callback reporting completion as a fraction and a message
        :return: the finished report
        """
        progress(0.0, f"Running {len(self.tasks)} checks..")
        done = []
        with ThreadPoolExecutor(max_workers=self.workers) as e:
            for outcome in e.map(self.run_task, self.tasks):
                done.append(outcome.label)
                progress(len(done) / max(len(self.tasks), 1), f"{outcome.label} done..")
                report.rows.extend(outcome.rows)
                if outcome.note:
                    report.notes.append(outcome.note)
                if not outcome.complete:
                    report.complete = False
        progress(1.0, "Finishing up..")
        return report.finish()
