"""Bounded parallel evaluation of checks with ordered CSV output."""

import asyncio
import logging
from collections.abc import Callable, Mapping, Sequence
from dataclasses import dataclass, field, replace
from typing import Any

from fraclog.errors import DomainError
from fraclog.inequalities.report import CheckResult, MarginReport, SkippedCheck
from fraclog.output.tally import VerificationTally
from fraclog.output.writer import ReportWriter

logger = logging.getLogger(__name__)

Evaluation = Callable[[], MarginReport | Sequence[MarginReport]]


@dataclass(frozen=True)
class Check:
    """One unit of work.

    Attributes:
        inequality_id: Id used for a skipped row
        evaluate: Pure function producing one or more reports
        params: Extra parameters appended to every report (field descriptors)
        skip_on_domain_error: Turn DomainError into a skipped row instead of failing the run
    """

    inequality_id: str
    evaluate: Evaluation
    params: Mapping[str, Any] = field(default_factory=dict)
    skip_on_domain_error: bool = False


def _run(check: Check) -> list[CheckResult]:
    try:
        outcome = check.evaluate()
    except DomainError as e:
        if not check.skip_on_domain_error:
            raise
        return [SkippedCheck(check.inequality_id, dict(check.params), e.hypothesis)]
    reports = [outcome] if isinstance(outcome, MarginReport) else list(outcome)
    return [replace(report, params={**report.params, **check.params}) for report in reports]


async def evaluate_all(
    checks: Sequence[Check],
    writer: ReportWriter,
    tally: VerificationTally,
    threads: int = 1,
) -> list[list[CheckResult]]:
    """Evaluate checks in worker threads, at most `threads` at a time.

    Rows reach the writer tagged with the check's position, so output order equals
    input order.

    Raises:
        DomainError: From a check that does not skip domain errors
    """
    semaphore = asyncio.Semaphore(max(1, threads))
    logger.info(f"Evaluating {len(checks)} checks on up to {threads} threads")

    async def worker(sequence: int, check: Check) -> list[CheckResult]:
        async with semaphore:
            results = await asyncio.to_thread(_run, check)
        for result in results:
            await tally.record(result)
        await writer.write(sequence, [result.csv_row(tally.policy) for result in results])
        return results

    return list(await asyncio.gather(*(worker(i, check) for i, check in enumerate(checks))))
