"""Async-safe pass/fail bookkeeping for a verification run."""

import asyncio
import logging
import math
from dataclasses import dataclass, replace

from fraclog.errors import MarginViolationError
from fraclog.inequalities.report import (
    DEFAULT_POLICY,
    CheckResult,
    MarginReport,
    TolerancePolicy,
)

logger = logging.getLogger(__name__)


@dataclass
class TallyState:
    """Mutable counters of one run."""

    passed: int = 0
    failed: int = 0
    skipped: int = 0
    worst_relative_margin: float = math.inf

    @property
    def total(self) -> int:
        return self.passed + self.failed + self.skipped


class VerificationTally:
    """Counts passed, failed and skipped checks under one tolerance policy."""

    def __init__(self, policy: TolerancePolicy = DEFAULT_POLICY) -> None:
        self._policy = policy
        self._state = TallyState()
        self._lock = asyncio.Lock()

    @property
    def policy(self) -> TolerancePolicy:
        return self._policy

    async def record(self, result: CheckResult) -> bool:
        """Count one result.

        Returns:
            False only for a margin below tolerance
        """
        async with self._lock:
            if not isinstance(result, MarginReport):
                self._state.skipped += 1
                logger.warning(f"Skipped {result.inequality_id} {result.params}: {result.reason}")
                return True

            if not math.isnan(result.relative_margin):
                self._state.worst_relative_margin = min(
                    self._state.worst_relative_margin, result.relative_margin
                )
            if result.passes(self._policy):
                self._state.passed += 1
                return True
            self._state.failed += 1
            logger.warning(
                f"Margin violation in {result.inequality_id} {result.params}: "
                f"relative_margin={result.relative_margin:.3e}"
            )
            return False

    async def snapshot(self) -> TallyState:
        async with self._lock:
            return replace(self._state)

    async def raise_for_failures(self) -> None:
        """Log the totals and fail if anything fell below tolerance.

        Raises:
            MarginViolationError: If any recorded margin fell below tolerance
        """
        state = await self.snapshot()
        logger.info(
            f"Checks: {state.passed} passed, {state.failed} failed, {state.skipped} skipped"
        )
        if state.failed:
            raise MarginViolationError(state.failed, state.worst_relative_margin)
