"""Async CSV writer that emits rows in submission order."""

import asyncio
import csv
import io
import logging
import sys
from collections.abc import Sequence
from pathlib import Path
from typing import TextIO

logger = logging.getLogger(__name__)

Row = Sequence[str]


class ReportWriter:
    """Queue-backed CSV writer with batched, ordered output.

    Rows arrive tagged with a sequence number (0, 1, 2, ...) in any order; they are
    held back until every lower sequence number has been written, so the output is
    byte-identical regardless of completion order.
    """

    def __init__(
        self,
        header: Sequence[str],
        target: Path | TextIO | None = None,
        batch_size: int = 64,
        batch_timeout: float = 0.5,
    ) -> None:
        """Initialize the writer.

        Args:
            header: CSV header, written on start
            target: Output file path, an open text stream, or None for stdout
            batch_size: Maximum number of queued items collected per write
            batch_timeout: Maximum time (seconds) to wait before flushing a partial batch
        """
        self._header = list(header)
        self._target = target
        self._stream: TextIO | None = None
        self._owns_stream = False
        self._write_lock = asyncio.Lock()

        self._queue: asyncio.Queue[tuple[int, list[Row]] | None] = asyncio.Queue()
        self._batch_size = batch_size
        self._batch_timeout = batch_timeout
        self._background_task: asyncio.Task[None] | None = None
        self._shutdown = False

        self._pending: dict[int, list[Row]] = {}
        self._next_sequence = 0
        self._rows_written = 0

    @property
    def rows_written(self) -> int:
        return self._rows_written

    def _open(self) -> TextIO:
        if isinstance(self._target, Path):
            self._target.parent.mkdir(parents=True, exist_ok=True)
            self._owns_stream = True
            return open(self._target, "w", encoding="utf-8", newline="")
        return self._target if self._target is not None else sys.stdout

    @staticmethod
    def _format(rows: Sequence[Row]) -> str:
        buffer = io.StringIO()
        writer = csv.writer(buffer, lineterminator="\n")
        writer.writerows(rows)
        return buffer.getvalue()

    async def write(self, sequence: int, rows: Sequence[Row]) -> None:
        """Enqueue the rows belonging to one sequence number (possibly none)."""
        await self._queue.put((sequence, list(rows)))

    async def start(self) -> None:
        """Open the target, write the header and start the background task."""
        if self._background_task is None:
            self._stream = await asyncio.to_thread(self._open)
            await self._write_text(self._format([self._header]))
            self._shutdown = False
            self._background_task = asyncio.create_task(self._background_writer())
            logger.info(f"Report writer started (batch_size={self._batch_size}, timeout={self._batch_timeout}s)")

    async def stop(self) -> None:
        """Drain the queue, write everything still held back and close the target."""
        if self._background_task:
            self._shutdown = True
            await self._queue.put(None)
            await self._background_task
            self._background_task = None
            await self._flush_remaining()
            if self._stream is not None:
                await asyncio.to_thread(self._close)
            logger.info(f"Report writer stopped ({self._rows_written} rows)")

    async def __aenter__(self) -> "ReportWriter":
        await self.start()
        return self

    async def __aexit__(self, *exc_info: object) -> None:
        await self.stop()

    async def _background_writer(self) -> None:
        """Consume the queue and write whatever prefix of the sequence is complete."""
        while not self._shutdown:
            try:
                batch = await self._collect_batch()
                if batch:
                    await self._write_batch(batch)
            except Exception as e:
                logger.error(f"Error in background writer: {e}", exc_info=True)

        # Items queued ahead of the sentinel are already consumed; pick up any that raced it.
        tail: list[tuple[int, list[Row]]] = []
        while not self._queue.empty():
            item = self._queue.get_nowait()
            if item is not None:
                tail.append(item)
        if tail:
            await self._write_batch(tail)

    async def _collect_batch(self) -> list[tuple[int, list[Row]]]:
        batch: list[tuple[int, list[Row]]] = []
        try:
            item = await asyncio.wait_for(self._queue.get(), timeout=self._batch_timeout)
            if item is None:
                self._shutdown = True
                return batch
            batch.append(item)
            while len(batch) < self._batch_size:
                try:
                    item = self._queue.get_nowait()
                except asyncio.QueueEmpty:
                    break
                if item is None:
                    self._shutdown = True
                    return batch
                batch.append(item)
        except TimeoutError:
            pass
        return batch

    async def _write_batch(self, batch: list[tuple[int, list[Row]]]) -> None:
        for sequence, rows in batch:
            if sequence < self._next_sequence or sequence in self._pending:
                logger.warning(f"Duplicate sequence number {sequence} dropped")
                continue
            self._pending[sequence] = rows

        ready: list[Row] = []
        while self._next_sequence in self._pending:
            ready.extend(self._pending.pop(self._next_sequence))
            self._next_sequence += 1
        if ready:
            await self._write_text(self._format(ready))
            self._rows_written += len(ready)
            logger.debug(f"Wrote {len(ready)} rows (next sequence {self._next_sequence})")

    async def _flush_remaining(self) -> None:
        """Write rows stuck behind a missing sequence number, in sequence order."""
        if not self._pending:
            return
        logger.warning(
            f"Sequence gap at {self._next_sequence}; flushing {len(self._pending)} held-back items"
        )
        ready: list[Row] = []
        for sequence in sorted(self._pending):
            ready.extend(self._pending[sequence])
        self._pending.clear()
        await self._write_text(self._format(ready))
        self._rows_written += len(ready)

    async def _write_text(self, text: str) -> None:
        async with self._write_lock:
            await asyncio.to_thread(self._write_blocking, text)

    def _write_blocking(self, text: str) -> None:
        assert self._stream is not None
        self._stream.write(text)
        self._stream.flush()

    def _close(self) -> None:
        if self._stream is not None and self._owns_stream:
            self._stream.close()
        self._stream = None
