# filepath: pinpoint/core/tasks.py
"""
Task management for batches of pinpointing queries.
Runs independent queries (one per goal/method) on a worker pool and keeps
status bookkeeping so failed queries are reported instead of aborting a bench run.
"""

import asyncio
import logging
import traceback
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from datetime import datetime, timezone
from enum import Enum
from typing import Any, Callable, Dict, List, Optional

logger = logging.getLogger(__name__)


class TaskStatus(str, Enum):
    PENDING = "pending"
    RUNNING = "running"
    COMPLETED = "completed"
    FAILED = "failed"
    CANCELLED = "cancelled"


@dataclass
class TaskInfo:
    """Information about a submitted query"""
    task_id: str
    task_type: str
    status: TaskStatus
    created_at: datetime
    started_at: Optional[datetime] = None
    completed_at: Optional[datetime] = None
    result: Any = None
    error: Optional[str] = None
    exception: Optional[BaseException] = field(default=None, repr=False)
    labels: Dict[str, str] = field(default_factory=dict)


class TaskManager:
    """Collects tasks, then runs them all on a bounded pool"""

    def __init__(self, workers: int = 1):
        self.workers = max(1, workers)
        self._tasks: Dict[str, TaskInfo] = {}
        self._funcs: Dict[str, Callable[[], Any]] = {}
        self._counters: Dict[str, int] = {}

    def create_task(self, task_func: Callable[[], Any], task_type: str, **labels: str) -> str:
        """Register a task; ids are deterministic (<type>-<n>)"""
        n = self._counters.get(task_type, 0) + 1
        self._counters[task_type] = n
        task_id = f"{task_type}-{n}"

        self._tasks[task_id] = TaskInfo(
            task_id=task_id,
            task_type=task_type,
            status=TaskStatus.PENDING,
            created_at=datetime.now(timezone.utc),
            labels=dict(labels),
        )
        self._funcs[task_id] = task_func
        logger.debug(f"Created task {task_id} {labels}")
        return task_id

    def run_all(self) -> List[TaskInfo]:
        """Run every pending task and return their infos in creation order"""
        pending = [tid for tid, info in self._tasks.items() if info.status == TaskStatus.PENDING]
        if not pending:
            return list(self._tasks.values())
        asyncio.run(self._run_pending(pending))
        return list(self._tasks.values())

    async def _run_pending(self, task_ids: List[str]):
        loop = asyncio.get_running_loop()
        with ThreadPoolExecutor(max_workers=self.workers) as executor:
            await asyncio.gather(*(self._run_task(loop, executor, tid) for tid in task_ids))

    async def _run_task(self, loop, executor, task_id: str):
        """Execute one task in the pool"""
        task_info = self._tasks[task_id]
        task_func = self._funcs.pop(task_id)

        try:
            task_info.status = TaskStatus.RUNNING
            task_info.started_at = datetime.now(timezone.utc)
            logger.debug(f"Starting execution of task {task_id}")

            result = await loop.run_in_executor(executor, task_func)

            task_info.status = TaskStatus.COMPLETED
            task_info.completed_at = datetime.now(timezone.utc)
            task_info.result = result
            logger.debug(f"Task {task_id} completed successfully")

        except asyncio.CancelledError:
            task_info.status = TaskStatus.CANCELLED
            task_info.completed_at = datetime.now(timezone.utc)
            logger.info(f"Task {task_id} was cancelled")

        except Exception as e:
            task_info.status = TaskStatus.FAILED
            task_info.completed_at = datetime.now(timezone.utc)
            task_info.error = str(e)
            task_info.exception = e
            logger.error(f"Task {task_id} failed: {str(e)}")
            logger.error(f"Traceback: {traceback.format_exc()}")

    def get_task_status(self, task_id: str) -> Optional[TaskInfo]:
        """Get the current status of a task"""
        return self._tasks.get(task_id)

    def failed(self) -> List[TaskInfo]:
        return [t for t in self._tasks.values() if t.status == TaskStatus.FAILED]


# Task type constants
class TaskTypes:
    BLACKBOX = "blackbox"
    MUSMEM = "musmem"
    BRUTE = "brute"
