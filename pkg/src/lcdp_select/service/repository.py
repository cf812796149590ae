"""File-backed project repository used by the HTTP service.

Each project is one project file named ``<id>.json`` inside the data
directory. Mutations are serialized per project id with an in-process
lock on top of the store's advisory file lock; readers always see the
last committed file.
"""

from __future__ import annotations

import threading
from collections import defaultdict
from pathlib import Path
from typing import Callable, Iterator

from .. import store
from ..errors import StoreError
from ..model import EvaluationProject


class UnknownProjectError(StoreError):
    pass


class ProjectRepository:
    def __init__(self, data_dir: str | Path):
        self.data_dir = Path(data_dir)
        self.data_dir.mkdir(parents=True, exist_ok=True)
        self._locks: dict[str, threading.Lock] = defaultdict(threading.Lock)
        self._locks_guard = threading.Lock()

    def _lock_for(self, project_id: str) -> threading.Lock:
        with self._locks_guard:
            return self._locks[project_id]

    def _path_for(self, project_id: str) -> Path:
        return self.data_dir / f"{project_id}.json"

    def exists(self, project_id: str) -> bool:
        return self._path_for(project_id).exists() or any(
            pid == project_id for pid in self.ids())

    def ids(self) -> Iterator[str]:
        for path in sorted(self.data_dir.glob("*.json")):
            try:
                yield store.load(path).id
            except StoreError:
                continue

    def get(self, project_id: str) -> EvaluationProject:
        path = self._path_for(project_id)
        if path.exists():
            return store.load(path)
        # Files dropped in by hand may not follow the <id>.json convention.
        for candidate in sorted(self.data_dir.glob("*.json")):
            try:
                project = store.load(candidate)
            except StoreError:
                continue
            if project.id == project_id:
                return project
        raise UnknownProjectError(f"no project with id '{project_id}'")

    def create(self, project: EvaluationProject) -> None:
        with self._lock_for(project.id):
            store.save(project, self._path_for(project.id))

    def replace(self, project: EvaluationProject) -> None:
        self.create(project)

    def mutate(self, project_id: str,
               fn: Callable[[EvaluationProject], None]) -> EvaluationProject:
        """Load, apply ``fn``, persist; serialized per project id."""
        with self._lock_for(project_id):
            project = self.get(project_id)
            fn(project)
            store.save(project, self._path_for(project_id))
            return project
