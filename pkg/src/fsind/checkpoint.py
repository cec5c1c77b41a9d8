"""Resumable (i, m) task store for long runs.

Each finished task is one JSON object file named by the SHA-256 of its bytes,
under ``<root>/n<n>/objects``. ``manifest.json`` maps task keys to object
names. Only the owning process writes; readers may load objects at any time.
"""

from __future__ import annotations

import hashlib
import json
import os
import shutil
import tempfile
import time
from concurrent.futures import ProcessPoolExecutor, as_completed
from dataclasses import asdict, dataclass, field
from pathlib import Path
from typing import Callable, Iterable

from .engine import ClassBlock, IndicatorMatrix, get_engine


class CheckpointConflict(RuntimeError):
    """A recomputed task disagrees with its stored result."""


class TimeBudgetExceeded(RuntimeError):
    pass


@dataclass(frozen=True)
class Checkpoint:
    n: int
    i: int
    u: str
    m: int
    values: tuple[int, ...]
    signature: str

    def to_bytes(self) -> bytes:
        d = asdict(self)
        d["values"] = list(self.values)
        return (json.dumps(d, sort_keys=True, indent=1) + "\n").encode()

    @classmethod
    def from_bytes(cls, raw: bytes) -> "Checkpoint":
        d = json.loads(raw)
        return cls(int(d["n"]), int(d["i"]), str(d["u"]), int(d["m"]),
                   tuple(int(v) for v in d["values"]), str(d["signature"]))


def _atomic_write(path: Path, data: bytes) -> None:
    path.parent.mkdir(parents=True, exist_ok=True)
    fd, tmp = tempfile.mkstemp(dir=path.parent, prefix=".tmp-")
    with os.fdopen(fd, "wb") as fh:
        fh.write(data)
        fh.flush()
        os.fsync(fh.fileno())
    os.replace(tmp, path)


class CheckpointStore:
    def __init__(self, root: str | os.PathLike, n: int):
        self.n = n
        self.dir = Path(root) / f"n{n}"
        self.objects = self.dir / "objects"
        self.quarantine_dir = self.dir / "quarantine"
        self.manifest_path = self.dir / "manifest.json"
        self.objects.mkdir(parents=True, exist_ok=True)
        self.manifest: dict[str, str] = self._load_manifest()

    @staticmethod
    def key(i: int, m: int) -> str:
        return f"{i}:{m}"

    def _load_manifest(self) -> dict[str, str]:
        if not self.manifest_path.exists():
            return {}
        try:
            data = json.loads(self.manifest_path.read_text())
            return dict(data["tasks"])
        except (ValueError, KeyError, TypeError):
            self._quarantine(self.manifest_path)
            return {}

    def _save_manifest(self) -> None:
        body = json.dumps({"n": self.n, "tasks": dict(sorted(self.manifest.items()))}, indent=1, sort_keys=True)
        _atomic_write(self.manifest_path, (body + "\n").encode())

    def _quarantine(self, path: Path) -> None:
        self.quarantine_dir.mkdir(parents=True, exist_ok=True)
        if path.exists():
            shutil.move(str(path), self.quarantine_dir / f"{path.name}.{time.time_ns()}")

    def _drop(self, key: str) -> None:
        obj = self.manifest.pop(key, None)
        if obj:
            self._quarantine(self.objects / f"{obj}.json")
        self._save_manifest()

    def get(self, i: int, m: int, signature: str | None = None) -> Checkpoint | None:
        """A verified checkpoint, or None. Damaged or stale entries are quarantined."""
        key = self.key(i, m)
        obj = self.manifest.get(key)
        if obj is None:
            return None
        path = self.objects / f"{obj}.json"
        try:
            raw = path.read_bytes()
            if hashlib.sha256(raw).hexdigest() != obj:
                raise ValueError("content hash mismatch")
            cp = Checkpoint.from_bytes(raw)
            if (cp.n, cp.i, cp.m) != (self.n, i, m):
                raise ValueError("checkpoint key mismatch")
        except (OSError, ValueError, KeyError, TypeError):
            self._drop(key)
            return None
        if signature is not None and cp.signature != signature:
            self._drop(key)
            return None
        return cp

    def put(self, cp: Checkpoint) -> bool:
        """Store a result; False if an equal one is already stored, CheckpointConflict if it differs."""
        old = self.get(cp.i, cp.m)
        if old is not None:
            if old.values != cp.values or old.signature != cp.signature:
                raise CheckpointConflict(f"task {cp.i}:{cp.m} recomputed with different values")
            return False
        raw = cp.to_bytes()
        obj = hashlib.sha256(raw).hexdigest()
        _atomic_write(self.objects / f"{obj}.json", raw)
        self.manifest[self.key(cp.i, cp.m)] = obj
        self._save_manifest()
        return True

    def completed(self) -> set[str]:
        return set(self.manifest)


@dataclass
class ChunkedRun:
    n: int
    computed: list[tuple[int, int]] = field(default_factory=list)
    skipped: list[tuple[int, int]] = field(default_factory=list)
    matrix: IndicatorMatrix | None = None

    @property
    def complete(self) -> bool:
        return self.matrix is not None


def all_tasks(n: int) -> list[tuple[int, int]]:
    ctx = get_engine(n).ctx
    return [(i, m) for i in range(1, len(ctx.class_reps) + 1) for m in ctx.divisors]


def _task(args) -> tuple[int, int, list[int], str]:
    n, i, m = args
    eng = get_engine(n)
    values = eng.column(i, m)
    return i, m, values, eng.table(eng.ctx.rep(i)).signature


def run_chunked(n: int, root: str | os.PathLike, resume: bool = True, jobs: int = 1,
                max_tasks: int | None = None, order: Iterable[tuple[int, int]] | None = None,
                time_budget: float | None = None,
                progress: Callable[[int, int], None] | None = None) -> ChunkedRun:
    """Run every (i, m) task through the store, then assemble the matrix if all are done.

    With ``resume`` verified tasks are skipped; otherwise they are recomputed and
    compared. ``max_tasks`` stops after that many computations, as an interruption would.
    """
    store = CheckpointStore(root, n)
    eng = get_engine(n)
    run = ChunkedRun(n)
    tasks = list(order) if order is not None else all_tasks(n)
    todo = []
    for i, m in tasks:
        sig = eng.table(eng.ctx.rep(i)).signature
        if resume and store.get(i, m, sig) is not None:
            run.skipped.append((i, m))
        else:
            todo.append((i, m))
    if max_tasks is not None:
        todo = todo[:max_tasks]
    start = time.monotonic()

    def record(i: int, m: int, values: list[int], sig: str) -> None:
        cp = Checkpoint(n, i, str(eng.ctx.rep(i)), m, tuple(values), sig)
        store.put(cp)
        run.computed.append((i, m))
        if progress:
            progress(len(run.computed), len(todo))
        if time_budget is not None and time.monotonic() - start > time_budget:
            raise TimeBudgetExceeded(f"time budget of {time_budget}s used after {len(run.computed)} tasks")

    if jobs > 1 and todo:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            futures = [pool.submit(_task, (n, i, m)) for i, m in todo]
            for fut in as_completed(futures):
                record(*fut.result())
    else:
        for i, m in todo:
            record(*_task((n, i, m)))
    run.matrix = assemble(n, root)
    return run


def assemble(n: int, root: str | os.PathLike) -> IndicatorMatrix | None:
    """The full matrix from stored tasks, or None while any task is missing."""
    store = CheckpointStore(root, n)
    eng = get_engine(n)
    ctx = eng.ctx
    blocks = []
    for i in range(1, len(ctx.class_reps) + 1):
        u = ctx.rep(i)
        sig = eng.table(u).signature
        cols = []
        for m in ctx.divisors:
            cp = store.get(i, m, sig)
            if cp is None:
                return None
            cols.append(cp.values)
        rows = tuple(tuple(r) for r in zip(*cols))
        blocks.append(ClassBlock(i, u, rows, sig))
    return IndicatorMatrix(n, ctx.exponent, tuple(ctx.divisors), tuple(blocks))
