"""Resumable runs with a checkpoint store.

Each (class, m) task is written as a content-addressed JSON object. An
interrupted run picks up where it stopped and the assembled matrix is the same
as a single-pass computation.
"""

import tempfile

from fsind import compute_matrix
from fsind.checkpoint import run_chunked

with tempfile.TemporaryDirectory() as store:
    first = run_chunked(6, store, max_tasks=50)      # stands in for an interruption
    print(f"first pass: {len(first.computed)} tasks, complete = {first.complete}")
    second = run_chunked(6, store, resume=True)
    print(f"resumed: {len(second.computed)} computed, {len(second.skipped)} reused")
    print("matches single pass:", second.matrix == compute_matrix(6))
