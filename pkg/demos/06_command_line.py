# coding: utf-8

# # The command line
#
# Everything above is available as `matroid-splits <command>` (or
# `python -m matroid_splits`). Here the same entry point is driven through
# `run`, which returns the exit code instead of calling sys.exit.

# In[1]:

from __future__ import annotations

import contextlib
import io
import json
import tempfile
from pathlib import Path

from matroid_splits.cli import run

U52 = '{"format": "matroid/v1", "uniform": {"n": 5, "r": 2}}'

# In[2]:

print("exit", run(["check", U52]))
print("exit", run(["dim", '{"format": "matroid/v1", "catalog": "fano"}']))

# A search writes self-contained reports. Each one embeds the input matroid,
# its digest and the verification result, so it can be re-checked later.

# In[3]:

with tempfile.TemporaryDirectory() as tmp:
    out = Path(tmp) / "reports.json"
    buf = io.StringIO()
    with contextlib.redirect_stdout(buf):
        code = run(["splits", "--all", U52])
    out.write_text(buf.getvalue())
    reports = json.loads(buf.getvalue())
    print("exit", code, "->", len(reports), "reports")
    print(json.dumps(reports[0]["hyperplane"]))
    with contextlib.redirect_stdout(io.StringIO()):
        code = run(["verify-split", "--report", str(out)])
    print("verify-split exit", code)

# Exit codes: 0 success, 1 usage error, 2 invalid input or failed
# verification, 3 input larger than the desk-scale guard.

# In[4]:

print(run(["check", '{"format": "matroid/v1", "n": 4, "bases": [[1, 2], [3, 4]]}']))
print(run(["build", "--uniform", "40", "2"]))
