"""
The stringvc command
====================

Every stage is exposed as a subcommand reading and writing JSON. Exit
status 0 is success, 2 a rejection with details in the output, 1 misuse.
"""

import json
import subprocess
import sys
import tempfile
from pathlib import Path

from stringvc import io
from stringvc.toolkit import cycle_segments


def stringvc(*args):
    proc = subprocess.run([sys.executable, "-m", "stringvc", *map(str, args)], capture_output=True, text=True)
    return proc.returncode, proc.stdout.strip() or proc.stderr.strip()


work = Path(tempfile.mkdtemp())
io.write_json(work / "c13.seg.json", io.segments_to_json(cycle_segments(13)))

print(stringvc("ingest-segments", work / "c13.seg.json", "-o", work / "c13.rep.json"))
print(stringvc("validate", work / "c13.rep.json"))
status, out = stringvc("vc", work / "c13.rep.json")
print(status, "q =", json.loads(out)["q"])
status, out = stringvc("decide", work / "c13.rep.json", "-k", "6")
print(status, json.loads(out))
print(stringvc("gen", "--seed", "1", "--params", '{"kind": "segments", "count": 2, "box": 10}'))
print(stringvc("frobnicate"))
