"""Rewrite tests/golden/*.json from the current CLI.

Run only after checking the values independently; the golden test compares
CLI output byte-for-byte against these files.
"""

import contextlib
import io
import sys
from pathlib import Path

from skewspec.cli import main

ROOT = Path(__file__).resolve().parents[1]
sys.path.insert(0, str(ROOT / "tests"))

from golden_cases import CASES  # noqa: E402

DATA = ROOT / "tests" / "data"
GOLDEN = ROOT / "tests" / "golden"



def run(argv):
    buf = io.StringIO()
    with contextlib.redirect_stdout(buf):
        code = main(argv)
    return buf.getvalue(), code


if __name__ == "__main__":
    GOLDEN.mkdir(exist_ok=True)
    for name, (cmd, fname, *rest) in CASES.items():
        out, _ = run([cmd, str(DATA / fname), "--no-timing", *rest])
        (GOLDEN / f"{name}.json").write_text(out, encoding="utf-8")
        print(name)
