"""Run the end-to-end 2-(144,66,30) reconstruction from the embedded data.

Equivalent to ``symdesign reproduce-d1``; exits nonzero if any of the
claimed facts fails to check out.
"""

import sys
from pathlib import Path

sys.path.insert(0, str(Path(__file__).resolve().parent.parent / "src"))

from symdesign.cli import main

if __name__ == "__main__":
    sys.exit(main(["reproduce-d1"]))
