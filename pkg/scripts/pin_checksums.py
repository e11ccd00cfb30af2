"""Regenerate the sha256 pins in symdesign/catalog.py from the data files."""

import hashlib
import re
import sys
from pathlib import Path

ROOT = Path(__file__).resolve().parent.parent
DATA = ROOT / "src" / "symdesign" / "data"
CATALOG = ROOT / "src" / "symdesign" / "catalog.py"


def main():
    pins = {}
    for path in sorted(DATA.iterdir()):
        pins[path.name] = hashlib.sha256(path.read_text().encode()).hexdigest()
    block = "_CHECKSUMS = {\n"
    for name, digest in pins.items():
        block += f'    "{name}": "{digest}",\n'
    block += "}"
    source = CATALOG.read_text()
    new = re.sub(r"_CHECKSUMS = \{.*?\}", block, source, count=1, flags=re.S)
    if new == source:
        print("checksums already pinned")
        return 0
    CATALOG.write_text(new)
    print(f"pinned {len(pins)} checksums")
    return 0


if __name__ == "__main__":
    sys.exit(main())
