#!/usr/bin/env python
"""Regenerate the matrix files shipped with the package from the built-ins."""

import json
from pathlib import Path

from paramat.matrix import BUILTIN_NAMES, builtin, matrix_to_document


def main() -> None:
    out_dir = Path(__file__).resolve().parent.parent / "src" / "paramat" / "matrices"
    out_dir.mkdir(exist_ok=True)
    for name in BUILTIN_NAMES:
        document = matrix_to_document(builtin(name))
        path = out_dir / f"{name}.matrix"
        path.write_text(json.dumps(document, sort_keys=True, indent=2) + "\n")
        print(f"wrote {path}")


if __name__ == "__main__":
    main()
