#!/usr/bin/env python3
"""Validate paracr JSON output documents against the shipped schema.

Usage: validate_json.py SCHEMA FILE [FILE ...]
A FILE of "-" reads standard input.  Exit status 0 when every document is
valid, 1 otherwise.
"""

import json
import sys

import jsonschema


def main(argv):
    if len(argv) < 3:
        print(__doc__.strip(), file=sys.stderr)
        return 2
    with open(argv[1], encoding="utf-8") as f:
        schema = json.load(f)
    validator = jsonschema.Draft202012Validator(schema)
    ok = True
    for path in argv[2:]:
        if path == "-":
            doc = json.load(sys.stdin)
        else:
            with open(path, encoding="utf-8") as f:
                doc = json.load(f)
        errors = sorted(validator.iter_errors(doc), key=lambda e: list(e.path))
        for e in errors[:5]:
            where = "/".join(str(p) for p in e.path)
            print(f"{path}: {where}: {e.message}", file=sys.stderr)
        if errors:
            ok = False
    return 0 if ok else 1


if __name__ == "__main__":
    sys.exit(main(sys.argv))
