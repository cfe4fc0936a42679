#!/usr/bin/env python3
"""Validate a campaign report against the JSON schema.

Usage: validate_report.py SCHEMA REPORT
Exit 0 if valid, 1 if invalid, 77 if jsonschema is not installed.
"""
import json
import sys


def main() -> int:
    if len(sys.argv) != 3:
        print(__doc__.strip(), file=sys.stderr)
        return 2
    try:
        import jsonschema
    except ImportError:
        print("jsonschema not available", file=sys.stderr)
        return 77
    with open(sys.argv[1]) as f:
        schema = json.load(f)
    with open(sys.argv[2]) as f:
        report = json.load(f)
    try:
        jsonschema.validate(report, schema)
    except jsonschema.ValidationError as e:
        print(f"invalid: {e.message} at {list(e.absolute_path)}", file=sys.stderr)
        return 1
    return 0


if __name__ == "__main__":
    sys.exit(main())
