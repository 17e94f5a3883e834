"""Validates shipped scenarios and generated reports against the JSON schemas."""

import json
import pathlib
import subprocess
import sys

import jsonschema


def main() -> int:
    check, root = sys.argv[1], pathlib.Path(sys.argv[2])
    scenario_schema = json.loads((root / "schema/scenario.schema.json").read_text())
    report_schema = json.loads((root / "schema/report.schema.json").read_text())
    scenarios = sorted((root / "scenarios").glob("*.json"))
    for path in scenarios:
        jsonschema.validate(json.loads(path.read_text()), scenario_schema)
    runs = [["--suite", s] for s in ("mitosis", "gl-z2", "m-implies-czc", "wreath-cznc", "product-cc")]
    runs += [["--scenario", str(p)] for p in scenarios]
    runs.append(["--scenario", str(root / "tests/data/violated.json")])
    for args in runs:
        out = subprocess.run([check, *args], capture_output=True, text=True, check=False)
        jsonschema.validate(json.loads(out.stdout), report_schema)
    print(f"{len(scenarios)} scenarios and {len(runs)} reports valid")
    return 0


if __name__ == "__main__":
    sys.exit(main())
