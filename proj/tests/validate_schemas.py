"""Validate the JSON output of every command against the schemas in schemas/."""

import json
import pathlib
import subprocess
import sys

import jsonschema


def main() -> int:
    cli, root = sys.argv[1], pathlib.Path(sys.argv[2])
    schemas = {p.name.split(".")[0]: json.loads(p.read_text()) for p in (root / "schemas").glob("*.schema.json")}
    catalog = sorted((root / "data" / "catalog").glob("*.pd"))
    examples = sorted((root / "data" / "examples").glob("*.json"))

    runs = []
    for pd in catalog:
        runs.append(("invariants", ["invariants", str(pd)]))
        runs.append(("seifert-check", ["seifert-check", str(pd)]))
        for r in ("1", "2"):
            runs.append(("parallel", ["parallel", str(pd), "-r", r]))
    runs.append(("reconstruct", ["reconstruct", str(root / "data" / "examples" / "triangle_c.json")]))

    failures = 0
    for schema, args in runs:
        proc = subprocess.run([cli, *args, "--format", "json"], capture_output=True, text=True)
        try:
            jsonschema.validate(json.loads(proc.stdout), schemas[schema])
            print(f"ok   {schema}: {' '.join(args[1:])}")
        except (json.JSONDecodeError, jsonschema.ValidationError) as err:
            failures += 1
            print(f"FAIL {schema}: {' '.join(args[1:])}: {str(err).splitlines()[0]}")
    for path in examples:
        try:
            jsonschema.validate(json.loads(path.read_text()), schemas["map"])
            print(f"ok   map: {path.name}")
        except jsonschema.ValidationError as err:
            failures += 1
            print(f"FAIL map: {path.name}: {err.message}")
    return 1 if failures else 0


if __name__ == "__main__":
    sys.exit(main())
