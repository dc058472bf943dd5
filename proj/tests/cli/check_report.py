"""Runs a permorbit subcommand in both formats, validates the JSON report
against the schema and checks that the text report lists the same checks."""

import json
import subprocess
import sys

import jsonschema


def main() -> int:
    binary, schema_path, *args = sys.argv[1:]
    with open(schema_path) as f:
        schema = json.load(f)
    as_json = subprocess.run([binary, "--format", "json", "--no-timings", *args], capture_output=True, text=True)
    as_text = subprocess.run([binary, "--no-timings", *args], capture_output=True, text=True)
    if as_json.returncode != as_text.returncode:
        print(f"exit codes differ: json {as_json.returncode}, text {as_text.returncode}")
        return 1
    report = json.loads(as_json.stdout)
    jsonschema.validate(report, schema)

    lines = as_text.stdout.splitlines()
    body = [line for line in lines if line.startswith("[")]
    if len(body) != len(report["checks"]):
        print(f"text has {len(body)} checks, json has {len(report['checks'])}")
        return 1
    for line, check in zip(body, report["checks"]):
        prefix = f"[{check['status']}]"
        if not line.startswith(prefix) or line[10:].split(":")[0] != check["name"].split(":")[0]:
            print(f"mismatch: {line!r} vs {check['name']!r} {check['status']}")
            return 1
    if not lines[-1].startswith(report["status"] + ":"):
        print(f"footer {lines[-1]!r} disagrees with status {report['status']}")
        return 1

    again = subprocess.run([binary, "--format", "json", "--no-timings", *args], capture_output=True, text=True)
    if again.stdout != as_json.stdout:
        print("output differs between runs")
        return 1
    print(f"{len(body)} checks, status {report['status']}")
    return as_json.returncode


if __name__ == "__main__":
    sys.exit(main())
