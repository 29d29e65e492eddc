"""Validate the tool's JSON output against docs/report.schema.json.

Usage: check_schema.py <fivecycles binary> <schema file>
Also checks that repeated runs give byte-identical JSON once timing is removed.
"""

import json
import subprocess
import sys

import jsonschema

GRAPHS = {
    "petersen": ":I`ES@obGkqegW~",
    "k4": ":CcKI",
    "prism": ":Ea@aRgs",
    "triple": ":A_",
    "k4_edgelist": "4 6\n0 1\n0 2\n0 3\n1 2\n1 3\n2 3\n",
    "bridged": "10 15\n0 4\n4 1\n0 2\n0 3\n1 2\n1 3\n2 3\n5 9\n9 6\n5 7\n5 8\n6 7\n6 8\n7 8\n4 9\n",
}


def run(tool, args, stdin=""):
    done = subprocess.run([tool, *args, "--output", "json"], input=stdin, capture_output=True, text=True)
    if done.returncode not in (0, 1):
        sys.exit(f"{args} exited {done.returncode}: {done.stderr}")
    return json.loads(done.stdout)


def strip_timing(report):
    for level in report.get("levels", []):
        level.pop("elapsed_seconds", None)
    return report


def main():
    tool, schema_path = sys.argv[1], sys.argv[2]
    with open(schema_path) as f:
        schema = json.load(f)
    validator = jsonschema.Draft202012Validator(schema)

    documents = []
    for name, text in GRAPHS.items():
        for command in ("analyze", "verify"):
            documents.append((f"{command} {name}", run(tool, [command], text + "\n")))
    documents.append(("scan 10", run(tool, ["scan", "--n-max", "10"])))
    documents.append(("scan multi 8", run(tool, ["scan", "--n-max", "8", "--multi"])))

    failures = 0
    for label, doc in documents:
        errors = list(validator.iter_errors(doc))
        for error in errors[:3]:
            print(f"{label}: {error.message} at {list(error.absolute_path)}")
        failures += bool(errors)

    first = strip_timing(run(tool, ["scan", "--n-max", "12", "--jobs", "1"]))
    second = strip_timing(run(tool, ["scan", "--n-max", "12", "--jobs", "3"]))
    if json.dumps(first) != json.dumps(second):
        print("scan output differs between runs")
        failures += 1
    for name, text in GRAPHS.items():
        if run(tool, ["verify"], text + "\n") != run(tool, ["verify"], text + "\n"):
            print(f"verify {name} is not deterministic")
            failures += 1

    print(f"{len(documents)} documents checked, {failures} failures")
    return 1 if failures else 0


if __name__ == "__main__":
    sys.exit(main())
