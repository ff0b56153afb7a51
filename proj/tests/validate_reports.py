"""Runs the hk binary on a few problems and validates the JSON reports."""
import json
import subprocess
import sys

try:
    import jsonschema
except ImportError:
    print("jsonschema not installed; skipping")
    sys.exit(0)

binary, schema_path = sys.argv[1], sys.argv[2]
with open(schema_path) as f:
    schema = json.load(f)

problems = [
    ("puiseux", "T^2 - X\n", 0),
    ("limit", "X*T - 1\n", 0),
    ("qordinary", "T^2 - (X1 + X2)\n", 0),
    ("hensel", "X1 + X1^2 - t\nX2 + X1*X2\n", 0),
    ("slope-check", "T^2 - X*(1 + X)\nks: 2, 4\n", 0),
    ("puiseux", "poly: T^2 -\n", 1),
    ("split", "T^2 - X^2\n", 2),
]
failed = 0
for command, text, code in problems:
    run = subprocess.run([binary, command, "--json", "-"], input=text, capture_output=True, text=True)
    try:
        jsonschema.validate(json.loads(run.stdout), schema)
        ok = run.returncode == code
    except Exception as e:  # noqa: BLE001
        print(e)
        ok = False
    print(("ok   " if ok else "FAIL ") + command + " " + text.strip().replace("\n", " | "))
    failed += not ok
sys.exit(1 if failed else 0)
