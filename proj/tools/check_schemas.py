#!/usr/bin/env python3
"""Validates the fixture corpus (and any extra result files) against schemas/."""
import json
import pathlib
import sys

import jsonschema
from referencing import Registry, Resource

root = pathlib.Path(__file__).resolve().parent.parent
schemas = {p.name: json.loads(p.read_text()) for p in (root / "schemas").glob("*.schema.json")}
registry = Registry().with_resources((name, Resource.from_contents(s)) for name, s in schemas.items())


def validator(name):
    return jsonschema.Draft202012Validator(schemas[name + ".schema.json"], registry=registry)


def check(path):
    doc = json.loads(path.read_text())
    if path.name == "batch.json":
        kind = "batch"
    elif isinstance(doc, dict) and "error" in doc:
        kind = "error"
    elif isinstance(doc, dict) and "results" in doc:
        kind = "batch_result"
    else:
        kind = doc["command"]
    errors = list(validator(kind).iter_errors(doc))
    for e in errors:
        print(f"{path.name}: {'/'.join(map(str, e.absolute_path))}: {e.message}")
    return not errors


files = [pathlib.Path(a) for a in sys.argv[1:]] or sorted((root / "tests" / "fixtures").glob("*.json"))
bad = [f for f in files if not check(f)]
print(f"{len(files) - len(bad)}/{len(files)} documents valid")
sys.exit(1 if bad or not files else 0)
