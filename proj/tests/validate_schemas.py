#!/usr/bin/env python3
"""Validate CLI output and acceptance artifacts against schemas/*.json."""

import argparse
import json
import pathlib
import subprocess
import sys

import jsonschema
from referencing import Registry, Resource

CLI_CASES = [
    ("group", ["group", "--kind", "tetrahedral", "--binary"]),
    ("group", ["group", "--kind", "dihedral", "-n", "3"]),
    ("group", ["group", "--kind", "octahedral", "--bipolyhedral"]),
    ("chartable", ["chartable", "--kind", "icosahedral", "--binary"]),
    ("chartable", ["chartable", "--kind", "dihedral", "-n", "4"]),
    ("quiver", ["quiver", "--kind", "cyclic", "-n", "4", "--binary", "--reduced"]),
    ("quiver", ["quiver", "--kind", "octahedral", "--binary"]),
    ("coinv", ["coinv", "--kind", "dihedral", "-n", "2", "--binary"]),
    ("curves", ["curves", "--kind", "cyclic", "-n", "3", "--dim", "2"]),
    ("curves", ["curves", "--kind", "tetrahedral", "--dim", "3"]),
    ("graph", ["graph", "--kind", "dihedral", "-n", "3", "--binary"]),
    ("contract", ["contract", "--kind", "cyclic", "-n", "2", "--gen", "x*y", "--gen", "x^2", "--gen", "y^3 - x"]),
    ("contract", ["contract", "--kind", "dihedral", "-n", "2", "--random", "4"]),
    ("verify", ["verify", "--kind", "cyclic", "-n", "3"]),
    ("run_config", ["verify", "--kind", "dihedral", "-n", "5", "--samples", "1:0", "0:1", "1:1", "3:5", "--dump-config"]),
]

ARTIFACT_PREFIX = {
    "group_": "group",
    "chartable_": "chartable",
    "quiver_": "quiver",
    "coinv_": "coinv",
    "curves_": "curves",
    "verify_": "verify",
    "random_contractions": "random_contractions",
}


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--schemas", required=True)
    ap.add_argument("--cli", required=True)
    ap.add_argument("--artifacts")
    args = ap.parse_args()

    schemas = {}
    registry = Registry()
    for p in sorted(pathlib.Path(args.schemas).glob("*.json")):
        doc = json.loads(p.read_text())
        schemas[p.stem] = doc
        registry = registry.with_resource(p.name, Resource.from_contents(doc))

    def check(kind, doc, where):
        v = jsonschema.Draft7Validator(schemas[kind], registry=registry)
        errs = sorted(v.iter_errors(doc), key=lambda e: list(e.path))
        for e in errs[:5]:
            print(f"FAIL {where}: {'/'.join(map(str, e.path))}: {e.message}")
        return not errs

    ok = True
    checked = 0
    for kind, argv in CLI_CASES:
        res = subprocess.run([args.cli] + argv, capture_output=True, text=True)
        if res.returncode != 0:
            print(f"FAIL {' '.join(argv)}: exit {res.returncode}: {res.stderr.strip()}")
            ok = False
            continue
        ok &= check(kind, json.loads(res.stdout), " ".join(argv))
        checked += 1

    # the config dump must read back to the same config
    dumped = subprocess.run([args.cli] + CLI_CASES[-1][1], capture_output=True, text=True, check=True).stdout
    cfg = pathlib.Path("roundtrip_config.json")
    cfg.write_text(dumped)
    again = subprocess.run([args.cli, "verify", "--config", str(cfg), "--dump-config"],
                           capture_output=True, text=True, check=True).stdout
    if again != dumped:
        print("FAIL run config round trip")
        ok = False

    if args.artifacts:
        for p in sorted(pathlib.Path(args.artifacts).glob("*.json")):
            kind = next((k for pre, k in ARTIFACT_PREFIX.items() if p.name.startswith(pre)), None)
            if kind is None:
                print(f"FAIL no schema for artifact {p.name}")
                ok = False
                continue
            ok &= check(kind, json.loads(p.read_text()), p.name)
            checked += 1

    print(f"{checked} documents checked: {'PASS' if ok else 'FAIL'}")
    return 0 if ok else 1


if __name__ == "__main__":
    sys.exit(main())
