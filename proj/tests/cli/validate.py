# Copyright 2026 The furdyn Authors
#
# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
#
#     http://www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.


"""Validate emitted JSON against the shipped schemas and check reruns match byte for byte."""

import argparse
import filecmp
import json
import pathlib
import subprocess
import sys

import jsonschema


def load(path: pathlib.Path):
    with open(path, encoding="utf-8") as fh:
        return json.load(fh)


def validate_dir(out: pathlib.Path, schemas: pathlib.Path) -> int:
    report = load(schemas / "report.schema.json")
    selftest = load(schemas / "selftest.schema.json")
    files = sorted(out.glob("*.json"))
    if not files:
        print(f"no JSON files in {out}")
        return 1
    bad = 0
    for f in files:
        schema = selftest if f.name.startswith("selftest__") else report
        try:
            jsonschema.validate(load(f), schema)
        except jsonschema.ValidationError as e:
            print(f"{f.name}: {e.message}")
            bad += 1
    print(f"{len(files) - bad}/{len(files)} files valid")
    return 1 if bad else 0


def main() -> int:
    ap = argparse.ArgumentParser()
    ap.add_argument("--schemas", required=True, type=pathlib.Path)
    ap.add_argument("--config", type=pathlib.Path, help="config file to validate as well")
    ap.add_argument("--out", required=True, type=pathlib.Path)
    ap.add_argument("--rerun", action="store_true", help="run the command twice and compare outputs")
    ap.add_argument("--rerun-extra", default="", help="extra arguments for the second run only")
    ap.add_argument("cmd", nargs=argparse.REMAINDER)
    args = ap.parse_args()
    cmd = args.cmd[1:] if args.cmd and args.cmd[0] == "--" else args.cmd

    if args.config:
        jsonschema.validate(load(args.config), load(args.schemas / "config.schema.json"))

    runs = [args.out / "a", args.out / "b"] if args.rerun else [args.out]
    for i, d in enumerate(runs):
        extra = args.rerun_extra.split() if i == 1 else []
        proc = subprocess.run(cmd + ["--out", str(d)] + extra, capture_output=True, text=True)
        sys.stdout.write(proc.stdout)
        if proc.returncode != 0:
            sys.stderr.write(proc.stderr)
            print(f"command exited {proc.returncode}")
            return 1
    status = validate_dir(runs[0], args.schemas)
    if args.rerun:
        names = sorted(p.name for p in runs[0].iterdir())
        _, mismatch, errors = filecmp.cmpfiles(runs[0], runs[1], names, shallow=False)
        if mismatch or errors:
            print(f"reruns differ: {mismatch + errors}")
            return 1
        print(f"{len(names)} files byte-identical across reruns")
    return status


if __name__ == "__main__":
    sys.exit(main())
