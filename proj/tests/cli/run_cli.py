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


"""Run a command and check its exit status and output."""

import argparse
import re
import subprocess
import sys


def main() -> int:
    ap = argparse.ArgumentParser()
    ap.add_argument("--exit", type=int, default=0, dest="want_exit")
    ap.add_argument("--stdout", action="append", default=[], help="regex that stdout must match")
    ap.add_argument("--stderr", action="append", default=[], help="regex that stderr must match")
    ap.add_argument("cmd", nargs=argparse.REMAINDER)
    args = ap.parse_args()
    cmd = args.cmd[1:] if args.cmd and args.cmd[0] == "--" else args.cmd
    proc = subprocess.run(cmd, capture_output=True, text=True)
    sys.stdout.write(proc.stdout)
    sys.stderr.write(proc.stderr)
    ok = True
    if proc.returncode != args.want_exit:
        print(f"exit status {proc.returncode}, wanted {args.want_exit}")
        ok = False
    for pat in args.stdout:
        if not re.search(pat, proc.stdout, re.M):
            print(f"stdout does not match {pat!r}")
            ok = False
    for pat in args.stderr:
        if not re.search(pat, proc.stderr, re.M):
            print(f"stderr does not match {pat!r}")
            ok = False
    return 0 if ok else 1


if __name__ == "__main__":
    sys.exit(main())
