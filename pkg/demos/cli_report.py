"""Drive the command line in-process and summarize a JSON report.

Run: python3 demos/cli_report.py
"""

import json
import os
import tempfile

from lek.cli import main

with tempfile.TemporaryDirectory() as tmp:
    path = os.path.join(tmp, "periods.json")
    code = main(["verify", "--suite", "periods", "--samples", "2", "--format", "json",
                 "--out", path])
    with open(path, encoding="utf-8") as fh:
        report = json.load(fh)

print("exit status", code)
print("summary", report["summary"])
for row in report["cases"]:
    print(f"  {row['case_id']:<16} pass={row['pass']!s:<5} rel_err={row['rel_err'] or 0:.1e}")

print("\nsingle values:")
for argv in (["eval", "K", "--k", "0.5"], ["eval", "T", "--mu", "0", "--nu", "-0.5"]):
    print(" ", " ".join(argv), "->", end=" ", flush=True)
    main(argv)
