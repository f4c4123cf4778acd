"""Drive the scan harness programmatically and render the SVG chart.

Equivalent to
    szegolyap scan --eps 0.3,0.5,0.65 --z-grid 24 --n 20000 \
        --seed 11 --out scan.csv --svg scan.svg
but called through the library entry point, then a few CSV rows are
echoed.  Outputs land in the current directory.
"""

from szegolyap.cli import main

rc = main([
    "scan",
    "--eps", "0.3,0.5,0.65",
    "--z-grid", "24",
    "--n", "20000",
    "--seed", "11",
    "--out", "scan.csv",
    "--svg", "scan.svg",
])
print("exit code:", rc)

with open("scan.csv") as fh:
    lines = fh.read().splitlines()
print(f"{len(lines) - 1} data rows; first three:")
for line in lines[:4]:
    print(" ", line)
print("chart written to scan.svg")
