"""End-to-end workflow through the command-line interface.

Simulates three related functional samples into CSV files, then drives the
CLI exactly as a shell user would: estimate one pair, build the pairwise
matrix, and emit Hill and chi plot data. Everything happens in a temporary
directory.
"""
import json
import subprocess
import sys
import tempfile
from pathlib import Path

import numpy as np

from ecc import DgpConfig, draw_paired, invert_oracle, write_curve_file


def run(*args):
    cmd = [sys.executable, "-m", "ecc.cli", *args]
    print(f"$ ecc {' '.join(args)}")
    proc = subprocess.run(cmd, capture_output=True, text=True)
    if proc.returncode != 0:
        raise RuntimeError(proc.stderr)
    return proc.stdout


with tempfile.TemporaryDirectory() as tmp:
    tmp = Path(tmp)

    # three margins: a, b strongly related; c nearly unrelated
    rng = np.random.default_rng(606)
    cfg = DgpConfig(rho=invert_oracle(0.85, 3.0), alpha=3.0, n=250, J=60)
    a, b = draw_paired(rng, cfg)
    c, _ = draw_paired(rng, DgpConfig(rho=0.0, alpha=3.0, n=250, J=60))
    for name, sample in (("a", a), ("b", b), ("c", c)):
        write_curve_file(tmp / f"{name}.csv", sample)
    print(f"wrote a.csv, b.csv, c.csv under {tmp}\n")

    out = run("estimate", "--x", str(tmp / "a.csv"), "--y", str(tmp / "b.csv"))
    report = json.loads(out)
    print(f"estimate a~b: rho_hat = {report['rho_xy']:+.3f} with k = {report['k']}\n")

    out = run(
        "pairwise", "--inputs", str(tmp / "a.csv"), str(tmp / "b.csv"), str(tmp / "c.csv"),
        "--json", str(tmp / "meta.json"),
    )
    print("pairwise matrix:\n" + out)

    out = run("hill", "--input", str(tmp / "a.csv"), "--kmax", "80")
    print(f"hill series: {len(out.strip().splitlines()) - 1} rows (k, alpha, lo, hi)")

    out = run("chi", "--x", str(tmp / "a.csv"), "--y", str(tmp / "b.csv"),
              "--qgrid", "0.6:0.95:0.05")
    print(f"chi series:  {len(out.strip().splitlines()) - 1} rows\n")

    meta = json.loads((tmp / "meta.json").read_text())
    strongest = max(meta["pairs"], key=lambda p: p["rho_xy"])
    print(f"strongest pair per metadata: {strongest['a']}~{strongest['b']} "
          f"rho = {strongest['rho_xy']:+.3f}")
