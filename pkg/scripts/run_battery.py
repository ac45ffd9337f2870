#!/usr/bin/env python3
"""Run the full report battery and export every bundled spectrum graph.

Usage: python scripts/run_battery.py [outdir]   (default: ./battery_out)
"""

from __future__ import annotations

import sys
from pathlib import Path

ROOT = Path(__file__).resolve().parents[1]
sys.path.insert(0, str(ROOT / "src"))

from tgw import fixtures
from tgw.cli import main as cli_main
from tgw.geometry import embed, export_graph
from tgw.ideals import spectrum


def run(outdir: Path) -> int:
    outdir.mkdir(parents=True, exist_ok=True)
    code = cli_main(["report"])
    for name in fixtures.STRUCTURE_NAMES:
        S = fixtures.bundled_structure(name)
        spc = spectrum(S, lenient=True)
        if not spc.points:
            print(f"{name}: empty spectrum, no graph written")
            continue
        graph = embed(S, spc, k=2)
        for fmt in ("json", "dot", "csv"):
            path = outdir / f"{name.lower()}_spectrum.{fmt}"
            path.write_text(export_graph(graph, fmt), encoding="utf-8")
            print(f"wrote {path}")
    return code


if __name__ == "__main__":
    target = Path(sys.argv[1]) if len(sys.argv) > 1 else Path("battery_out")
    sys.exit(run(target))
