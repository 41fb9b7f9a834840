"""Driving the command-line interface and the DOT export.

Everything the library does is reachable from the `metricdim` command:
classify parameters, build construction sets, verify and analyze landmark
files, search, and render the colored hypergraph for Graphviz.  Landmark
sets travel as small JSON documents; results come back as JSON on stdout
or, with --out, as files (optionally with a manifest describing the run).

This demo shells out to `python3 -m metricdim`, which is the same entry
point as the installed `metricdim` script.
"""

import json
import subprocess
import sys
import tempfile
from pathlib import Path

from metricdim import LandmarkSet, Params, build_landmark_graph, landmark_graph_to_dot


def run(*args: str, expect: int = 0) -> str:
    proc = subprocess.run(
        [sys.executable, "-m", "metricdim", *args],
        capture_output=True,
        text=True,
    )
    assert proc.returncode == expect, (proc.returncode, proc.stderr)
    return proc.stdout


def main() -> None:
    print("$ metricdim classify --n 5,6,11")
    print(run("classify", "--n", "5,6,11"))

    with tempfile.TemporaryDirectory() as tmp:
        out = Path(tmp) / "set.json"
        print(f"$ metricdim construct --n 5,6,11 --trace --out {out.name}")
        run("construct", "--n", "5,6,11", "--trace", "--out", str(out))
        doc = json.loads(out.read_text())
        print(f"  wrote {out.name} with {len(doc['landmarks'])} landmarks "
              f"and sides {set(doc['sides'])}")
        trace = json.loads(Path(str(out) + ".trace.json").read_text())
        print(f"  trace parity: {trace['parity']}, schedule "
              f"{trace['schedule']}")
        print()

        print(f"$ metricdim verify --method both {out.name}")
        print(run("verify", "--method", "both", str(out)))

        print(f"$ metricdim detect {out.name}")
        print(run("detect", str(out)))

        bad = Path(tmp) / "bad.json"
        bad.write_text(json.dumps({
            "n": [3, 3, 3],
            "landmarks": [[1, 1, 1], [2, 2, 1], [3, 2, 2], [1, 3, 2]],
        }))
        print("$ metricdim verify bad.json        (a known doomed set)")
        proc = subprocess.run(
            [sys.executable, "-m", "metricdim", "verify", str(bad)],
            capture_output=True,
            text=True,
        )
        print(f"  exit code {proc.returncode}; stderr: "
              f"{proc.stderr.strip()}")
        print(proc.stdout)

    print("$ metricdim search --n 3,3,3 --mode exhaustive --max-size 6")
    print(run("search", "--n", "3,3,3", "--mode", "exhaustive",
              "--max-size", "6"))

    print("The DOT export draws loops as self-edges, sticks as plain edges,")
    print("and poofy edges as hub nodes, one style per color:")
    p = Params(3, 3, 3)
    lset = LandmarkSet(p, ((1, 1, 1), (2, 2, 1), (3, 2, 2), (1, 3, 2)))
    print(landmark_graph_to_dot(build_landmark_graph(lset)))


if __name__ == "__main__":
    main()
