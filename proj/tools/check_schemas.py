#!/usr/bin/env python3
"""Runs skeinlab subcommands and validates their JSON against schemas/.

Usage: check_schemas.py <skeinlab binary> <source dir>
"""

import json
import subprocess
import sys
from pathlib import Path

from jsonschema import Draft202012Validator


def load_schema(root, name):
    schema = json.loads((root / "schemas" / f"{name}.json").read_text())
    Draft202012Validator.check_schema(schema)
    return Draft202012Validator(schema)


def main():
    binary, root = sys.argv[1], Path(sys.argv[2])
    fx = root / "fixtures"
    failures = []

    def run(args, expect_ok=True):
        proc = subprocess.run([binary, *args], capture_output=True, text=True)
        if expect_ok and proc.returncode != 0:
            failures.append(f"{' '.join(args)}: exit {proc.returncode}: {proc.stderr.strip()}")
            return None
        return proc

    cases = [
        (["surface", "info", "--genus", "1"], "surface_info"),
        (["surface", "info", "--genus", "3"], "surface_info"),
        (["lattice", "info", "--genus", "1", "--N", "5"], "lattice_info"),
        (["lattice", "info", "--genus", "2", "--N", "3", "--refined"], "lattice_info"),
        (["qtorus", "selftest", "--genus", "1", "--N", "3"], "qtorus_selftest"),
        (["qtrace", "--curve", "2,1", "--N", "5"], "qtrace"),
        (["qtrace", "--coords", "0,1,1,0,0", "--bruteforce"], "qtrace"),
        (["qtrace", "--curve-file", str(fx / "curve_2_1.json"), "--N", "3"], "qtrace"),
        (["orbit", "--rep", str(fx / "q8_seed_rep.json"), "--points"], "orbit"),
        (["orbit", "--rep", str(fx / "q8_seed_rep.json"), "--gens", str(fx / "twist_generators.json")], "orbit"),
        (["rep", "orbits", "--group", str(fx / "q8_group.json"), "--N", "3"], "rep_orbits"),
        (["rep", "dims", "--cell", "reduced", "--size", "3", "--N", "7"], "rep_dims"),
        (["rep", "lifts", "--rep", str(fx / "reduced_rep.json"), "--N", "5"], "rep_lifts"),
        (["leaf", "classify", "--mat", "[[0,1],[-1,0]]"], "leaf"),
        (["leaf", "classify", "--mat", "[[1,1],[0,1]]"], "leaf"),
        (["leaf", "double", "--g1", "[[2,1],[1,1]]", "--g2", "[[1,0],[0,1]]"], "leaf_double"),
        (["detect", "--genus", "1", "--N", "5", "--curve", "0,1", "--phi", "[[1,1],[0,1]]"], "certificate"),
        (["detect", "--N", "5", "--curve", "0,1", "--phi", "[[1,1],[0,1]]", "--timings"], "certificate"),
        (["detect", "--N", "3", "--curve", "3,1", "--beta", str(fx / "beta_3_-1.json")], "certificate"),
        (["detect", "--N", "3", "--curve", "0,1", "--beta-coords", "1,0,1,1,0", "--cell", "big"], "certificate"),
        (["detect", "--N", "5", "--curve", "2,1", "--phi", "[[1,0],[0,1]]"], "certificate"),
        (["--config", str(fx / "config_n7.json"), "detect", "--curve", "1,0", "--phi", "[[0,-1],[1,0]]"], "certificate"),
        (["selftest"], "selftest"),
    ]
    outputs = {}
    for args, schema in cases:
        proc = run(args)
        if proc is None:
            continue
        doc = json.loads(proc.stdout)
        outputs[tuple(args)] = doc
        errors = sorted(load_schema(root, schema).iter_errors(doc), key=lambda e: list(e.path))
        for e in errors:
            failures.append(f"{' '.join(args)}: {schema}: {list(e.path)}: {e.message}")
        print(f"{'ok  ' if not errors else 'FAIL'} {schema:16} {' '.join(args)}")

    # Input fixtures against their schemas.
    for name, schema in [("q8_seed_rep.json", "rep"), ("reduced_rep.json", "rep"), ("curve_2_1.json", "curve"),
                         ("beta_3_-1.json", "curve"), ("config_n7.json", "config")]:
        for e in load_schema(root, schema).iter_errors(json.loads((fx / name).read_text())):
            failures.append(f"fixture {name}: {e.message}")

    # Documented example values.
    surf = outputs[("surface", "info", "--genus", "1")]
    if (surf["faces"], surf["edges"]) != (3, 5):
        failures.append("surface info --genus 1 should report 3 faces and 5 edges")
    lat = outputs[("lattice", "info", "--genus", "1", "--N", "5")]
    if (lat["piDegreeReduced"], lat["indexOK"], lat["eqK0Match"]) != (25, True, True):
        failures.append("lattice info --genus 1 --N 5 should report PI-degree 25 with both checks true")
    if not outputs[("selftest",)]["passed"]:
        failures.append("selftest reported a failing criterion")

    # Golden certificate and byte stability across thread counts.
    detect = ["detect", "--genus", "1", "--N", "5", "--curve", "0,1", "--phi", "[[1,1],[0,1]]"]
    first = run(detect)
    serial = run(["--threads", "1", *detect])
    if first and serial and first.stdout != serial.stdout:
        failures.append("detect output differs between thread counts")
    golden = (fx / "certificate_twist_n5.json").read_text()
    if first and first.stdout != golden:
        failures.append("detect output differs from fixtures/certificate_twist_n5.json")

    # Frozen oracle records.
    for rec in json.loads((fx / "torus_curves.json").read_text())["curves"]:
        got = run(["qtrace", "--curve", "{},{}".format(*rec["pq"])])
        if got is None:
            continue
        d = json.loads(got.stdout)
        now = {"coords": [d["curve"]["coords"][str(i)] for i in range(len(rec["coords"]))], "points": d["points"],
               "admissibleStates": d["admissibleStates"], "supportSize": len(d["support"])}
        if any(now[k] != rec[k] for k in now):
            failures.append(f"torus curve {rec['pq']} differs from fixtures/torus_curves.json")
    delta1 = json.loads((fx / "delta1_lattice.json").read_text())
    lat3 = run(["lattice", "info", "--genus", "1", "--N", "3", "--refined"])
    if lat3:
        d = json.loads(lat3.stdout)
        current = {"weilPetersson": surf["weilPetersson"], "basis": d["basis"], "form": d["form"],
                   "refinedForm": d["refined"]["form"], "refinedBasis": d["refined"]["basis"]}
        if current != delta1:
            failures.append("Delta_1 lattice data differs from fixtures/delta1_lattice.json")

    # Usage errors go to stderr with a nonzero exit; verdicts never change the exit code.
    bad = run(["detect", "--N", "4", "--curve", "0,1", "--phi", "[[1,1],[0,1]]"], expect_ok=False)
    if bad.returncode == 0 or bad.stdout.strip():
        failures.append("even N should fail with an empty stdout")
    ambiguous = run(["detect", "--N", "3", "--curve", "3,1", "--beta", str(fx / "beta_3_-1.json")])
    if ambiguous and json.loads(ambiguous.stdout)["verdict"] != "inconclusive":
        failures.append("ambiguous fixture should stay inconclusive")

    for f in failures:
        print("FAIL", f)
    print(f"{len(cases)} documents checked, {len(failures)} failures")
    return 1 if failures else 0


if __name__ == "__main__":
    sys.exit(main())
