#!/usr/bin/env python3
"""Runs the pellfrac binary end to end and checks exit codes, JSON shape and key values."""

import json
import os
import subprocess
import sys
import tempfile

import jsonschema

CLI = sys.argv[1]
SCHEMA = json.load(open(sys.argv[2]))
VALIDATOR = jsonschema.Draft202012Validator(SCHEMA)

failures = []


def run(args, env=None):
    full_env = dict(os.environ)
    full_env.update(env or {})
    proc = subprocess.run([CLI, *args], capture_output=True, text=True, env=full_env, timeout=300)
    return proc


def check(label, args, exit_code, expect=None, env=None, json_out=True):
    proc = run(args, env)
    problems = []
    if proc.returncode != exit_code:
        problems.append(f"exit {proc.returncode}, wanted {exit_code}; stderr: {proc.stderr.strip()}")
    doc = None
    if json_out:
        try:
            doc = json.loads(proc.stdout)
        except json.JSONDecodeError as exc:
            problems.append(f"stdout is not JSON: {exc}")
        if doc is not None:
            for err in VALIDATOR.iter_errors(doc):
                problems.append(f"schema: {err.message} at {list(err.absolute_path)}")
            if expect and not problems:
                try:
                    expect(doc)
                except AssertionError as exc:
                    problems.append(f"value check: {exc}")
    elif expect and not problems:
        try:
            expect(proc.stdout)
        except AssertionError as exc:
            problems.append(f"value check: {exc}")
    status = "ok  " if not problems else "FAIL"
    print(f"{status} {label}")
    for p in problems:
        print(f"     {p}")
    if problems:
        failures.append(label)
    return doc


def q(z):
    """Render {a,b,d} as a compact string for assertions."""
    return z["a"] if z["b"] == "0" else f'{z["a"]}+{z["b"]}*sqrt({z["d"]})'


def eq(actual, wanted):
    assert actual == wanted, f"{actual!r} != {wanted!r}"


check("expand x^4+4 is periodic with period 2",
      ["expand", "--f", "1,0,0,0,4"], 0,
      lambda d: (eq(d["expansion"]["period"], 2), eq(q(d["expansion"]["k"]), "4")))

check("expand (x^2+2)^2-32x is not detected",
      ["expand", "--f", "1,0,4,-32,4"], 2,
      lambda d: (eq(d["status"], "not_detected"), eq(d["expansion"]["period"], None)))

check("expand with --trace lists every step",
      ["expand", "--f", "1,0,0,0,4", "--trace"], 0,
      lambda d: eq(len(d["expansion"]["steps"]) >= 3, True))

check("family ord10 at t=2",
      ["family", "--tag", "ord10", "--t", "2"], 0,
      lambda d: (eq(d["period"], 18), eq(d["r"], 9), eq(q(d["k"]), "8"), eq(d["order"], 10)))

check("scaled expansion infers Q(sqrt 2) from mu and has period 9",
      ["expand", "--f", "1,0,71/2,-96,1201/16", "--mu", "1/4*sqrt(2)"], 0,
      lambda d: (eq(d["field"], 2), eq(d["expansion"]["period"], 9)))

check("family per12_X13 at (2, sqrt 17)",
      ["family", "--tag", "per12_X13", "--t", "2", "--s", "sqrt(17)"], 0,
      lambda d: (eq(d["period"], 12), eq(d["order"], 13), eq(d["field"], 17)))

check("family per26_X14 solves s over Q(sqrt 33)",
      ["family", "--tag", "per26_X14", "--t", "2", "--d", "33"], 0,
      lambda d: (eq(d["period"], 26), eq(d["r"], 13), eq(d["order"], 14),
                 eq(q(d["k"]), "-184/81+-32/81*sqrt(33)")))

check("family ord12 at t=2",
      ["family", "--tag", "ord12", "--t", "2"], 0,
      lambda d: (eq(d["period"], 22), eq(q(d["k"]), "24696"), eq(d["order"], 12)))

check("inadmissible parameter is an error",
      ["family", "--tag", "per26_X14", "--t", "0", "--d", "33"], 1,
      lambda d: (eq(d["status"], "error"), eq(d["error"]["code"], "inadmissible")))

check("unknown family tag is an error",
      ["family", "--tag", "nope", "--t", "1"], 1,
      lambda d: eq(d["error"]["code"], "parse_error"))

check("points on X1(14) over Q(sqrt -7)",
      ["points", "--curve", "14", "--d", "-7", "--height", "6", "--admissible-only"], 0,
      lambda d: eq(len(d["points"]), 4))

check("points on X1(14) over Q are cusps only",
      ["points", "--curve", "X1(14)", "--height", "6", "--admissible-only"], 0,
      lambda d: eq(d["points"], []))

check("certify n=13 over Q(sqrt 33)",
      ["certify", "--n", "13", "--t", "2", "--d", "33"], 0,
      lambda d: (eq(len(d["certificates"]), 1),
                 eq(d["certificates"][0]["period"], 26),
                 eq(q(d["certificates"][0]["alpha"]), "-10916784+1900368*sqrt(33)")))

check("certify with a corrupted alpha table reports a transcription fault",
      ["certify", "--n", "13", "--t", "2", "--d", "33", "--inject-alpha-fault"], 1,
      lambda d: eq(d["error"]["code"], "transcription_fault"))

check("order of a Tate curve point",
      ["order", "--b", "1", "--c", "1"], 0,
      lambda d: eq(d["order"], 5))

check("order of infinity on a quartic",
      ["order", "--u", "2", "--v", "2", "--w", "0"], 0,
      lambda d: eq(d["order"], 6))

check("order beyond the bound is not detected",
      ["order", "--b", "1", "--c", "1", "--order-bound", "4"], 2,
      lambda d: eq(d["order"], None))

check("mixing quartic and Tate inputs is an error",
      ["order", "--b", "1", "--u", "1"], 1,
      lambda d: eq(d["status"], "error"))

with tempfile.NamedTemporaryFile("w", suffix=".cfg", delete=False) as cfg:
    cfg.write("# flat key=value settings\nd = 33\nmax_steps = 60\norder-bound = 20\n")
check("--config supplies the field and limits",
      ["--config", cfg.name, "family", "--tag", "per26_X14", "--t", "2"], 0,
      lambda d: (eq(d["field"], 33), eq(d["period"], 26)))

with tempfile.NamedTemporaryFile("w", suffix=".cfg", delete=False) as cfg_short:
    cfg_short.write("max-steps = 10\n")
check("--config step limit makes a long period undetected",
      ["--config", cfg_short.name, "family", "--tag", "ord12", "--t", "2"], 2,
      lambda d: eq(d["status"], "not_detected"))

check("table output for expand",
      ["--format", "table", "expand", "--f", "1,0,0,0,4"], 0,
      lambda out: eq("period: 2" in out, True), json_out=False)

check("selftest passes with PELLFRAC_THREADS=1",
      ["selftest"], 0,
      lambda d: (eq(d["status"], "ok"), eq(all(c["passed"] for c in d["criteria"]), True)),
      env={"PELLFRAC_THREADS": "1"})

a = run(["selftest", "--seed", "3"], {"PELLFRAC_THREADS": "2"}).stdout
b = run(["selftest", "--seed", "3"], {"PELLFRAC_THREADS": "4"}).stdout
print(("ok  " if a == b else "FAIL") + " selftest output is identical across thread counts")
if a != b:
    failures.append("selftest determinism")

check("selftest with an injected alpha fault fails",
      ["selftest", "--inject-alpha-fault"], 1,
      lambda d: (eq(d["status"], "failed"), eq(d["criteria"][4]["passed"], False)))

check("bad argument is a usage error",
      ["expand"], 1, json_out=False)

if failures:
    print(f"{len(failures)} contract check(s) failed")
    sys.exit(1)
print("all contract checks passed")
