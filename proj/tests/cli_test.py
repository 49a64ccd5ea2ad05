#!/usr/bin/env python3
"""End-to-end checks of the writhe command-line tool.

usage: cli_test.py WRITHE_BINARY REPO_ROOT [--regen]

--regen rewrites the shipped examples under docs/examples instead of testing.
"""

import itertools
import json
import math
import random
import subprocess
import sys
import tempfile
import unittest
from fractions import Fraction
from pathlib import Path

import jsonschema

BIN = None
ROOT = None

# Shipped example outputs and the arguments that produce them. Outputs without
# timings are regenerated and compared byte for byte.
EXAMPLES = {
    "moments_exact.json": ["moments", "--mode", "exact", "--n", "1,2,3,10", "--k", "2,4", "--format", "json"],
    "moments_limit.json": ["moments", "--mode", "limit", "--format", "json"],
    "moments_limit.csv": ["moments", "--mode", "limit"],
    "sample_n20.json": ["sample", "--n", "20", "--samples", "20000", "--seed", "7", "--bins", "41", "--threads", "1"],
    "sample_n20.csv": ["sample", "--n", "20", "--samples", "20000", "--seed", "7", "--bins", "41", "--threads", "1",
                       "--format", "csv"],
    "limit_coarse.csv": ["limit", "--lo", "-4", "--hi", "4", "--step", "0.5"],
    "corr_angles.json": ["corr", "--input", "docs/examples/angles.csv", "--format", "json"],
}
TIMED_EXAMPLES = {
    "writhe_both.json": ["writhe", "0", "4", "1", "3", "2", "6", "5", "--algo", "both", "--format", "json"],
    "bench_small.json": ["bench", "--fast-min", "8", "--fast-max", "12", "--naive-min", "6", "--naive-max", "9",
                         "--repetitions", "1", "--format", "json"],
}


def run(*args, stdin=None, check=True):
    proc = subprocess.run([BIN, *args], input=stdin, capture_output=True, text=True, cwd=ROOT)
    if check and proc.returncode != 0:
        raise AssertionError(f"{args} exited {proc.returncode}: {proc.stderr}")
    return proc


def schema(name):
    return json.loads((ROOT / "schemas" / f"{name}.schema.json").read_text())


def validate(doc, name):
    jsonschema.validate(doc, schema(name), cls=jsonschema.Draft202012Validator)


def run_json(*args, stdin=None):
    out = run(*args, "--format", "json", stdin=stdin)
    doc = json.loads(out.stdout)
    validate(doc, doc["command"])
    return doc


def beta_scaled(d, n):
    # n * beta(d / n) with d reduced to the symmetric representative
    d %= n
    if 2 * d > n:
        d -= n
    if 2 * d == n:
        return 0
    return (1 if d > 0 else -1 if d < 0 else 0) * (n - 2 * abs(d))


def r_beta_beta(r, s):
    n = len(r)
    total = sum(beta_scaled(r[j] - r[i], n) * beta_scaled(s[j] - s[i], n)
                for i in range(n) for j in range(i + 1, n))
    return Fraction(total, n * n)


def csv_rows(text):
    lines = text.strip().splitlines()
    header = lines[0].split(",")
    return header, [dict(zip(header, map(float, line.split(",")))) for line in lines[1:]]


def trapezoid(xs, ys):
    return sum((xs[i + 1] - xs[i]) * (ys[i] + ys[i + 1]) / 2 for i in range(len(xs) - 1))


class Writhe(unittest.TestCase):
    def test_pinned_value(self):
        self.assertEqual(run("writhe", "0", "4", "1", "3", "2", "6", "5").stdout.split()[0], "-1")

    def test_identity_both(self):
        out = run("writhe", "--size", "7", "--identity", "--algo", "both").stdout.split("\n")
        self.assertEqual(out[0], "9")
        self.assertIn("agree", out)
        doc = run_json("writhe", "--size", "7", "--identity", "--algo", "both")
        self.assertEqual(doc["writhe"], 9)
        self.assertEqual([r["writhe"] for r in doc["runs"]], [9, 9])

    def test_stdin_and_random(self):
        self.assertEqual(run("writhe", stdin="0,4,1,3,2,6,5\n").stdout.strip(), "-1")
        a = run_json("writhe", "--size", "1001", "--seed", "5", "--algo", "both")
        b = run_json("writhe", "--size", "1001", "--seed", "5")
        self.assertEqual(a["writhe"], b["writhe"])

    def test_exit_codes(self):
        proc = run("writhe", "0", "1", "2", "3", check=False)
        self.assertEqual(proc.returncode, 2)
        self.assertIn("odd", proc.stderr)
        self.assertEqual(run("writhe", "0", "0", "1", check=False).returncode, 2)
        self.assertEqual(run("writhe", "0", "x", "1", check=False).returncode, 2)
        self.assertEqual(run("writhe", "--algo", "slow", "0", check=False).returncode, 2)
        self.assertEqual(run("nonsense", check=False).returncode, 2)
        self.assertEqual(run(check=False).returncode, 2)
        self.assertEqual(run("--help", check=False).returncode, 0)


class Moments(unittest.TestCase):
    def value(self, *args):
        header, *rows = run("moments", *args).stdout.strip().splitlines()
        self.assertEqual(len(rows), 1)
        return dict(zip(header.split(","), rows[0].split(",")))["moment"]

    def test_examples(self):
        self.assertEqual(self.value("--mode", "exact", "--k", "2", "--n", "3"), "7")
        self.assertEqual(self.value("--mode", "limit", "--k", "4"), "76/45")
        self.assertEqual(self.value("--mode", "limit", "--k", "2"), "2/3")

    def test_limit_table_up_to_20(self):
        doc = run_json("moments", "--mode", "limit")
        self.assertEqual([r["k"] for r in doc["rows"]], list(range(2, 21, 2)))

    def test_exact_matches_enumeration(self):
        exact = run_json("moments", "--mode", "exact", "--n", "1,2,3")
        enum = run_json("moments", "--mode", "enumerate", "--n", "1,2,3")
        self.assertEqual([r["moment"] for r in exact["rows"]], [r["moment"] for r in enum["rows"]])

    def test_rejections(self):
        for args in (["--mode", "bogus"], ["--mode", "enumerate", "--n", "4"], ["--mode", "exact", "--k", "3"],
                     ["--mode", "limit", "--k", "22"], ["--mode", "limit", "--k", "5"]):
            self.assertEqual(run("moments", *args, check=False).returncode, 2, args)


class Sample(unittest.TestCase):
    ARGS = ["sample", "--n", "50", "--samples", "100000", "--seed", "11"]

    def test_variance_and_summary(self):
        doc = run_json(*self.ARGS)
        self.assertEqual(doc["samples"], 100000)
        # E[W^2] for n = 50 is 5050/7500 = 0.67333...
        self.assertEqual(doc["exact_second_moment"]["rational"], "101/150")
        self.assertLess(abs(doc["variance"] - 0.6733), 0.02)
        second = doc["moments"][1]
        self.assertLess(abs(second["value"] - 101 / 150), 4 * second["standard_error"])
        self.assertLess(doc["ks_statistic"], 0.03)

    def test_reproducible_and_thread_independent(self):
        base = ["sample", "--n", "50", "--samples", "20000"]
        a = run(*base, "--seed", "3", "--threads", "1").stdout
        b = run(*base, "--seed", "3", "--threads", "1").stdout
        c = run(*base, "--seed", "3", "--threads", "4").stdout
        d = run(*base, "--seed", "4").stdout
        self.assertEqual(a, b)
        self.assertEqual(a, c)
        self.assertNotEqual(a, d)

    def test_output_files(self):
        with tempfile.TemporaryDirectory() as tmp:
            paths = []
            for i in range(2):
                prefix = str(Path(tmp) / f"run{i}")
                self.assertEqual(run("sample", "--n", "10", "--samples", "5000", "--seed", "9", "--output", prefix).stdout, "")
                paths.append((Path(prefix + ".csv").read_bytes(), Path(prefix + ".json").read_bytes()))
            self.assertEqual(paths[0], paths[1])
            summary = json.loads(paths[0][1])
            validate(summary, "sample")
            header, rows = csv_rows(paths[0][0].decode())
            self.assertEqual(header, ["bin_left", "bin_right", "count", "density"])
            total = sum(r["count"] for r in rows) + summary["underflow"] + summary["overflow"]
            self.assertEqual(total, 5000)

    def test_bad_arguments(self):
        self.assertEqual(run("sample", "--n", "0", check=False).returncode, 2)
        self.assertEqual(run("sample", "--samples", "many", check=False).returncode, 2)


class Limit(unittest.TestCase):
    def test_table(self):
        header, rows = csv_rows(run("limit").stdout)
        self.assertEqual(header[:3], ["x", "pdf", "cdf"])
        self.assertEqual(len(rows), 801)
        zero = [r for r in rows if r["x"] == 0.0]
        self.assertEqual(len(zero), 1)
        self.assertEqual(zero[0]["cdf"], 0.5)
        xs = [r["x"] for r in rows]
        mass = trapezoid(xs, [r["pdf"] for r in rows])
        self.assertLess(abs(mass - (rows[-1]["cdf"] - rows[0]["cdf"])), 1e-4)

    def test_normalization_and_reference_variance(self):
        _, rows = csv_rows(run("limit", "--lo", "-12", "--hi", "12", "--step", "0.01").stdout)
        xs = [r["x"] for r in rows]
        self.assertLess(abs(trapezoid(xs, [r["pdf"] for r in rows]) - 1), 1e-4)
        for col in ("pdf", "gaussian_pdf", "logistic_pdf", "sech_pdf"):
            var = trapezoid(xs, [r["x"] ** 2 * r[col] for r in rows])
            self.assertLess(abs(var - 2 / 3), 1e-3, col)

    def test_json(self):
        doc = run_json("limit", "--lo", "-1", "--hi", "1", "--step", "0.25")
        self.assertEqual(doc["grid"]["points"], 9)
        self.assertEqual(run("limit", "--step", "0", check=False).returncode, 2)


class Bench(unittest.TestCase):
    def test_small_ladders(self):
        doc = run_json("bench", "--fast-min", "8", "--fast-max", "11", "--naive-min", "6", "--naive-max", "9",
                       "--repetitions", "1")
        self.assertEqual([s["algorithm"] for s in doc["series"]], ["fast", "naive"])
        self.assertEqual([p["N"] for p in doc["series"][0]["points"]], [257, 513, 1025, 2049])
        for s in doc["series"]:
            self.assertTrue(math.isfinite(s["fitted_exponent"]))


class Corr(unittest.TestCase):
    @staticmethod
    def csv(theta, phi):
        return "theta,phi\n" + "".join(f"{a!r},{b!r}\n" for a, b in zip(theta, phi))

    def exact(self, text, kernels="beta:beta"):
        doc = run_json("corr", "--input", "-", "--kernels", kernels, stdin=text)
        return doc, Fraction(doc["results"][0]["exact"])

    def test_perfect_association_is_maximal(self):
        n = 5
        theta = [2 * math.pi * (i + 0.3) / n for i in range(n)]
        _, value = self.exact(self.csv(theta, theta))
        best = max(r_beta_beta(list(range(n)), list(p)) for p in itertools.permutations(range(n)))
        self.assertEqual(value, best)
        self.assertEqual(value, r_beta_beta(list(range(n)), list(range(n))))

    def test_matches_oracle_on_shuffles(self):
        rng = random.Random(2)
        n = 9
        theta = [rng.uniform(0, 2 * math.pi) for _ in range(n)]
        for _ in range(5):
            phi = [rng.uniform(-10, 10) for _ in range(n)]
            r = sorted(range(n), key=lambda i: theta[i])
            s = sorted(range(n), key=lambda i: phi[i] % (2 * math.pi))
            rank_r, rank_s = [0] * n, [0] * n
            for k, i in enumerate(r):
                rank_r[i] = k
            for k, i in enumerate(s):
                rank_s[i] = k
            _, value = self.exact(self.csv(theta, phi))
            self.assertEqual(value, r_beta_beta(rank_r, rank_s))

    def test_independent_is_near_zero(self):
        rng = random.Random(3)
        n = 400
        theta = [rng.uniform(0, 2 * math.pi) for _ in range(n)]
        phi = [rng.uniform(0, 2 * math.pi) for _ in range(n)]
        doc = run_json("corr", "--input", "-", stdin=self.csv(theta, phi))
        for r in doc["results"]:
            self.assertLess(abs(r["per_pair"]), 0.05, r)

    def test_ties_warn(self):
        proc = run("corr", "--input", "-", stdin="1,1\n1,2\n3,0.5\n")
        self.assertIn("warning", proc.stderr)
        doc = run_json("corr", "--input", "-", stdin="1,1\n1,2\n3,0.5\n")
        self.assertEqual(doc["ties"], 1)
        self.assertEqual(len(doc["warnings"]), 1)

    def test_errors(self):
        self.assertEqual(run("corr", "--input", "-", stdin="1,x\n2,3\n", check=False).returncode, 2)
        self.assertEqual(run("corr", "--input", "-", stdin="1\n", check=False).returncode, 2)
        self.assertEqual(run("corr", "--input", "/nonexistent.csv", check=False).returncode, 2)
        self.assertEqual(run("corr", "--input", "-", "--kernels", "beta:delta", stdin="1,2\n2,3\n3,1\n",
                             check=False).returncode, 2)
        # alpha is undefined at half a turn, which even N reaches.
        self.assertEqual(run("corr", "--input", "-", "--kernels", "alpha:beta", stdin="1,2\n2,3\n3,1\n4,5\n",
                             check=False).returncode, 2)
        self.assertEqual(run("corr", check=False).returncode, 2)


class ShippedExamples(unittest.TestCase):
    def test_deterministic_examples_regenerate(self):
        for name, args in EXAMPLES.items():
            self.assertEqual(run(*args).stdout, (ROOT / "docs" / "examples" / name).read_text(), name)

    def test_json_examples_validate(self):
        for name in [*EXAMPLES, *TIMED_EXAMPLES]:
            if name.endswith(".json"):
                doc = json.loads((ROOT / "docs" / "examples" / name).read_text())
                validate(doc, doc["command"])

    def test_schemas_are_valid(self):
        for path in (ROOT / "schemas").glob("*.schema.json"):
            jsonschema.Draft202012Validator.check_schema(json.loads(path.read_text()))


def main():
    global BIN, ROOT
    BIN = str(Path(sys.argv[1]).resolve())
    ROOT = Path(sys.argv[2]).resolve()
    if "--regen" in sys.argv[3:]:
        for name, args in {**EXAMPLES, **TIMED_EXAMPLES}.items():
            (ROOT / "docs" / "examples" / name).write_text(run(*args).stdout)
        return 0
    result = unittest.main(argv=[sys.argv[0], "-v"], exit=False).result
    return 0 if result.wasSuccessful() else 1


if __name__ == "__main__":
    sys.exit(main())
