# Copyright 2026 The ncycle Authors
#
# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
#
#      http://www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.

"""Command-line checks: exit codes, JSON shape and determinism."""

import json
import os
import subprocess
import sys
import unittest

BIN = sys.argv.pop(1) if len(sys.argv) > 1 else "ncycle"


def run(*args, env=None):
    full_env = dict(os.environ)
    full_env.pop("NCYC_CAP", None)
    if env:
        full_env.update(env)
    proc = subprocess.run([BIN, *args], capture_output=True, text=True, env=full_env, timeout=300)
    return proc.returncode, proc.stdout, proc.stderr


def run_json(*args, env=None):
    code, out, err = run(*args, env=env)
    return code, json.loads(out), err


EXAMPLE = "1*x^316+1*x^1576+1*x^2836"


class CliTest(unittest.TestCase):
    def test_field(self):
        code, out, _ = run_json("field", "--p", "2", "--n", "3")
        self.assertEqual(code, 0)
        self.assertEqual(out["modulus"], [1, 1, 0, 1])
        self.assertEqual(out["order"], 8)

    def test_verify_example(self):
        code, out, err = run_json("verify", "--p", "2", "--n", "12", "--poly", EXAMPLE, "--cycle", "3")
        self.assertEqual(code, 0)
        self.assertEqual(out["order"], 3)
        self.assertIn("elapsed", err)

    def test_verify_identity_and_failure(self):
        code, out, _ = run_json("verify", "--p", "7", "--n", "1", "--poly", "1*x^1", "--cycle", "5")
        self.assertEqual((code, out["order"]), (0, 1))
        code, out, _ = run_json("verify", "--p", "7", "--n", "1", "--poly", "x^2", "--cycle", "2")
        self.assertEqual(code, 1)
        self.assertFalse(out["bijective"])

    def test_order(self):
        code, out, _ = run_json("order", "--p", "7", "--n", "1", "--poly", "1*x^5")
        self.assertEqual((code, out["order"]), (0, 2))
        code, out, _ = run("order", "--p", "7", "--n", "1", "--poly", "1*x^5", "--csv")
        self.assertEqual(code, 0)
        self.assertTrue(out.startswith("bijective,order,fixed_points,cycle_length,count"))

    def test_deterministic_stdout(self):
        args = ("construct", "--verify", "jieguo", "--q", "64", "--t", "25", "--m", "5")
        first = run(*args)
        second = run(*args)
        self.assertEqual(first[0], 0)
        self.assertEqual(first[1], second[1])
        report = json.loads(first[1])
        self.assertEqual(report["cross_check"]["agreement"], "AGREE")
        self.assertEqual(report["cross_check"]["oracle"]["order"], 3)
        trailing = run("construct", "jieguo", "--q", "64", "--t", "25", "--m", "5", "--verify")
        self.assertEqual(trailing[1], first[1])

    def test_search(self):
        code, out, _ = run_json("search", "jieguo", "--q", "64")
        self.assertEqual(code, 0)
        self.assertIn({"t": 25, "m": 5}, out)
        code, out, _ = run_json("search", "k2to3m", "--q", "64")
        self.assertIn(45, out)

    def test_walsh(self):
        code, out, _ = run_json("walsh", "--p", "2", "--n", "3", "--poly", "x^6", "--check-involution")
        self.assertEqual(code, 0)
        self.assertTrue(out["symmetric"])
        code, out, _ = run_json("walsh", "--p", "2", "--n", "3", "--poly", "x^2", "--check-involution")
        self.assertEqual(code, 1)
        self.assertIsNotNone(out["witness"])

    def test_criterion(self):
        code, out, _ = run_json("criterion", "monomial", "--q", "7", "--d", "5", "--cycle", "2")
        self.assertEqual(code, 0)
        code, _, _ = run("criterion", "monomial", "--q", "7", "--d", "5", "--cycle", "3")
        self.assertEqual(code, 1)

    def test_fuzz(self):
        code, out, _ = run("fuzz", "xh_lambda.involution", "--seed", "0", "--trials", "5")
        self.assertEqual(code, 0)
        summary = json.loads(out.strip().splitlines()[-1])
        self.assertEqual(summary["failures"], 0)

    def test_exit_codes(self):
        self.assertEqual(run("field", "--p", "4", "--n", "1")[0], 2)
        self.assertEqual(run("bogus")[0], 2)
        self.assertEqual(run("field", "--p", "2", "--n", "12", env={"NCYC_CAP": "100"})[0], 3)
        self.assertEqual(run("construct", "rs_2to3m", "--q", "64", "--k", "44")[0], 2)


if __name__ == "__main__":
    unittest.main()
