# Copyright 2026 The sphtri Authors
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

"""End-to-end checks of the command-line tool.

Usage: cli_test.py <sphtri binary> <source dir>
"""

import json
import os
import re
import shutil
import subprocess
import sys
import tempfile
import time
import unittest

BIN = None
SRC = None

try:
    import jsonschema
except ImportError:  # validation tests are skipped without it
    jsonschema = None


def run(*args, env=None):
    full_env = dict(os.environ)
    full_env.pop("SPHTRI_EPS", None)
    if env:
        full_env.update(env)
    p = subprocess.run([BIN, *args], capture_output=True, text=True, env=full_env, timeout=120)
    return p.returncode, p.stdout, p.stderr


def schema(name):
    with open(os.path.join(SRC, "docs", "schemas", name + ".schema.json")) as f:
        return json.load(f)


def embedding(out):
    m = re.search(r"embedding:((?: \S+){6})", out)
    return [float(x) for x in m.group(1).split()]


class Classify(unittest.TestCase):
    def test_vertex(self):
        code, out, _ = run("classify", "1", "1", "1")
        self.assertEqual(code, 0)
        self.assertIn("vertex (1,1,1)", out)
        self.assertIn("balance: balanced", out)
        self.assertIn("dimension: 2", out)
        self.assertIn("pqr: (0,0,0)", out)

    def test_not_in_space(self):
        self.assertEqual(run("classify", "3", "1", "1")[0], 1)
        self.assertEqual(run("classify", "0.25", "0.25", "0.25")[0], 1)

    def test_usage_and_errors(self):
        self.assertEqual(run("classify", "1", "1")[0], 64)
        self.assertEqual(run("classify", "a", "1", "1")[0], 64)
        self.assertEqual(run("classify", "0", "1", "1")[0], 2)  # InvalidAngle
        self.assertEqual(run("classify", "1", "1", "1", env={"SPHTRI_EPS": "x"})[0], 64)
        self.assertEqual(run("bogus")[0], 64)

    def test_boundary_indeterminate(self):
        code, _, err = run("classify", "0.3334", "0.3333", "0.3333", env={"SPHTRI_EPS": "1e-3"})
        self.assertEqual(code, 3)
        self.assertIn("BoundaryIndeterminate", err)

    def test_tolerance_sources(self):
        # 1.0005 is interior at the default tolerance and on an edge at 1e-3.
        self.assertIn("interior", run("classify", "0.5", "0.5", "1.0005")[1])
        self.assertIn("edge", run("classify", "0.5", "0.5", "1.0005", env={"SPHTRI_EPS": "1e-3"})[1])
        self.assertIn("edge", run("classify", "0.5", "0.5", "1.0005", "--eps", "1e-3")[1])

    def test_degrees(self):
        self.assertIn("vertex (1,1,1)", run("classify", "180", "180", "180", "--degrees")[1])

    @unittest.skipIf(jsonschema is None, "jsonschema not installed")
    def test_json_report(self):
        for t in (("1", "1", "1"), ("2.5", "0.3", "0.4"), ("3", "1", "1"), ("2", "0.5", "0.5")):
            code, out, _ = run("classify", *t, "--json")
            jsonschema.validate(json.loads(out), schema("classify"))
        report = json.loads(run("classify", "2.5", "0.3", "0.4", "--json")[1])
        self.assertEqual(report["sequence"]["j"], 1)
        self.assertEqual(report["balance"], "unbalanced")


class Construct(unittest.TestCase):
    def test_examples(self):
        code, out, _ = run("construct", "0.5", "0.5", "0.5")
        self.assertEqual(code, 0)
        for x in embedding(out):
            self.assertAlmostEqual(x, 0.5, places=10)
        e = embedding(run("construct", "1", "1", "1", "--params", "0.6,0.7")[1])
        for got, want in zip(e[3:], (0.6, 0.7, 0.7)):
            self.assertAlmostEqual(got, want, places=10)
        e = embedding(run("construct", "2", "0.5", "0.5", "--params", "0.3")[1])
        self.assertEqual(e[3], 2.0)

    def test_exit_codes(self):
        self.assertEqual(run("construct", "3", "1", "1")[0], 1)
        self.assertEqual(run("construct", "2", "0.5", "0.5", "--params", "x")[0], 65)
        self.assertEqual(run("construct", "2", "0.5", "0.5", "--params", "1.5")[0], 65)
        self.assertEqual(run("construct", "2", "0.5", "0.5")[0], 65)
        self.assertEqual(run("construct", "1", "1")[0], 64)

    def test_record_output(self):
        with tempfile.TemporaryDirectory() as d:
            path = os.path.join(d, "r.json")
            self.assertEqual(run("construct", "2.3", "1.2", "1.6", "--out", path)[0], 0)
            with open(path) as f:
                first = f.read()
            run("construct", "2.3", "1.2", "1.6", "--out", path)
            with open(path) as f:
                self.assertEqual(f.read(), first)
        code, out, err = run("construct", "0.5", "0.5", "0.5", "--out", "-")
        self.assertIn("embedding", err)
        self.assertEqual(json.loads(out)["dev_degree"], 1)

    @unittest.skipIf(jsonschema is None, "jsonschema not installed")
    def test_records_validate(self):
        cases = [("0.5", "0.5", "0.5"), ("1", "1", "1", "--params", "0.6,0.7"),
                 ("2", "0.5", "0.5", "--params", "0.3"), ("7.3", "2.2", "2.4"),
                 ("2", "2", "1", "--params", "0.5,0.8"), ("4", "0.4", "0.6", "--params", "0.3")]
        for c in cases:
            code, out, _ = run("construct", *c, "--out", "-")
            self.assertEqual(code, 0, c)
            jsonschema.validate(json.loads(out), schema("record"))


class Enumerate(unittest.TestCase):
    def test_small_box(self):
        code, out, _ = run("enumerate", "--box", "1")
        self.assertEqual(code, 0)
        self.assertIn("tetrahedra: 8", out)
        self.assertIn("vertices_balanced: 1", out)

    def test_golden_box3(self):
        with open(os.path.join(SRC, "tests", "fixtures", "enumerate_box3_counts.json")) as f:
            want = json.load(f)
        got = json.loads(run("enumerate", "--box", "3", "--json")[1])["counts"]
        self.assertEqual(got, want)

    def test_usage(self):
        self.assertEqual(run("enumerate", "--box", "0")[0], 64)

    @unittest.skipIf(jsonschema is None, "jsonschema not installed")
    def test_schema_and_determinism(self):
        a = run("enumerate", "--box", "4", "--json")[1]
        self.assertEqual(a, run("enumerate", "--box", "4", "--json")[1])
        jsonschema.validate(json.loads(a), schema("inventory"))


class Skeleton(unittest.TestCase):
    def test_cube(self):
        code, out, _ = run("skeleton", "--box", "1", "--labeling", "pqr")
        self.assertEqual(code, 0)
        self.assertEqual(len(re.findall(r"^  n\d+ \[", out, re.M)), 8)
        self.assertEqual(len(re.findall(r" -- ", out)), 12)

    def test_check_iso(self):
        code, out, _ = run("skeleton", "--box", "5", "--check-iso")
        self.assertEqual(code, 0)
        self.assertIn("PASS", out)

    def test_mnk_nodes_balanced(self):
        g = json.loads(run("skeleton", "--box", "2", "--labeling", "mnk", "--format", "json")[1])
        for m, n, k in g["nodes"]:
            s = m + n + k
            self.assertEqual(s % 2, 1)
            self.assertTrue(all(2 * x < s + 1 for x in (m, n, k)))
        if jsonschema is not None:
            jsonschema.validate(g, schema("graph"))

    def test_usage(self):
        self.assertEqual(run("skeleton", "--labeling", "xyz")[0], 64)
        self.assertEqual(run("skeleton", "--box", "-1")[0], 64)


class Render(unittest.TestCase):
    def setUp(self):
        self.dir = tempfile.mkdtemp()

    def tearDown(self):
        shutil.rmtree(self.dir)

    def record(self, name, *args):
        path = os.path.join(self.dir, name + ".json")
        self.assertEqual(run("construct", *args, "--out", path)[0], 0)
        return path

    def render(self, path, *extra):
        code, out, err = run("render", path, *extra)
        self.assertEqual(code, 0, err)
        return out, err

    @staticmethod
    def circle_group(svg):
        return re.search(r'<g id="circles".*?</g>', svg, re.S).group(0)

    def test_octant(self):
        svg, _ = self.render(self.record("oct", "0.5", "0.5", "0.5"))
        self.assertTrue(svg.startswith("<?xml"))
        self.assertEqual(svg.count('r="3.5"'), 3)
        for label in ("A", "B", "C"):
            self.assertIn(">%s</text>" % label, svg)
        # Three distinct circles, none in dual style.
        colors = set(re.findall(r'stroke="(#[0-9a-f]+)"', self.circle_group(svg)))
        self.assertEqual(len(colors), 3)
        self.assertNotIn('stroke-dasharray="5 5"', self.circle_group(svg))

    def test_hemisphere_single_circle(self):
        svg, _ = self.render(self.record("hemi", "1", "1", "1", "--params", "0.6,0.7"))
        group = self.circle_group(svg)
        solid = re.findall(r'<polyline[^>]*stroke-width="1.00" points', group)
        self.assertEqual(len(solid), 1)
        self.assertIn('stroke-dasharray="5 5"', group)

    def test_long_sided_dual_style(self):
        svg, _ = self.render(self.record("delta", "2", "0.5", "0.5", "--params", "0.3"))
        self.assertIn('stroke-dasharray="5 5"', self.circle_group(svg))

    def test_deterministic_and_projection(self):
        path = self.record("r", "2.3", "1.2", "1.6")
        a, _ = self.render(path)
        b, _ = self.render(path)
        self.assertEqual(a, b)
        ortho, _ = self.render(path, "--projection", "orthographic", "--size", "200")
        self.assertIn('width="200"', ortho)
        self.assertEqual(run("render", path, "--size", "32")[0], 64)

    def test_pole_auto_rotation(self):
        path = self.record("oct", "0.5", "0.5", "0.5")
        with open(path) as f:
            rec = json.load(f)
        # Half-turn about the x axis sends corner A to the pole.
        flip = lambda v: [v[0], -v[1], -v[2]]
        rec["corners"] = [flip(c) for c in rec["corners"]]
        for s in rec["sides"]:
            s["normal"] = flip(s["normal"])
        with open(path, "w") as f:
            json.dump(rec, f)
        svg, err = self.render(path)
        self.assertIn("rotated", err)
        self.assertIn("auto-rotated", svg)
        self.assertEqual(svg.count('r="3.5"'), 3)

    def test_unreadable(self):
        self.assertEqual(run("render", os.path.join(self.dir, "missing.json"))[0], 66)
        bad = os.path.join(self.dir, "bad.json")
        with open(bad, "w") as f:
            f.write("{")
        self.assertEqual(run("render", bad)[0], 66)


class Selftest(unittest.TestCase):
    def test_quick(self):
        t0 = time.monotonic()
        code, out, _ = run("selftest", "--level", "quick")
        self.assertLess(time.monotonic() - t0, 10.0)
        self.assertEqual(code, 0, out)
        self.assertEqual(len(re.findall(r"^PASS", out, re.M)), 11)

    def test_corrupted_fixture(self):
        with tempfile.TemporaryDirectory() as d:
            with open(os.path.join(SRC, "tests", "fixtures", "enumerate_box3_counts.json")) as f:
                counts = json.load(f)
            counts["tetrahedra"] += 1
            with open(os.path.join(d, "enumerate_box3_counts.json"), "w") as f:
                json.dump(counts, f)
            code, out, _ = run("selftest", "--level", "quick", "--fixtures", d)
            self.assertNotEqual(code, 0)
            self.assertIn("FAIL", out)


if __name__ == "__main__":
    BIN, SRC = sys.argv[1], sys.argv[2]
    unittest.main(argv=sys.argv[:1], verbosity=2)
