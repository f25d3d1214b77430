import json
import math
import os
import subprocess
import sys
import tempfile
from io import BytesIO, StringIO, TextIOWrapper
from unittest import mock

import numpy as np
import pandas as pd
from django.conf import settings
from django.core.management import call_command
from django.core.management.base import CommandError
from django.test import SimpleTestCase, override_settings

from common.data_definitions import SEPARABILITY_THRESHOLD
from common.exceptions import ParamOutOfRangeError
from linalg_operations.eigen_helper import min_eigenvalue
from partial_transpose_operations.data_definitions import QubitLabel
from partial_transpose_operations.transpose_helper import is_ppt_cut, pt_min_eigenvalue
from spa_operations.spa_helper import spa_pt_canonical
from state_operations.catalog import catalog
from state_operations.state_parser import parse_state_document
from state_operations.state_helper import (
    bell_state,
    build_density,
    convex_mix,
    density_from_pure,
    maximally_mixed,
    permute_qubits,
    place_bell_pair,
    product_state,
    pure_state_from_terms,
    random_density,
    random_pure_state,
)

from .classification_helper import classify, is_genuine_by_ppt, spectral_summary, theorem_check, verdict_from_summary
from .data_definitions import SpectralSummary, VerdictKind
from .reproduction_helper import ghz_w_minimum, rho2_minimum, rho2_reported_minimum


def state(name, *params):
    return build_density(catalog(name, params))


def random_qubit(rng: np.random.Generator) -> np.ndarray:
    v = rng.normal(size=2) + 1j * rng.normal(size=2)
    return v / np.linalg.norm(v)


def random_states(seed: int, count: int):
    rng = np.random.default_rng(seed)
    for index in range(count):
        if index % 2:
            yield density_from_pure(random_pure_state(rng))
        else:
            yield random_density(rng, rank=1 + index % 8)



class SpectralSummaryTests(SimpleTestCase):
    def test_g2(self):
        summary = spectral_summary(state("g2"))
        self.assertAlmostEqual(summary.lam_a, 0.030718, delta=1e-5)
        self.assertAlmostEqual(summary.lam_b, 0.0434315, delta=1e-5)
        self.assertAlmostEqual(summary.lam_c, 0.0434315, delta=1e-5)
        self.assertAlmostEqual(summary.lam_max, 0.0434315, delta=1e-5)
        self.assertEqual(classify(state("g2")).kind, VerdictKind.GENUINE_ENTANGLED)

    def test_maximally_mixed(self):
        summary = spectral_summary(maximally_mixed())
        for value in (summary.lam_a, summary.lam_b, summary.lam_c, summary.lam_max):
            self.assertAlmostEqual(value, 1 / 8, delta=1e-12)

    def test_rho1(self):
        for q in np.linspace(0, 1, 11):
            summary = spectral_summary(state("rho1", q))
            for value in (summary.lam_a, summary.lam_b, summary.lam_c):
                self.assertAlmostEqual(value, q / 10, delta=1e-9)

    def test_bounds_and_maximum(self):
        for rho in random_states(301, 50):
            summary = spectral_summary(rho)
            values = (summary.lam_a, summary.lam_b, summary.lam_c)
            self.assertEqual(summary.lam_max, max(values))
            for value in values:
                self.assertGreaterEqual(value, -1e-10)
                self.assertLessEqual(value, 0.3 + 1e-10)


class ClassifyTests(SimpleTestCase):
    def test_ghz_family(self):
        for alpha in np.linspace(0, 1, 21):
            beta = math.sqrt(1 - alpha**2)
            summary = spectral_summary(state("ghz", alpha, beta))
            self.assertAlmostEqual(summary.lam_max, (1 - 2 * alpha * beta) / 10, delta=1e-12)
            if 0 < alpha < 1:
                self.assertEqual(classify(state("ghz", alpha, beta)).kind, VerdictKind.GENUINE_ENTANGLED)

    def test_maximal_ghz_margin(self):
        verdict = classify(state("ghz"))
        self.assertEqual(verdict.kind, VerdictKind.GENUINE_ENTANGLED)
        self.assertAlmostEqual(verdict.margin, -0.1, delta=1e-12)
        self.assertEqual(verdict.passing_cuts, ())
        self.assertTrue(verdict.caveat)

    def test_b1(self):
        for q in (0.1, 0.3, 0.5, 0.9):
            rho = state("b1", q)
            summary = spectral_summary(rho)
            self.assertAlmostEqual(summary.lam_a, 0.1, delta=1e-9)
            self.assertAlmostEqual(summary.lam_b, min(q, 1 - q) / 10, delta=1e-9)
            self.assertAlmostEqual(summary.lam_c, min(q, 1 - q) / 10, delta=1e-9)
            verdict = classify(rho)
            self.assertEqual(verdict.kind, VerdictKind.BISEPARABLE)
            self.assertEqual(verdict.cut, "A-BC")
            self.assertEqual(verdict.label, "biseparable in A-BC cut")

    def test_kye(self):
        for a in (4, 5, 8):
            verdict = classify(state("kye", a))
            self.assertEqual(verdict.kind, VerdictKind.FULLY_SEPARABLE)
            self.assertAlmostEqual(verdict.margin, (2 + 5 * a) / (40 * (1 + a)) - 0.1, delta=1e-9)
        self.assertAlmostEqual(spectral_summary(state("kye", 4)).lam_max, 0.11, delta=1e-9)

    def test_s2(self):
        for alpha in np.linspace(0, 1, 11):
            summary = spectral_summary(state("s2", alpha))
            for value in (summary.lam_a, summary.lam_b, summary.lam_c):
                self.assertAlmostEqual(value, alpha / 8, delta=1e-9)
        self.assertEqual(classify(state("s2", 0.9)).kind, VerdictKind.FULLY_SEPARABLE)
        self.assertEqual(classify(state("s2", 0.7)).kind, VerdictKind.GENUINE_ENTANGLED)

    def test_s3(self):
        for q in np.linspace(0, 1, 6):
            rho = state("s3", q)
            summary = spectral_summary(rho)
            for value in (summary.lam_a, summary.lam_b, summary.lam_c):
                self.assertAlmostEqual(value, 0.1, delta=1e-9)
            self.assertEqual(classify(rho).kind, VerdictKind.FULLY_SEPARABLE)

    def test_rho1_verdicts(self):
        self.assertEqual(classify(state("rho1", 0)).kind, VerdictKind.GENUINE_ENTANGLED)
        self.assertEqual(classify(state("rho1", 0.9)).kind, VerdictKind.GENUINE_ENTANGLED)
        self.assertEqual(classify(state("rho1", 1)).kind, VerdictKind.FULLY_SEPARABLE)

    def test_ghz_w_mixture(self):
        for q in np.linspace(0, 1, 11):
            summary = spectral_summary(state("ghz_w", q))
            for value in (summary.lam_a, summary.lam_b, summary.lam_c):
                self.assertAlmostEqual(value, ghz_w_minimum(q), delta=1e-9)
            self.assertEqual(classify(state("ghz_w", q)).kind, VerdictKind.GENUINE_ENTANGLED)

    def test_rho2(self):
        for q1 in np.linspace(0, 1, 9):
            for q2 in np.linspace(0, 1 - q1, 5):
                summary = spectral_summary(state("rho2", q1, q2))
                for value in (summary.lam_a, summary.lam_b, summary.lam_c):
                    self.assertAlmostEqual(value, rho2_minimum(q1, q2), delta=1e-9)

    def test_rho2_reported_branch(self):
        q1, q2 = 0.5, 0.25
        self.assertAlmostEqual(spectral_summary(state("rho2", q1, q2)).lam_a, rho2_reported_minimum(q1, q2), delta=1e-9)

    def test_table_two_states_are_biseparable_in_c(self):
        for params in ((0.1, 0.4, 0.911), (0.2, 0.4, 0.8944), (0.6, 0.1, 0.7937), (0.5, 0.4, 0.7681)):
            verdict = classify(build_density(catalog("b2", params, renormalize=True)))
            self.assertEqual(verdict.cut, "C-AB")

    def test_two_passing_cuts(self):
        verdict = verdict_from_summary(SpectralSummary(lam_a=0.1, lam_b=0.12, lam_c=0.05, lam_max=0.12))
        self.assertEqual(verdict.kind, VerdictKind.BISEPARABLE)
        self.assertEqual(verdict.passing_cuts, ("A", "B"))
        self.assertIsNone(verdict.cut)
        self.assertIn("A-BC and B-AC", verdict.label)
        self.assertAlmostEqual(verdict.margin, 0.0, delta=1e-15)

    def test_boundary_tolerance(self):
        summary = SpectralSummary(lam_a=0.1 - 5e-10, lam_b=0.0, lam_c=0.0, lam_max=0.1 - 5e-10)
        self.assertEqual(verdict_from_summary(summary).cut, "A-BC")
        self.assertEqual(verdict_from_summary(summary, eps=1e-10).kind, VerdictKind.GENUINE_ENTANGLED)
        with self.assertRaises(ParamOutOfRangeError):
            verdict_from_summary(summary, eps=-1)

    def test_non_canonical_weight(self):
        rho = state("kye", 4)
        verdict = classify(rho, p=0.9)
        self.assertAlmostEqual(verdict.threshold, 0.1125, delta=1e-15)
        # the PPT verdict does not depend on the weight
        self.assertEqual(verdict.kind, VerdictKind.FULLY_SEPARABLE)
        for p in (0.5, 1.0):
            with self.assertRaises(ParamOutOfRangeError):
                classify(rho, p=p)

    def test_determinism(self):
        rho = next(random_states(302, 1))
        self.assertEqual(classify(rho), classify(rho))


class TheoremCheckTests(SimpleTestCase):
    def test_s3_sits_on_the_boundary(self):
        self.assertTrue(theorem_check(state("s3", 0.4), "A"))

    def test_ghz_fails_everywhere(self):
        for q in QubitLabel:
            self.assertFalse(theorem_check(state("ghz"), q))

    def test_maximally_mixed_passes(self):
        for q in QubitLabel:
            self.assertTrue(theorem_check(maximally_mixed(), q))


class ClassificationPropertyTests(SimpleTestCase):
    def test_affine_law_and_ppt_equivalence(self):
        for rho in random_states(303, 200):
            for q in QubitLabel:
                self.assertAlmostEqual(
                    min_eigenvalue(spa_pt_canonical(rho, q).matrix), SEPARABILITY_THRESHOLD + pt_min_eigenvalue(rho, q) / 5, delta=1e-12
                )
            self.assertEqual(classify(rho).kind == VerdictKind.GENUINE_ENTANGLED, is_genuine_by_ppt(rho))

    def test_ppt_equivalence_on_catalog_states(self):
        for name in ("ghz", "w", "w_tilde", "g2", "g3", "ghz_w", "b1", "b2", "kye", "s2", "s3", "rho1", "rho2", "product"):
            rho = state(name)
            self.assertEqual(classify(rho).kind == VerdictKind.GENUINE_ENTANGLED, is_genuine_by_ppt(rho), name)

    def test_ppt_equivalence_inside_the_tolerance_band(self):
        # partial-transpose minimum of x I/8 + (1 - x) GHZ is x/8 - (1 - x)/2, here -1e-9 on every cut
        x = 0.8 - 1.6e-9
        rho = convex_mix([(x, maximally_mixed()), (1 - x, state("ghz"))])
        for q in QubitLabel:
            self.assertAlmostEqual(pt_min_eigenvalue(rho, q), -1e-9, delta=1e-13)
            self.assertFalse(is_ppt_cut(rho, q))
            self.assertTrue(theorem_check(rho, q))
        self.assertEqual(classify(rho).kind, VerdictKind.FULLY_SEPARABLE)
        self.assertFalse(is_genuine_by_ppt(rho))

    def test_product_states_are_fully_separable(self):
        rng = np.random.default_rng(304)
        for _ in range(100):
            rho = density_from_pure(product_state(random_qubit(rng), random_qubit(rng), random_qubit(rng)))
            self.assertEqual(classify(rho).kind, VerdictKind.FULLY_SEPARABLE)

    def test_placed_bell_pairs(self):
        rng = np.random.default_rng(305)
        kinds = ["phi+", "phi-", "psi+", "psi-"]
        cuts = {"A": "A-BC", "B": "B-AC", "C": "C-AB"}
        for index in range(102):
            single_qubit = "ABC"[index % 3]
            psi = place_bell_pair(random_qubit(rng), bell_state(kinds[index % 4]), single_qubit)
            verdict = classify(density_from_pure(psi))
            self.assertEqual(verdict.kind, VerdictKind.BISEPARABLE)
            self.assertEqual(verdict.cut, cuts[single_qubit])

    def test_relabeling_b_and_c(self):
        rng = np.random.default_rng(306)
        swap = {"A": "A", "B": "C", "C": "B"}
        states = list(random_states(307, 60))
        for index in range(60):
            psi = place_bell_pair(random_qubit(rng), bell_state("psi-"), "ABC"[index % 3])
            states.append(convex_mix([(0.7, density_from_pure(psi)), (0.3, maximally_mixed())]))
        for rho in states:
            verdict = classify(rho)
            relabeled = classify(permute_qubits(rho, [0, 2, 1]))
            self.assertEqual(relabeled.kind, verdict.kind)
            self.assertEqual(relabeled.passing_cuts, tuple(sorted(swap[q] for q in verdict.passing_cuts)))

    def test_basis_product_state(self):
        rho = density_from_pure(pure_state_from_terms([("101", 1.0)]))
        self.assertEqual(classify(rho).kind, VerdictKind.FULLY_SEPARABLE)


def run_command(*args) -> str:
    out = StringIO()
    call_command(*args, stdout=out, stderr=StringIO())
    return out.getvalue()


def write_state_file(text: str) -> str:
    handle, path = tempfile.mkstemp(suffix=".json")
    with os.fdopen(handle, "w", encoding="utf-8") as state_file:
        state_file.write(text)
    return path


class ClassifyStateCommandTests(SimpleTestCase):
    def test_catalog_ghz(self):
        report = json.loads(run_command("classify_state", "--catalog", "ghz", "0.7071", "0.7071"))
        self.assertEqual(report["verdict"]["kind"], "GenuineEntangled")
        self.assertLess(abs(report["summary"]["lam_max"]), 1e-10)
        self.assertEqual(len(report["cuts"]), 3)
        self.assertEqual(len(report["cuts"][0]["pt_spectrum"]), 8)
        self.assertIn("started_at", report["timing"])

    def test_catalog_kye(self):
        report = json.loads(run_command("classify_state", "--catalog", "kye", "4"))
        self.assertEqual(report["verdict"]["kind"], "FullySeparable")
        self.assertAlmostEqual(report["summary"]["lam_max"], 0.11, delta=1e-9)
        self.assertIn("necessary condition", report["verdict"]["caveat"])

    def test_state_file_round_trip(self):
        rng = np.random.default_rng(308)
        rho = random_density(rng, rank=3)
        document = {"matrix": {"re": rho.matrix.real.tolist(), "im": rho.matrix.imag.tolist()}}
        path = write_state_file(json.dumps(document))
        self.addCleanup(os.remove, path)

        report = json.loads(run_command("classify_state", path))
        echoed = build_density(parse_state_document(report["state"]))
        summary = spectral_summary(echoed)
        verdict = classify(echoed)
        self.assertEqual(report["verdict"]["kind"], verdict.kind.value)
        self.assertEqual(report["verdict"]["passing_cuts"], list(verdict.passing_cuts))
        for key, value in (("lam_a", summary.lam_a), ("lam_b", summary.lam_b), ("lam_c", summary.lam_c)):
            self.assertAlmostEqual(report["summary"][key], value, delta=1e-12)

    def test_mixture_document(self):
        document = {
            "mix": {
                "parts": [
                    {"weight": 0.3, "state": {"catalog": {"name": "b1", "params": [0.3]}}},
                    {"weight": 0.7, "state": {"catalog": {"name": "b1", "params": [0.3]}}},
                ]
            }
        }
        path = write_state_file(json.dumps(document))
        self.addCleanup(os.remove, path)
        report = json.loads(run_command("classify_state", path))
        self.assertEqual(report["verdict"]["cut"], "A-BC")

    def test_pretty(self):
        output = run_command("classify_state", "--catalog", "g2", "--pretty")
        self.assertIn("verdict: genuine entangled", output)
        self.assertIn("A-BC", output)

    def test_single_cut(self):
        report = json.loads(run_command("classify_state", "--catalog", "b1", "0.3", "--qubit", "A"))
        self.assertEqual([cut["qubit"] for cut in report["cuts"]], ["A"])
        self.assertTrue(report["cuts"][0]["passes_threshold"])
        self.assertIsNone(report["verdict"])

    def test_non_canonical_weight(self):
        report = json.loads(run_command("classify_state", "--catalog", "kye", "4", "--p", "0.9"))
        self.assertAlmostEqual(report["verdict"]["threshold"], 0.1125, delta=1e-15)
        with self.assertRaises(CommandError) as raised:
            run_command("classify_state", "--catalog", "kye", "4", "--p", "0.5")
        self.assertEqual(raised.exception.returncode, 2)

    def test_tangle(self):
        report = json.loads(run_command("classify_state", "--catalog", "ghz", "--tangle"))
        self.assertAlmostEqual(report["tangle"]["tau"], 1.0, delta=1e-12)
        self.assertEqual(report["tangle"]["subclass"], "GHZ-class")
        report = json.loads(run_command("classify_state", "--catalog", "w", "--tangle"))
        self.assertEqual(report["tangle"]["subclass"], "W-class")

    def test_tangle_of_mixed_state_is_an_input_error(self):
        with self.assertRaises(CommandError) as raised:
            run_command("classify_state", "--catalog", "ghz_w", "0.5", "--tangle")
        self.assertEqual(raised.exception.returncode, 2)

    def test_malformed_file(self):
        path = write_state_file("{")
        self.addCleanup(os.remove, path)
        with self.assertRaises(CommandError) as raised:
            run_command("classify_state", path)
        self.assertEqual(raised.exception.returncode, 2)

    def test_file_that_is_not_utf8(self):
        handle, path = tempfile.mkstemp(suffix=".json")
        with os.fdopen(handle, "wb") as state_file:
            state_file.write(b'{"pure": {"amplitudes": [1, 0, 0, 0, 0, 0, 0, \xff0]}}')
        self.addCleanup(os.remove, path)
        with self.assertRaises(CommandError) as raised:
            run_command("classify_state", path)
        self.assertEqual(raised.exception.returncode, 2)
        self.assertIn("UTF-8", str(raised.exception))

    def test_standard_input(self):
        document = json.dumps({"catalog": {"name": "b1", "params": [0.3]}}).encode("utf-8")
        with mock.patch("sys.stdin", TextIOWrapper(BytesIO(document), encoding="utf-8")):
            report = json.loads(run_command("classify_state", "-"))
        self.assertEqual(report["verdict"]["kind"], "Biseparable")

        with mock.patch("sys.stdin", TextIOWrapper(BytesIO(b"\xff\xfe{}"), encoding="utf-8")):
            with self.assertRaises(CommandError) as raised:
                run_command("classify_state", "-")
        self.assertEqual(raised.exception.returncode, 2)

    def test_schema_error_names_the_path(self):
        path = write_state_file(json.dumps({"pure": {"amplitudes": [1, 0]}}))
        self.addCleanup(os.remove, path)
        with self.assertRaises(CommandError) as raised:
            run_command("classify_state", path)
        self.assertEqual(raised.exception.returncode, 2)
        self.assertIn("$.pure.amplitudes", str(raised.exception))

    def test_unknown_catalog_state(self):
        with self.assertRaises(CommandError) as raised:
            run_command("classify_state", "--catalog", "nope")
        self.assertEqual(raised.exception.returncode, 2)

    def test_needs_exactly_one_source(self):
        with self.assertRaises(CommandError) as raised:
            run_command("classify_state")
        self.assertEqual(raised.exception.returncode, 2)

    @override_settings(JACOBI_MAX_SWEEPS=0)
    def test_numerical_failure(self):
        with self.assertRaises(CommandError) as raised:
            run_command("classify_state", "--catalog", "g2")
        self.assertEqual(raised.exception.returncode, 1)


class ReproduceTablesCommandTests(SimpleTestCase):
    def read_csv(self, *args) -> pd.DataFrame:
        return pd.read_csv(StringIO(run_command("reproduce_tables", *args)), keep_default_na=False)

    def test_table_one(self):
        df = self.read_csv("table1")
        self.assertEqual(len(df), 5)
        self.assertTrue(df["within_tolerance"].all())
        self.assertTrue((df["verdict"] == "GenuineEntangled").all())
        self.assertAlmostEqual(df["lam_a"][0], 0.00101, delta=1e-3)
        self.assertLess(abs(df["lam_b"][0]), 1e-6)
        np.testing.assert_allclose(df["lam_b"], df["lam_c"], atol=1e-12)

    def test_table_two(self):
        df = self.read_csv("table2")
        self.assertEqual(len(df), 4)
        self.assertTrue(df["within_tolerance"].all())
        self.assertTrue((df["verdict"] == "Biseparable(C-AB)").all())
        self.assertAlmostEqual(df["lam_a"][2], 0.00475, delta=1e-3)
        self.assertAlmostEqual(df["lam_c"][2], 0.1, delta=1e-9)

    def test_examples(self):
        df = self.read_csv("examples").set_index("example", drop=False)
        self.assertTrue((df["verdict_text"] == df["published_verdict"]).all())
        np.testing.assert_allclose(df["lam_max"], df["closed_form"], atol=1e-3)
        self.assertAlmostEqual(df.loc["G3", "closed_form"], df.loc["G3", "lam_max"], delta=1e-9)
        s2 = df.loc["S2"]
        self.assertAlmostEqual(s2["lam_max"], 0.1125, delta=1e-9)
        self.assertAlmostEqual(s2["published_value"], 0.1225, delta=1e-12)
        self.assertFalse(s2["within_tolerance"])
        self.assertEqual(s2["verdict"], "FullySeparable")

    def test_byte_stable(self):
        self.assertEqual(run_command("reproduce_tables", "table1"), run_command("reproduce_tables", "table1"))
        self.assertNotIn("\r", run_command("reproduce_tables", "table2"))


class ScanFamilyCommandTests(SimpleTestCase):
    def read_csv(self, *args) -> pd.DataFrame:
        return pd.read_csv(StringIO(run_command("scan_family", *args)), keep_default_na=False)

    def test_ghz_w(self):
        df = self.read_csv("ghz-w", "--grid", "q=0,0.5,1")
        self.assertEqual(list(df["q"]), [0.0, 0.5, 1.0])
        for q, lam in zip(df["q"], df["lam_max"]):
            self.assertAlmostEqual(lam, ghz_w_minimum(q), delta=1e-9)

    def test_rho1(self):
        df = self.read_csv("rho1", "--grid", "q=0:1:2")
        self.assertEqual(list(df["verdict"]), ["GenuineEntangled", "FullySeparable"])
        self.assertAlmostEqual(df["lam_max"][0], 0.0, delta=1e-9)
        self.assertAlmostEqual(df["lam_max"][1], 0.1, delta=1e-9)

    def test_cartesian_order(self):
        df = self.read_csv("rho2", "--grid", "q1=0.2,0.4", "--grid", "q2=0.1,0.3")
        self.assertEqual(list(zip(df["q1"], df["q2"])), [(0.2, 0.1), (0.2, 0.3), (0.4, 0.1), (0.4, 0.3)])
        for q1, q2, lam in zip(df["q1"], df["q2"], df["lam_max"]):
            self.assertAlmostEqual(lam, rho2_minimum(q1, q2), delta=1e-9)

    def test_rho2_line(self):
        df = self.read_csv("rho2_line", "--grid", "q1=0.3,0.7", "--grid", "n=1:2:2")
        self.assertEqual(len(df), 4)
        self.assertEqual(list(df["reported_class"]), ["W-class", "W-class", "GHZ-class", "GHZ-class"])
        self.assertAlmostEqual(df["q2"][1], 0.35, delta=1e-12)
        self.assertTrue((df["verdict"] == "GenuineEntangled").all())

    def test_tangle_column(self):
        df = self.read_csv("ghz", "--grid", "alpha=0.6", "--grid", "beta=0.8", "--tangle")
        self.assertAlmostEqual(df["tau"][0], 4 * 0.36 * 0.64, delta=1e-9)
        self.assertEqual(df["subclass"][0], "GHZ-class")

    def test_out_of_range(self):
        for grid in ("q=2", "bogus=1", "q=a:b:c"):
            with self.assertRaises(CommandError) as raised:
                run_command("scan_family", "rho1", "--grid", grid)
            self.assertEqual(raised.exception.returncode, 2)

    def test_non_finite_axes(self):
        for grid in ("n=inf", "n=nan", "q1=nan"):
            with self.assertRaises(CommandError) as raised:
                run_command("scan_family", "rho2_line", "--grid", grid)
            self.assertEqual(raised.exception.returncode, 2)
            self.assertIn("finite", str(raised.exception))
        with self.assertRaises(CommandError) as raised:
            run_command("scan_family", "rho2_line", "--grid", "n=1.5")
        self.assertEqual(raised.exception.returncode, 2)


class ManagePyTests(SimpleTestCase):
    def run_manage(self, *args) -> subprocess.CompletedProcess:
        return subprocess.run(
            [sys.executable, str(settings.BASE_DIR / "manage.py"), *args],
            cwd=settings.BASE_DIR,
            capture_output=True,
            text=True,
            timeout=120,
        )

    def test_exit_codes(self):
        ok = self.run_manage("classify_state", "--catalog", "b1", "0.3")
        self.assertEqual(ok.returncode, 0)
        self.assertEqual(json.loads(ok.stdout)["verdict"]["cut"], "A-BC")
        self.assertEqual(self.run_manage("classify_state", "--catalog", "kye", "1").returncode, 2)


class SampleStateTests(SimpleTestCase):
    expected = {
        "ghz.json": "GenuineEntangled",
        "w_with_phase.json": "GenuineEntangled",
        "noisy_ghz.json": "GenuineEntangled",
        "biseparable_a.json": "Biseparable",
    }

    def test_sample_states(self):
        for name, kind in self.expected.items():
            report = json.loads(run_command("classify_state", str(settings.BASE_DIR / "sample_states" / name)))
            self.assertEqual(report["verdict"]["kind"], kind, name)
