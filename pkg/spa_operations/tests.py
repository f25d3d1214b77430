import numpy as np
from django.test import SimpleTestCase

from common.data_definitions import SEPARABILITY_THRESHOLD
from common.exceptions import ParamOutOfRangeError
from linalg_operations.eigen_helper import hermitian_eigenvalues, is_psd, min_eigenvalue
from partial_transpose_operations.data_definitions import QubitLabel
from partial_transpose_operations.transpose_helper import is_ppt_cut, partial_transpose, pt_spectrum
from state_operations.catalog import catalog
from state_operations.state_helper import (
    build_density,
    density_from_pure,
    maximally_mixed,
    pure_state_from_terms,
    random_density,
    random_pure_state,
)

from .channel_helper import choi_matrix, choi_min_eigenvalue, is_completely_positive, min_cp_parameter, min_positive_parameter
from .data_definitions import SpaParameter
from .spa_helper import spa_bipartite_threshold, spa_element_map, spa_pt, spa_pt_canonical, spa_threshold


def random_states(seed: int, count: int = 100):
    rng = np.random.default_rng(seed)
    for index in range(count):
        if index % 2:
            yield density_from_pure(random_pure_state(rng))
        else:
            yield random_density(rng, rank=1 + index % 8)


class SpaParameterTests(SimpleTestCase):
    def test_range(self):
        for p in (-0.1, 1.1, float("nan")):
            with self.assertRaises(ParamOutOfRangeError):
                SpaParameter(p)

    def test_threshold(self):
        self.assertEqual(spa_threshold(), SEPARABILITY_THRESHOLD)
        self.assertAlmostEqual(spa_threshold(0.9), 0.1125)


class SpaPtTests(SimpleTestCase):
    def test_fully_depolarizing_limit(self):
        rho = build_density(catalog("g2"))
        np.testing.assert_allclose(spa_pt(rho, "A", 1).matrix, np.eye(8) / 8, atol=1e-16)

    def test_zero_weight_is_partial_transpose(self):
        rho = build_density(catalog("g2"))
        np.testing.assert_array_equal(spa_pt(rho, "B", 0).matrix, partial_transpose(rho, "B").matrix)

    def test_canonical_ghz_minimum_is_zero(self):
        rho = build_density(catalog("ghz"))
        for q in QubitLabel:
            self.assertAlmostEqual(min_eigenvalue(spa_pt_canonical(rho, q).matrix), 0.0, delta=1e-12)

    def test_canonical_maximally_mixed(self):
        out = spa_pt_canonical(maximally_mixed(), "C")
        np.testing.assert_allclose(out.matrix, np.eye(8) / 8, atol=1e-16)
        self.assertEqual(out.source_qubit, QubitLabel.C)
        self.assertEqual(out.p.p, 0.8)

    def test_g2_cut_a(self):
        rho = build_density(catalog("g2"))
        self.assertAlmostEqual(min_eigenvalue(spa_pt_canonical(rho, "A").matrix), 0.030718, delta=1e-6)

    def test_kye_family(self):
        for a in np.linspace(2, 10, 17):
            rho = build_density(catalog("kye", [a]))
            expected = (2 + 5 * a) / (40 * (1 + a))
            for q in QubitLabel:
                self.assertAlmostEqual(min_eigenvalue(spa_pt_canonical(rho, q).matrix), expected, delta=1e-9)


class SpaElementMapTests(SimpleTestCase):
    def test_maximally_mixed(self):
        np.testing.assert_allclose(spa_element_map(maximally_mixed()).matrix, np.eye(8) / 8, atol=1e-16)

    def test_ghz_entry(self):
        alpha, beta = 0.6, 0.8j
        rho = density_from_pure(pure_state_from_terms([("000", alpha), ("111", beta)]))
        tilde = spa_element_map(rho).matrix
        # 1-based (4, 5) entry is conj(t_18) / 5 with t_18 = alpha conj(beta)
        self.assertAlmostEqual(tilde[3, 4], np.conj(alpha * np.conj(beta)) / 5, delta=1e-16)
        np.testing.assert_allclose(tilde, spa_pt_canonical(rho, "A").matrix, atol=1e-15, rtol=0)

    def test_agrees_with_bit_swap_on_random_states(self):
        for rho in random_states(201):
            np.testing.assert_allclose(spa_element_map(rho).matrix, spa_pt_canonical(rho, "A").matrix, atol=1e-15, rtol=0)


class SpaPropertyTests(SimpleTestCase):
    def test_affine_spectrum_law(self):
        for rho in random_states(202):
            for q in QubitLabel:
                mu = pt_spectrum(rho, q).as_array()
                for p in (0, 0.3, 0.8, 1):
                    spectrum = hermitian_eigenvalues(spa_pt(rho, q, p).matrix).as_array()
                    np.testing.assert_allclose(spectrum, p / 8 + (1 - p) * mu, atol=1e-12)

    def test_trace_preservation(self):
        for rho in random_states(203, count=20):
            for p in np.linspace(0, 1, 6):
                self.assertAlmostEqual(np.trace(spa_pt(rho, "A", p).matrix).real, 1.0, delta=1e-12)

    def test_threshold_equivalence(self):
        states = list(random_states(204, count=60)) + [build_density(catalog(name)) for name in ("b1", "s3", "kye", "ghz", "product")]
        for rho in states:
            for q in QubitLabel:
                above = min_eigenvalue(spa_pt_canonical(rho, q).matrix) >= SEPARABILITY_THRESHOLD - 1e-10
                self.assertEqual(above, is_ppt_cut(rho, q, tol=5e-10))

    def test_canonical_output_is_positive(self):
        for rho in random_states(205):
            for q in QubitLabel:
                self.assertTrue(is_psd(spa_pt_canonical(rho, q).matrix, tol=1e-10))


class ChoiMatrixTests(SimpleTestCase):
    def test_unit_trace_and_hermitian(self):
        for p in (0, 0.5, 1):
            choi = choi_matrix("A", p)
            self.assertEqual(choi.shape, (64, 64))
            self.assertAlmostEqual(np.trace(choi).real, 1.0, delta=1e-12)
            np.testing.assert_array_equal(choi, choi.conj().T)

    def test_fully_depolarizing_choi(self):
        np.testing.assert_allclose(choi_matrix("B", 1), np.eye(64) / 64, atol=1e-16)
        self.assertAlmostEqual(choi_min_eigenvalue("B", 1), 1 / 64, delta=1e-12)

    def test_transposition_is_not_completely_positive(self):
        self.assertAlmostEqual(choi_min_eigenvalue("A", 0), -0.5, delta=1e-12)
        self.assertFalse(is_completely_positive("A", 0))

    def test_closed_form(self):
        for q in QubitLabel:
            for p in (0, 0.25, 0.8, 32 / 33, 1):
                self.assertAlmostEqual(choi_min_eigenvalue(q, p), choi_min_eigenvalue(q, p, closed_form=True), delta=1e-12)

    def test_canonical_weight_is_not_completely_positive(self):
        self.assertAlmostEqual(choi_min_eigenvalue("C", 0.8), -0.0875, delta=1e-12)
        self.assertFalse(is_completely_positive("C", 0.8))
        self.assertTrue(is_completely_positive("C", 32 / 33 + 1e-9))

    def test_min_cp_parameter(self):
        for q in QubitLabel:
            self.assertAlmostEqual(min_cp_parameter(q, tol=1e-6), 32 / 33, delta=1e-6)

    def test_min_positive_parameter(self):
        for q in QubitLabel:
            self.assertAlmostEqual(min_positive_parameter(q, tol=1e-6), 0.8, delta=1e-6)


class BipartiteThresholdTests(SimpleTestCase):
    def test_qubit_pair(self):
        self.assertAlmostEqual(spa_bipartite_threshold(2, 0.5), 2 / 9, delta=1e-15)

    def test_vanishing_eigenvalue(self):
        self.assertLess(spa_bipartite_threshold(2, 1e-12), 1e-11)

    def test_qutrits(self):
        self.assertAlmostEqual(spa_bipartite_threshold(3, 1 / 3), 3 / 28, delta=1e-15)

    def test_domain(self):
        with self.assertRaises(ParamOutOfRangeError):
            spa_bipartite_threshold(1, 0.5)
        with self.assertRaises(ParamOutOfRangeError):
            spa_bipartite_threshold(2, 0)
