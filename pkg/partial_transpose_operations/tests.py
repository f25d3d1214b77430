import math

import numpy as np
from django.test import SimpleTestCase

from common.exceptions import InvariantViolationError
from state_operations.catalog import catalog
from state_operations.state_helper import (
    build_density,
    density_from_pure,
    maximally_mixed,
    pure_state_from_terms,
    random_density,
    random_pure_state,
)

from .data_definitions import QubitLabel
from .transpose_helper import full_transpose, is_ppt_cut, negativity, partial_transpose, pt_min_eigenvalue, pt_spectrum

S = 1 / math.sqrt(2)


def blocks(m: np.ndarray) -> dict:
    names = {(0, 0): "A", (0, 1): "B", (0, 2): "C", (0, 3): "D", (1, 1): "E", (1, 2): "F", (1, 3): "G", (2, 2): "H", (2, 3): "I", (3, 3): "J"}
    return {name: m[2 * r : 2 * r + 2, 2 * c : 2 * c + 2] for (r, c), name in names.items()}


def h(x: np.ndarray) -> np.ndarray:
    return x.conj().T


def block_form(m: np.ndarray, qubit: str) -> np.ndarray:
    """Partial transposes written as rearrangements of the 2 x 2 blocks of the upper triangle"""
    X = blocks(m)
    A, B, C, D, E, F, G, H, I, J = (X[k] for k in "ABCDEFGHIJ")
    if qubit == "A":
        return np.block([[A, B, h(C), h(F)], [h(B), E, h(D), h(G)], [C, D, H, I], [F, G, h(I), J]])
    if qubit == "B":
        return np.block([[A, h(B), C, F], [B, E, D, G], [h(C), h(D), H, h(I)], [h(F), h(G), I, J]])
    # qubit C: every block transposed in place
    full = [[m[2 * r : 2 * r + 2, 2 * c : 2 * c + 2].T for c in range(4)] for r in range(4)]
    return np.block(full)


def ghz(alpha: float, beta: float):
    return density_from_pure(pure_state_from_terms([("000", alpha), ("111", beta)]))


def w(l0: float, l1: float, l2: float):
    return density_from_pure(pure_state_from_terms([("001", l0), ("010", l1), ("100", l2)]))


def w_grid():
    """Twenty points on the positive octant of the unit sphere"""
    points = []
    for theta in np.linspace(0.15, 1.4, 5):
        for phi in np.linspace(0.2, 1.35, 4):
            points.append((math.sin(theta) * math.cos(phi), math.sin(theta) * math.sin(phi), math.cos(theta)))
    return points


class PartialTransposeTests(SimpleTestCase):
    def test_maximally_mixed_is_invariant(self):
        for q in QubitLabel:
            np.testing.assert_array_equal(partial_transpose(maximally_mixed(), q).matrix, np.eye(8) / 8)

    def test_source_qubit_is_recorded(self):
        self.assertEqual(partial_transpose(maximally_mixed(), "b").source_qubit, QubitLabel.B)
        with self.assertRaises(InvariantViolationError):
            partial_transpose(maximally_mixed(), "D")

    def test_ghz_spectrum_on_the_unit_circle(self):
        for theta in np.linspace(0, 2 * math.pi, 50, endpoint=False):
            alpha, beta = math.cos(theta), math.sin(theta)
            rho = ghz(alpha, beta)
            product = abs(alpha * beta)
            expected = np.sort([0, 0, 0, 0, alpha**2, beta**2, product, -product])
            for q in QubitLabel:
                np.testing.assert_allclose(pt_spectrum(rho, q).as_array(), expected, atol=1e-12)

    def test_maximal_ghz_minimum(self):
        rho = ghz(S, S)
        for q in QubitLabel:
            self.assertAlmostEqual(pt_min_eigenvalue(rho, q), -0.5, delta=1e-12)

    def test_w_spectra_per_cut(self):
        for l0, l1, l2 in w_grid():
            rho = w(l0, l1, l2)
            # the qubit carrying the excitation alone (l2 for A, l1 for B, l0 for C) against the other two
            for q, single, rest in (("A", l2, math.hypot(l0, l1)), ("B", l1, math.hypot(l0, l2)), ("C", l0, math.hypot(l1, l2))):
                expected = np.sort([0, 0, 0, 0, single**2, rest**2, single * rest, -single * rest])
                np.testing.assert_allclose(pt_spectrum(rho, q).as_array(), expected, atol=1e-12)

    def test_w_minimum_at_seven_tenths(self):
        l2 = 0.7
        rest = math.sqrt(1 - l2**2)
        rho = w(rest / math.sqrt(2), rest / math.sqrt(2), l2)
        self.assertAlmostEqual(pt_min_eigenvalue(rho, "A"), -0.4999, delta=1e-4)

    def test_symmetric_states_have_equal_cut_minima(self):
        for rho in (ghz(S, S), ghz(0.6, 0.8), w(*[1 / math.sqrt(3)] * 3)):
            minima = [pt_min_eigenvalue(rho, q) for q in QubitLabel]
            self.assertAlmostEqual(max(minima), min(minima), delta=1e-12)

    def test_product_state_stays_positive(self):
        rho = density_from_pure(pure_state_from_terms([("000", 1.0)]))
        for q in QubitLabel:
            self.assertAlmostEqual(pt_min_eigenvalue(rho, q), 0.0, delta=1e-14)


class PPTTests(SimpleTestCase):
    def test_b1_is_ppt_across_a(self):
        self.assertTrue(is_ppt_cut(build_density(catalog("b1", [0.5])), "A"))
        self.assertFalse(is_ppt_cut(build_density(catalog("b1", [0.5])), "B"))

    def test_ghz_is_npt_everywhere(self):
        rho = ghz(S, S)
        for q in QubitLabel:
            self.assertFalse(is_ppt_cut(rho, q))
            self.assertAlmostEqual(negativity(rho, q), 0.5, delta=1e-12)

    def test_maximally_mixed_is_ppt(self):
        for q in QubitLabel:
            self.assertTrue(is_ppt_cut(maximally_mixed(), q))
            self.assertEqual(negativity(maximally_mixed(), q), 0.0)


class PartialTransposePropertyTests(SimpleTestCase):
    def random_states(self, seed: int, count: int = 100):
        rng = np.random.default_rng(seed)
        for index in range(count):
            if index % 2:
                yield density_from_pure(random_pure_state(rng))
            else:
                yield random_density(rng, rank=1 + index % 8)

    def test_involution(self):
        for rho in self.random_states(101):
            for q in QubitLabel:
                once = partial_transpose(rho, q)
                twice = partial_transpose(type(rho)(matrix=once.matrix), q)
                np.testing.assert_array_equal(twice.matrix, rho.matrix)

    def test_composition_is_full_transpose(self):
        for rho in self.random_states(102):
            m = rho
            for q in QubitLabel:
                m = type(rho)(matrix=partial_transpose(m, q).matrix)
            np.testing.assert_array_equal(m.matrix, rho.matrix.T)
            np.testing.assert_array_equal(full_transpose(rho), rho.matrix.T)

    def test_trace_hermiticity_and_norm_are_preserved(self):
        for rho in self.random_states(103):
            for q in QubitLabel:
                pt = partial_transpose(rho, q).matrix
                self.assertAlmostEqual(np.trace(pt).real, 1.0, delta=1e-12)
                self.assertLessEqual(np.abs(pt - pt.conj().T).max(), 1e-15)
                self.assertAlmostEqual(np.linalg.norm(pt), np.linalg.norm(rho.matrix), delta=1e-12)

    def test_block_form_matches_bit_swap(self):
        for rho in self.random_states(104):
            for q in "ABC":
                np.testing.assert_array_equal(partial_transpose(rho, q).matrix, block_form(rho.matrix, q))
