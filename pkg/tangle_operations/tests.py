import math

import numpy as np
from django.test import SimpleTestCase

from common.exceptions import InvariantViolationError
from linalg_operations.matrix_helper import permutation_matrix
from state_operations.catalog import ghz_vector, w_vector
from state_operations.state_helper import (
    bell_state,
    place_bell_pair,
    product_state,
    pure_state,
    pure_state_from_terms,
    random_pure_state,
)

from .data_definitions import PureSubclass, TangleValue
from .tangle_helper import pure_subclass, reduced_density, residual_tangle, three_tangle_pure, two_qubit_concurrence


def random_qubit(rng: np.random.Generator) -> np.ndarray:
    v = rng.normal(size=2) + 1j * rng.normal(size=2)
    return v / np.linalg.norm(v)


class ThreeTangleTests(SimpleTestCase):
    def test_maximal_ghz(self):
        self.assertAlmostEqual(three_tangle_pure(pure_state(ghz_vector())).tau, 1.0, delta=1e-12)

    def test_ghz_family(self):
        for theta in np.linspace(0, math.pi / 2, 25):
            alpha, beta = math.cos(theta), math.sin(theta)
            tau = three_tangle_pure(pure_state(ghz_vector(alpha, beta))).tau
            self.assertAlmostEqual(tau, 4 * alpha**2 * beta**2, delta=1e-12)

    def test_w_form_vanishes(self):
        rng = np.random.default_rng(401)
        for _ in range(50):
            l0, l1, l2 = rng.normal(size=3) + 1j * rng.normal(size=3)
            norm = math.sqrt(abs(l0) ** 2 + abs(l1) ** 2 + abs(l2) ** 2)
            psi = pure_state_from_terms([("001", l0 / norm), ("010", l1 / norm), ("100", l2 / norm)])
            self.assertAlmostEqual(three_tangle_pure(psi).tau, 0.0, delta=1e-12)
        self.assertEqual(three_tangle_pure(pure_state(w_vector())).tau, 0.0)

    def test_product_and_biseparable_vanish(self):
        rng = np.random.default_rng(402)
        for index in range(60):
            product = product_state(random_qubit(rng), random_qubit(rng), random_qubit(rng))
            self.assertAlmostEqual(three_tangle_pure(product).tau, 0.0, delta=1e-12)
            placed = place_bell_pair(random_qubit(rng), bell_state("psi+"), "ABC"[index % 3])
            self.assertAlmostEqual(three_tangle_pure(placed).tau, 0.0, delta=1e-12)

    def test_local_phase_invariance(self):
        rng = np.random.default_rng(403)
        bits = np.array([[(index >> shift) & 1 for shift in (2, 1, 0)] for index in range(8)])
        for _ in range(50):
            psi = random_pure_state(rng)
            phases = np.exp(1j * bits @ rng.uniform(0, 2 * math.pi, size=3))
            rotated = pure_state(psi.amplitudes * phases)
            self.assertAlmostEqual(three_tangle_pure(rotated).tau, three_tangle_pure(psi).tau, delta=1e-12)

    def test_permutation_invariance(self):
        rng = np.random.default_rng(404)
        orders = [[0, 2, 1], [1, 0, 2], [2, 1, 0], [1, 2, 0]]
        for index in range(50):
            psi = random_pure_state(rng)
            permuted = pure_state(permutation_matrix(orders[index % 4]) @ psi.amplitudes)
            self.assertAlmostEqual(three_tangle_pure(permuted).tau, three_tangle_pure(psi).tau, delta=1e-12)

    def test_residual_tangle_agreement(self):
        rng = np.random.default_rng(405)
        for _ in range(100):
            psi = random_pure_state(rng)
            self.assertAlmostEqual(three_tangle_pure(psi).tau, residual_tangle(psi), delta=1e-9)

    def test_residual_tangle_on_ghz_family(self):
        for alpha in (0.2, 0.5, 0.8):
            beta = math.sqrt(1 - alpha**2)
            self.assertAlmostEqual(residual_tangle(pure_state(ghz_vector(alpha, beta))), 4 * alpha**2 * beta**2, delta=1e-9)

    def test_range_is_enforced(self):
        with self.assertRaises(InvariantViolationError):
            TangleValue(tau=1.5)


class ConcurrenceTests(SimpleTestCase):
    def test_bell_states(self):
        for kind in ("phi+", "phi-", "psi+", "psi-"):
            b = bell_state(kind)
            self.assertAlmostEqual(two_qubit_concurrence(np.outer(b, b.conj())), 1.0, delta=1e-12)

    def test_product_state(self):
        v = np.kron([1, 0], [0.6, 0.8]).astype(np.complex128)
        self.assertAlmostEqual(two_qubit_concurrence(np.outer(v, v.conj())), 0.0, delta=1e-12)

    def test_ghz_pairs_are_unentangled(self):
        psi = pure_state(ghz_vector())
        self.assertAlmostEqual(two_qubit_concurrence(reduced_density(psi, ["A", "B"])), 0.0, delta=1e-12)

    def test_reduced_density(self):
        psi = pure_state(ghz_vector())
        np.testing.assert_allclose(reduced_density(psi, ["A"]), np.eye(2) / 2, atol=1e-15)
        w = pure_state(w_vector())
        np.testing.assert_allclose(reduced_density(w, ["C"]), np.diag([2 / 3, 1 / 3]), atol=1e-15)


class PureSubclassTests(SimpleTestCase):
    def test_ghz(self):
        self.assertEqual(pure_subclass(pure_state(ghz_vector())), PureSubclass.GHZ_CLASS)

    def test_symmetric_w(self):
        self.assertEqual(pure_subclass(pure_state(w_vector())), PureSubclass.W_CLASS)

    def test_basis_state(self):
        self.assertEqual(pure_subclass(pure_state_from_terms([("000", 1.0)])), PureSubclass.NOT_GENUINE)

    def test_biseparable(self):
        psi = place_bell_pair(np.array([1, 0], dtype=np.complex128), bell_state("phi+"), "A")
        self.assertEqual(pure_subclass(psi), PureSubclass.NOT_GENUINE)
