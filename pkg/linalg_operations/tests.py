import numpy as np
from django.test import SimpleTestCase

from common.exceptions import NonSquareMatrixError, NotHermitianError

from .eigen_helper import JacobiEigenSolver, hermitian_eigenvalues, is_psd, min_eigenvalue
from .matrix_helper import dagger, identity, kron, kron_all, permutation_matrix


def random_complex_matrix(rng: np.random.Generator, n: int) -> np.ndarray:
    return rng.normal(size=(n, n)) + 1j * rng.normal(size=(n, n))


def random_hermitian(rng: np.random.Generator, n: int) -> np.ndarray:
    g = random_complex_matrix(rng, n)
    return (g + g.conj().T) / 2


def characteristic_polynomial(m: np.ndarray) -> np.ndarray:
    """Coefficients of det(x I - m), highest degree first, by the Faddeev-LeVerrier recursion"""
    n = m.shape[0]
    coefficients = [1.0 + 0j]
    helper = np.zeros_like(m)
    for k in range(1, n + 1):
        helper = m @ helper + coefficients[-1] * np.eye(n)
        coefficients.append(-np.trace(m @ helper) / k)
    return np.array(coefficients)


def characteristic_polynomial_roots(m: np.ndarray) -> np.ndarray:
    # np.roots finds the eigenvalues of the companion matrix of the coefficient vector
    return np.sort(np.roots(characteristic_polynomial(m)).real)


class MatrixHelperTests(SimpleTestCase):
    def test_dagger_of_identity(self):
        np.testing.assert_array_equal(dagger(identity(8)), identity(8))

    def test_dagger_swaps_and_conjugates(self):
        m = np.array([[0, 1j], [0, 0]])
        np.testing.assert_array_equal(dagger(m), np.array([[0, 0], [-1j, 0]]))

    def test_dagger_is_an_involution(self):
        rng = np.random.default_rng(7)
        m = random_complex_matrix(rng, 8)
        np.testing.assert_array_equal(dagger(dagger(m)), m)

    def test_dagger_swaps_dimensions(self):
        m = np.arange(6).reshape(2, 3)
        self.assertEqual(dagger(m).shape, (3, 2))

    def test_kron_of_identities(self):
        np.testing.assert_array_equal(kron(identity(2), identity(4)), identity(8))

    def test_kron_of_projectors(self):
        p = np.diag([1, 0])
        np.testing.assert_array_equal(kron(p, p), np.diag([1, 0, 0, 0]))

    def test_kron_mixed_product_property(self):
        rng = np.random.default_rng(11)
        a = random_complex_matrix(rng, 2)
        b = random_complex_matrix(rng, 2)
        x = rng.normal(size=2) + 1j * rng.normal(size=2)
        y = rng.normal(size=2) + 1j * rng.normal(size=2)
        np.testing.assert_allclose(kron(a, b) @ np.kron(x, y), np.kron(a @ x, b @ y), atol=1e-13)

    def test_kron_is_associative(self):
        rng = np.random.default_rng(13)
        # unit-modulus entries keep every triple product at magnitude 1
        a, b, c = (np.exp(2j * np.pi * rng.random(size=(2, 2))) for _ in range(3))
        np.testing.assert_allclose(kron(kron(a, b), c), kron(a, kron(b, c)), atol=1e-15, rtol=1e-15)
        np.testing.assert_allclose(kron_all([a, b, c]), kron(a, kron(b, c)), atol=1e-15, rtol=1e-15)

    def test_swap_permutation_exchanges_last_two_qubits(self):
        swap_bc = permutation_matrix([0, 2, 1])
        # |001> (index 1) becomes |010> (index 2)
        self.assertEqual(swap_bc[2, 1], 1)
        np.testing.assert_array_equal(swap_bc @ swap_bc, identity(8))


class HermitianEigenvalueTests(SimpleTestCase):
    def test_diagonal_matrix_is_sorted(self):
        spectrum = hermitian_eigenvalues(np.diag([3.0, 1.0, 2.0]))
        np.testing.assert_allclose(spectrum.eigenvalues, [1.0, 2.0, 3.0])

    def test_ghz_partial_transpose_spectrum(self):
        # rho^{T_A} of (|000> + |111>)/sqrt(2): the coherence moves to the |011>, |100> pair
        m = np.zeros((8, 8), dtype=complex)
        m[0, 0] = m[7, 7] = 0.5
        m[3, 4] = m[4, 3] = 0.5
        spectrum = hermitian_eigenvalues(m)
        np.testing.assert_allclose(spectrum.eigenvalues, [-0.5, 0, 0, 0, 0, 0.5, 0.5, 0.5], atol=1e-14)

    def test_matches_lapack_on_random_hermitian_matrices(self):
        rng = np.random.default_rng(2024)
        for _ in range(100):
            m = random_hermitian(rng, 8)
            computed = hermitian_eigenvalues(m).as_array()
            np.testing.assert_allclose(computed, np.linalg.eigvalsh(m), atol=1e-10, rtol=0)

    def test_matches_characteristic_polynomial_roots(self):
        rng = np.random.default_rng(99)
        for _ in range(100):
            # random unitary conjugation of a spectrum with gaps of at least 0.3 keeps the polynomial roots well conditioned
            spacing = np.arange(8) * 0.5 - 1.75 + rng.uniform(-0.1, 0.1, size=8)
            q, _ = np.linalg.qr(random_complex_matrix(rng, 8))
            m = q @ np.diag(spacing) @ q.conj().T
            m = (m + m.conj().T) / 2
            computed = hermitian_eigenvalues(m).as_array()
            np.testing.assert_allclose(computed, characteristic_polynomial_roots(m), atol=1e-9, rtol=0)

    def test_trace_and_square_trace_residuals(self):
        rng = np.random.default_rng(5)
        for _ in range(50):
            m = random_hermitian(rng, 8) / 4
            eigenvalues = hermitian_eigenvalues(m).as_array()
            self.assertLessEqual(abs(np.trace(m).real - eigenvalues.sum()), 1e-10)
            self.assertLessEqual(abs(np.trace(m @ m).real - (eigenvalues**2).sum()), 1e-10)

    def test_affine_shift_law(self):
        rng = np.random.default_rng(17)
        for p in (0.0, 0.3, 0.8, 1.0):
            m = random_hermitian(rng, 8) / 4
            shifted = p * identity(8) / 8 + (1 - p) * m
            expected = p / 8 + (1 - p) * hermitian_eigenvalues(m).as_array()
            np.testing.assert_allclose(hermitian_eigenvalues(shifted).as_array(), expected, atol=1e-12, rtol=0)

    def test_sixty_four_dimensional_matrix(self):
        rng = np.random.default_rng(64)
        m = random_hermitian(rng, 64) / 8
        np.testing.assert_allclose(hermitian_eigenvalues(m).as_array(), np.linalg.eigvalsh(m), atol=1e-10, rtol=0)

    def test_lapack_backend_agrees_with_jacobi(self):
        rng = np.random.default_rng(3)
        m = random_hermitian(rng, 8)
        np.testing.assert_allclose(
            hermitian_eigenvalues(m, backend="lapack").as_array(), hermitian_eigenvalues(m, backend="jacobi").as_array(), atol=1e-10
        )

    def test_spectrum_length_matches_dimension(self):
        self.assertEqual(len(hermitian_eigenvalues(identity(8))), 8)

    def test_non_square_matrix_is_rejected(self):
        with self.assertRaises(NonSquareMatrixError):
            hermitian_eigenvalues(np.zeros((2, 3)))

    def test_non_hermitian_matrix_is_rejected(self):
        with self.assertRaises(NotHermitianError) as raised:
            hermitian_eigenvalues(np.array([[0, 1], [0, 0]]))
        self.assertAlmostEqual(raised.exception.defect, 1.0)

    def test_jacobi_solver_does_not_modify_its_input(self):
        m = np.array([[2, 1j], [-1j, 2]])
        original = m.copy()
        JacobiEigenSolver().eigenvalues(m)
        np.testing.assert_array_equal(m, original)


class MinEigenvalueTests(SimpleTestCase):
    def test_maximally_mixed_state(self):
        self.assertAlmostEqual(min_eigenvalue(identity(8) / 8), 1 / 8, places=14)

    def test_w_state_partial_transpose(self):
        l0, l1, l2 = 0.6, 0.48, 0.64
        w = np.zeros(8, dtype=complex)
        w[1], w[2], w[4] = l0, l1, l2
        rho = np.outer(w, w.conj())
        # transpose qubit A by swapping the A bit of the row and column indices
        pt = np.zeros_like(rho)
        for i in range(8):
            for j in range(8):
                pt[(i & 3) | (j & 4), (j & 3) | (i & 4)] = rho[i, j]
        self.assertAlmostEqual(min_eigenvalue(pt), -abs(l2) * np.sqrt(l0**2 + l1**2), places=12)

    def test_gram_matrices_are_non_negative(self):
        rng = np.random.default_rng(21)
        for _ in range(20):
            g = random_complex_matrix(rng, 8)
            gram = g @ g.conj().T
            gram = gram / np.trace(gram).real
            self.assertGreaterEqual(min_eigenvalue(gram), -1e-12)
            self.assertTrue(is_psd(gram))

    def test_is_psd(self):
        self.assertTrue(is_psd(identity(8)))
        m = np.zeros((8, 8), dtype=complex)
        m[0, 0] = m[7, 7] = 0.5
        m[3, 4] = m[4, 3] = 0.5
        self.assertFalse(is_psd(m))
