import json
import math

import numpy as np
from django.test import SimpleTestCase, override_settings

from common.exceptions import (
    BadWeightsError,
    InvariantViolationError,
    NotHermitianError,
    NotNormalizedError,
    ParamOutOfRangeError,
    SchemaError,
    UnknownStateError,
)

from .catalog import catalog, catalog_entries, catalog_entry, catalog_reference, kye_matrix
from .data_definitions import PureState3
from .state_helper import (
    bell_state,
    build_density,
    convex_mix,
    density_from_pure,
    matrix_spec,
    maximally_mixed,
    mixture_spec,
    permute_qubits,
    place_bell_pair,
    pure_state,
    pure_state_from_terms,
    purity,
    random_density,
    random_pure_state,
    render_state_spec,
    validate_density,
)
from .state_parser import parse_and_build, parse_state_document, parse_state_file

S = 1 / math.sqrt(2)


def block(m: np.ndarray, row: int, col: int) -> np.ndarray:
    """2 x 2 block (row, col) of an 8 x 8 matrix, blocks are indexed by the (a, b) bits"""
    return m[2 * row : 2 * row + 2, 2 * col : 2 * col + 2]


class PureStateTests(SimpleTestCase):
    def test_basis_state_projector(self):
        rho = density_from_pure(pure_state_from_terms([("000", 1.0)]))
        expected = np.zeros((8, 8))
        expected[0, 0] = 1
        np.testing.assert_array_equal(rho.matrix, expected)

    def test_ghz_block_form(self):
        alpha, beta = 0.6, 0.8
        rho = density_from_pure(pure_state_from_terms([("000", alpha), ("111", beta)])).matrix
        np.testing.assert_allclose(block(rho, 0, 0), [[alpha**2, 0], [0, 0]], atol=1e-15)
        np.testing.assert_allclose(block(rho, 0, 3), [[0, alpha * beta], [0, 0]], atol=1e-15)
        np.testing.assert_allclose(block(rho, 3, 3), [[0, 0], [0, beta**2]], atol=1e-15)
        for row, col in [(0, 1), (0, 2), (1, 1), (1, 2), (1, 3), (2, 2), (2, 3)]:
            np.testing.assert_array_equal(block(rho, row, col), np.zeros((2, 2)))

    def test_w_state_zero_blocks(self):
        rho = build_density(catalog("w", [0.5, 0.5, S])).matrix
        for row, col in [(0, 3), (1, 3), (2, 3), (3, 3)]:
            np.testing.assert_array_equal(block(rho, row, col), np.zeros((2, 2)))
        self.assertGreater(np.abs(block(rho, 0, 0)).max(), 0)

    def test_unnormalized_amplitudes_are_rejected(self):
        with self.assertRaises(NotNormalizedError):
            pure_state([1, 1, 0, 0, 0, 0, 0, 0])
        with self.assertRaises(NotNormalizedError):
            density_from_pure(PureState3(amplitudes=np.full(8, 0.5, dtype=np.complex128)))

    def test_wrong_amplitude_count(self):
        with self.assertRaises(InvariantViolationError):
            pure_state([1, 0, 0, 0])

    def test_pure_states_have_unit_purity(self):
        rng = np.random.default_rng(3)
        for _ in range(20):
            v = rng.normal(size=8) + 1j * rng.normal(size=8)
            rho = density_from_pure(pure_state(v / np.linalg.norm(v)))
            self.assertAlmostEqual(purity(rho), 1.0, delta=1e-10)

    def test_projectors_are_exactly_hermitian(self):
        rng = np.random.default_rng(5)
        for _ in range(100):
            rho = density_from_pure(random_pure_state(rng)).matrix
            np.testing.assert_array_equal(rho, rho.conj().T)


class MixtureTests(SimpleTestCase):
    def test_single_part_with_unit_weight(self):
        rho = density_from_pure(pure_state_from_terms([("011", 1.0)]))
        np.testing.assert_array_equal(convex_mix([(1.0, rho)]).matrix, rho.matrix)

    def test_half_mixture_of_basis_projectors(self):
        zero = density_from_pure(pure_state_from_terms([("000", 1.0)]))
        seven = density_from_pure(pure_state_from_terms([("111", 1.0)]))
        np.testing.assert_array_equal(convex_mix([(0.5, zero), (0.5, seven)]).matrix, np.diag([0.5, 0, 0, 0, 0, 0, 0, 0.5]))

    def test_s2_entrywise(self):
        alpha = 0.9
        rho = build_density(catalog("s2", [alpha])).matrix
        expected = np.eye(8) * alpha / 8
        expected[0, 0] += (1 - alpha) / 2
        expected[7, 7] += (1 - alpha) / 2
        expected[0, 7] += (1 - alpha) / 2
        expected[7, 0] += (1 - alpha) / 2
        np.testing.assert_allclose(rho, expected, atol=1e-15)
        validate_density(rho)

    def test_order_independence(self):
        rng = np.random.default_rng(5)
        parts = [(w, validate_density(random_density(rng).matrix)) for w in (0.2, 0.3, 0.5)]
        forward = convex_mix(parts).matrix
        backward = convex_mix(list(reversed(parts))).matrix
        shuffled = convex_mix([parts[1], parts[2], parts[0]]).matrix
        np.testing.assert_array_equal(forward, backward)
        np.testing.assert_array_equal(forward, shuffled)

    def test_bad_weights(self):
        rho = maximally_mixed()
        with self.assertRaises(BadWeightsError):
            convex_mix([(0.5, rho), (0.4, rho)])
        with self.assertRaises(BadWeightsError):
            convex_mix([(1.5, rho), (-0.5, rho)])
        with self.assertRaises(BadWeightsError):
            convex_mix([])


class ValidateDensityTests(SimpleTestCase):
    def test_small_defects_are_symmetrized(self):
        rng = np.random.default_rng(9)
        m = random_density(rng).matrix
        g = rng.normal(size=(8, 8)) + 1j * rng.normal(size=(8, 8))
        # anti-Hermitian noise: above the Hermiticity tolerance, below the symmetrization bound
        noisy = m + 1e-10 * (g - g.conj().T)
        rho = validate_density(noisy)
        np.testing.assert_array_equal(rho.matrix, rho.matrix.conj().T)

    def test_large_defects_are_rejected(self):
        m = np.eye(8, dtype=np.complex128) / 8
        m[0, 1] = 1e-3
        with self.assertRaises(NotHermitianError):
            validate_density(m)

    def test_trace_and_positivity(self):
        with self.assertRaises(InvariantViolationError) as ctx:
            validate_density(np.eye(8) / 4)
        self.assertEqual(ctx.exception.which, "trace")
        m = np.diag([0.75, 0.5, -0.25, 0, 0, 0, 0, 0])
        with self.assertRaises(InvariantViolationError) as ctx:
            validate_density(m)
        self.assertEqual(ctx.exception.which, "psd")

    def test_wrong_dimension(self):
        with self.assertRaises(InvariantViolationError):
            validate_density(np.eye(4) / 4)


class CatalogTests(SimpleTestCase):
    def test_aliases(self):
        self.assertEqual(catalog_entry("GHZ-W").name, "ghz_w")
        self.assertEqual(catalog_entry("w-tilde").parameters, [])
        spec = catalog_reference("ghz-w", [0.25])
        self.assertEqual(render_state_spec(spec), {"catalog": {"name": "ghz_w", "params": [0.25]}})
        with self.assertRaises(UnknownStateError):
            catalog_reference("bogus")

    def test_ghz_amplitudes(self):
        spec = catalog("ghz", [S, S])
        amplitudes = [complex(re, im) for re, im in spec.pure.amplitudes]
        np.testing.assert_allclose(amplitudes, [S, 0, 0, 0, 0, 0, 0, S], atol=1e-15)

    def test_kye_matrix(self):
        rho = build_density(catalog("kye", [4])).matrix
        expected = np.array(
            [
                [8, 0, 0, 0, 0, 0, 0, 2],
                [0, 4, 0, 0, 0, 0, 2, 0],
                [0, 0, 4, 0, 0, -2, 0, 0],
                [0, 0, 0, 4, 2, 0, 0, 0],
                [0, 0, 0, 2, 4, 0, 0, 0],
                [0, 0, -2, 0, 0, 4, 0, 0],
                [0, 2, 0, 0, 0, 0, 4, 0],
                [2, 0, 0, 0, 0, 0, 0, 8],
            ]
        ) / 40
        np.testing.assert_allclose(rho, expected, atol=1e-15)

    def test_kye_domain(self):
        with self.assertRaises(ParamOutOfRangeError):
            catalog("kye", [1.5])
        self.assertGreaterEqual(np.linalg.eigvalsh(kye_matrix(2.0)).min(), -1e-15)

    def test_g2_amplitudes(self):
        spec = catalog("g2")
        amplitudes = np.array([re for re, _ in spec.pure.amplitudes])
        s = 1 / math.sqrt(5)
        np.testing.assert_allclose(amplitudes, [s, 0, 0, 0, s, s, s, s], atol=1e-15)

    def test_unknown_name(self):
        with self.assertRaises(UnknownStateError):
            catalog("ghz5")

    def test_out_of_range_parameters(self):
        with self.assertRaises(ParamOutOfRangeError):
            catalog("rho1", [1.2])
        with self.assertRaises(ParamOutOfRangeError):
            catalog("rho2", [0.7, 0.6])
        with self.assertRaises(ParamOutOfRangeError):
            catalog("ghz_w", [0.5, 0.5])

    def test_alias(self):
        np.testing.assert_array_equal(build_density(catalog("ghz-w", [0.3])).matrix, build_density(catalog("ghz_w", [0.3])).matrix)

    def test_rounded_parameters_need_renormalization(self):
        with self.assertRaises(NotNormalizedError):
            catalog("g3", [0.3, 0.4, 0.866])
        with self.assertLogs("django", level="WARNING"):
            spec = catalog("g3", [0.3, 0.4, 0.866], renormalize=True)
        self.assertAlmostEqual(purity(build_density(spec)), 1.0, delta=1e-12)

    @override_settings(CATALOG_RENORMALIZE_TOLERANCE=1e-6)
    def test_renormalization_is_bounded(self):
        with self.assertRaises(NotNormalizedError):
            catalog("g3", [0.3, 0.4, 0.866], renormalize=True)

    def test_every_entry_builds_a_valid_density(self):
        for entry in catalog_entries():
            rho = build_density(catalog(entry.name))
            validated = validate_density(rho.matrix)
            self.assertAlmostEqual(np.trace(validated.matrix).real, 1.0, delta=1e-10)
            if entry.is_pure:
                self.assertAlmostEqual(purity(rho), 1.0, delta=1e-10)


class ConstructorTests(SimpleTestCase):
    def test_bell_pair_placements(self):
        zero = np.array([1, 0], dtype=np.complex128)
        expected_support = {"A": [0, 3], "B": [0, 5], "C": [0, 6]}
        for qubit, support in expected_support.items():
            psi = place_bell_pair(zero, bell_state("phi+"), qubit)
            expected = np.zeros(8)
            expected[support] = S
            np.testing.assert_allclose(psi.amplitudes, expected, atol=1e-15)

    def test_permute_qubits_swaps_b_and_c(self):
        rho = density_from_pure(pure_state_from_terms([("010", 1.0)]))
        swapped = permute_qubits(rho, [0, 2, 1]).matrix
        self.assertAlmostEqual(swapped[1, 1].real, 1.0)


class StateParserTests(SimpleTestCase):
    def test_pure_document(self):
        spec, rho = parse_and_build('{"pure": {"amplitudes": [[1,0],0,0,0,0,0,0,0]}}')
        self.assertEqual(spec.kind, "pure")
        self.assertEqual(rho.matrix[0, 0], 1)

    def test_catalog_document_with_rounded_parameters(self):
        spec = parse_state_file('{"catalog": {"name": "w", "params": [0.7, 0.1, 0.707107]}}')
        self.assertEqual(spec.catalog.name, "w")
        self.assertEqual(spec.catalog.params, [0.7, 0.1, 0.707107])

    def test_weights_must_sum_to_one(self):
        document = {
            "mix": {
                "parts": [
                    {"weight": 0.5, "state": {"catalog": {"name": "ghz"}}},
                    {"weight": 0.4, "state": {"catalog": {"name": "w"}}},
                ]
            }
        }
        with self.assertRaises(BadWeightsError):
            parse_state_file(json.dumps(document))

    def test_schema_errors_name_the_path(self):
        document = {"mix": {"parts": [{"weight": "heavy", "state": {"catalog": {"name": "ghz"}}}]}}
        with self.assertRaises(SchemaError) as ctx:
            parse_state_file(json.dumps(document))
        self.assertEqual(ctx.exception.path, "$.mix.parts[0].weight")

        with self.assertRaises(SchemaError) as ctx:
            parse_state_file('{"pure": {"amplitudes": [1, 0, 0]}}')
        self.assertEqual(ctx.exception.path, "$.pure.amplitudes")

    def test_exactly_one_kind(self):
        with self.assertRaises(SchemaError) as ctx:
            parse_state_file('{"pure": {"amplitudes": [1,0,0,0,0,0,0,0]}, "catalog": {"name": "ghz"}}')
        self.assertEqual(ctx.exception.path, "$")
        with self.assertRaises(SchemaError):
            parse_state_file("{}")

    def test_malformed_json(self):
        with self.assertRaises(SchemaError):
            parse_state_file("{not json")

    def test_matrix_shape_is_checked(self):
        with self.assertRaises(SchemaError) as ctx:
            parse_state_document({"matrix": {"re": [[1]], "im": [[0]]}})
        self.assertTrue(ctx.exception.path.startswith("$.matrix"))

    def test_render_parse_round_trip(self):
        rng = np.random.default_rng(21)
        specs = [
            catalog("ghz", [0.6, 0.8]),
            catalog("rho2", [0.5, 0.25]),
            catalog("kye", [3]),
            matrix_spec(random_density(rng).matrix),
            mixture_spec([(0.25, catalog("s2", [0.9])), (0.75, catalog("b1", [0.3]))]),
        ]
        for spec in specs:
            text = json.dumps(render_state_spec(spec))
            reparsed = parse_state_file(text)
            np.testing.assert_allclose(build_density(reparsed).matrix, build_density(spec).matrix, atol=1e-12)
