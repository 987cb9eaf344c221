"""Pauli-string algebra and Jordan-Wigner mapping against dense oracles."""

import numpy as np
import pytest

from vqacost.pauli import (
    PauliString,
    PauliSum,
    double_excitation_locality,
    double_excitation_strings,
    identity_sum,
    jw_ladder,
    pauli_mul,
    single_excitation_locality,
    single_excitation_strings,
)

from conftest import (
    dense_double_excitation,
    dense_jw_ladder,
    dense_pauli_string,
    dense_pauli_sum,
    dense_single_excitation,
)


def ps(coeff, *factors):
    return PauliString(coeff, tuple(factors))


class TestPauliMul:
    def test_x_times_y_same_qubit(self):
        out = pauli_mul(ps(1, (0, "X")), ps(1, (0, "Y")))
        assert out == ps(1j, (0, "Z"))

    def test_x_squared_is_identity(self):
        out = pauli_mul(ps(1, (0, "X")), ps(1, (0, "X")))
        assert out.factors == ()
        assert out.coefficient == 1.0

    def test_mixed_qubits(self):
        out = pauli_mul(ps(1, (0, "X"), (1, "Z")), ps(1, (0, "Y")))
        assert out == ps(1j, (0, "Z"), (1, "Z"))

    @pytest.mark.parametrize("seed", range(5))
    def test_matches_dense_product(self, seed):
        gen = np.random.default_rng(seed)
        n = 3

        def random_string():
            k = int(gen.integers(0, n + 1))
            qubits = sorted(gen.choice(n, size=k, replace=False).tolist())
            axes = [str(a) for a in gen.choice(["X", "Y", "Z"], size=k)]
            coeff = complex(gen.normal(), gen.normal())
            return PauliString(coeff, tuple(zip(qubits, axes)))

        a, b = random_string(), random_string()
        got = dense_pauli_string(pauli_mul(a, b), n)
        want = dense_pauli_string(a, n) @ dense_pauli_string(b, n)
        assert np.allclose(got, want, atol=1e-12)

    def test_associativity(self):
        a = ps(1, (0, "X"), (2, "Y"))
        b = ps(1j, (1, "Z"), (2, "X"))
        c = ps(-1, (0, "Z"))
        assert pauli_mul(pauli_mul(a, b), c) == pauli_mul(a, pauli_mul(b, c))

    def test_unit_coefficients_stay_unit(self):
        a = ps(1, (0, "X"), (1, "Y"))
        b = ps(1, (1, "Z"), (2, "X"))
        assert abs(abs(pauli_mul(a, b).coefficient) - 1.0) < 1e-15


class TestPauliSum:
    def test_merges_duplicates_and_drops_zeros(self):
        total = PauliSum.of(ps(0.5, (0, "X")), ps(0.5, (0, "X")), ps(1.0, (1, "Z")),
                            ps(-1.0, (1, "Z")))
        assert len(total) == 1
        assert total.terms[0] == ps(1.0, (0, "X"))

    def test_product_distributes(self):
        a = PauliSum.of(ps(1, (0, "X")), ps(1, (1, "Y")))
        b = PauliSum.of(ps(2, (0, "Z")))
        got = dense_pauli_sum(a @ b, 2)
        want = dense_pauli_sum(a, 2) @ dense_pauli_sum(b, 2)
        assert np.allclose(got, want)

    def test_hermiticity_predicates(self):
        herm = PauliSum.of(ps(1.5, (0, "X")), ps(-2.0, (1, "Z")))
        anti = PauliSum.of(ps(0.5j, (0, "X")))
        assert herm.is_hermitian() and not herm.is_anti_hermitian()
        assert anti.is_anti_hermitian() and not anti.is_hermitian()


class TestJwLadder:
    def test_first_orbital_has_no_chain(self):
        out = jw_ladder(1, "create")
        assert out.terms == (ps(0.5, (0, "X")), ps(-0.5j, (0, "Y")))

    def test_third_orbital_chain(self):
        out = jw_ladder(3, "create")
        assert out.terms == (
            ps(0.5, (0, "Z"), (1, "Z"), (2, "X")),
            ps(-0.5j, (0, "Z"), (1, "Z"), (2, "Y")),
        )

    def test_annihilate_second_orbital(self):
        out = jw_ladder(2, "annihilate")
        assert out.terms == (ps(0.5, (0, "Z"), (1, "X")), ps(0.5j, (0, "Z"), (1, "Y")))

    @pytest.mark.parametrize("j,kind", [(1, "create"), (2, "annihilate"), (4, "create")])
    def test_matches_dense(self, j, kind):
        n = 4
        got = dense_pauli_sum(jw_ladder(j, kind), n)
        assert np.allclose(got, dense_jw_ladder(j, n, kind), atol=1e-12)

    def test_create_is_adjoint_of_annihilate(self):
        for j in range(1, 5):
            create = jw_ladder(j, "create")
            assert create.adjoint() == jw_ladder(j, "annihilate")

    def test_anticommutation_relations(self):
        # {a_p, a_q^dag} = delta_pq I as a symbolic PauliSum identity.
        for p in range(1, 7):
            for q in range(1, 7):
                a_p = jw_ladder(p, "annihilate")
                a_q_dag = jw_ladder(q, "create")
                anti = (a_p @ a_q_dag) + (a_q_dag @ a_p)
                expected = identity_sum(1.0) if p == q else PauliSum.zero()
                assert anti == expected, (p, q)

    def test_rejects_bad_input(self):
        with pytest.raises(ValueError):
            jw_ladder(0, "create")
        with pytest.raises(ValueError):
            jw_ladder(1, "destroy")


class TestSingleExcitation:
    def test_two_by_two_case(self):
        # (i=2, alpha=1) -> (i/2)(Y0 X1 - X0 Y1)
        out = single_excitation_strings(2, 1)
        assert out.terms == (ps(-0.5j, (0, "X"), (1, "Y")), ps(0.5j, (0, "Y"), (1, "X")))

    def test_three_one_structure(self):
        out = single_excitation_strings(3, 1)
        assert len(out) == 2
        for term in out:
            assert term.locality() == 3
            fm = term.factor_map()
            assert fm[1] == "Z"
            assert {fm[0], fm[2]} == {"X", "Y"}
            assert abs(term.coefficient) == pytest.approx(0.5)
            assert term.coefficient.real == 0.0

    @pytest.mark.parametrize("i,alpha", [(2, 1), (3, 1), (3, 2), (4, 2), (5, 1)])
    def test_matches_dense_oracle(self, i, alpha):
        n = max(i, 5)
        got = dense_pauli_sum(single_excitation_strings(i, alpha), n)
        assert np.allclose(got, dense_single_excitation(i, alpha, n), atol=1e-12)

    def test_term_count_and_locality_grid(self):
        for i in range(2, 9):
            for alpha in range(1, i):
                out = single_excitation_strings(i, alpha)
                assert len(out) == 2
                assert all(t.locality() == i - alpha + 1 for t in out)
                assert single_excitation_locality(i, alpha) == i - alpha + 1

    def test_anti_hermitian(self):
        out = single_excitation_strings(4, 2)
        assert out.adjoint() == out.scale(-1.0)

    def test_rejects_bad_order(self):
        with pytest.raises(ValueError):
            single_excitation_strings(2, 2)
        with pytest.raises(ValueError):
            single_excitation_strings(1, 2)


class TestDoubleExcitation:
    def test_adjacent_tuple(self):
        out = double_excitation_strings(4, 3, 2, 1)
        assert len(out) == 8
        assert all(t.locality() == 4 for t in out)
        assert all(abs(t.coefficient) == pytest.approx(0.125) for t in out)

    def test_gapped_tuple_skips_gap_qubit(self):
        # The Z chains of the creation and annihilation pairs cancel
        # pairwise, so (5,4,2,1) acts on orbitals {1,2} u {4,5} only.
        out = double_excitation_strings(5, 4, 2, 1)
        assert len(out) == 8
        for term in out:
            assert term.locality() == 4
            assert 2 not in term.factor_map()  # orbital 3 untouched
        assert double_excitation_locality(5, 4, 2, 1) == 4

    @pytest.mark.parametrize("tup", [(4, 3, 2, 1), (5, 4, 2, 1), (6, 5, 2, 1),
                                     (6, 4, 3, 1), (8, 6, 3, 2)])
    def test_matches_dense_oracle(self, tup):
        i, j, alpha, beta = tup
        n = max(i, 4)
        got = dense_pauli_sum(double_excitation_strings(*tup), n)
        assert np.allclose(got, dense_double_excitation(i, j, alpha, beta, n), atol=1e-12)

    def test_count_and_locality_grid(self):
        for i in range(4, 11):
            for j in range(3, i):
                for alpha in range(2, j):
                    for beta in range(1, alpha):
                        out = double_excitation_strings(i, j, alpha, beta)
                        expected = double_excitation_locality(i, j, alpha, beta)
                        assert len(out) == 8
                        assert all(t.locality() == expected for t in out)

    def test_anti_hermitian(self):
        out = double_excitation_strings(5, 4, 2, 1)
        assert out.adjoint() == out.scale(-1.0)

    def test_rejects_non_canonical_order(self):
        with pytest.raises(ValueError):
            double_excitation_strings(4, 3, 1, 2)
        with pytest.raises(ValueError):
            double_excitation_strings(3, 4, 2, 1)
        with pytest.raises(ValueError):
            double_excitation_strings(4, 3, 3, 1)
