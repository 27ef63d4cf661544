"""Per-cycle solution families, the two-form search, and the approximate mode."""

import math
from fractions import Fraction

import numpy as np
import pytest

from cyclewalk import (
    companion_fractions,
    constant_block_fractions,
    enumerate_seeded,
    full_spectrum,
    k2_seed_window,
    power_deviation,
    principal_phase,
    solve_approximate,
    solve_k2,
    solve_k3,
    solve_k4,
    solve_rho_edge,
    solve_two_form,
    undefined_blocks,
)
from cyclewalk.tables import TABLE3_ROWS, TABLE5_ROWS

RNG = np.random.default_rng(424242)

SQRT5 = math.sqrt(5.0)


class TestCompanions:
    def test_worked_example_set(self):
        got = companion_fractions(Fraction(2, 5), Fraction(2, 3))
        assert got == {
            Fraction(4, 15),
            Fraction(2, 5),
            Fraction(23, 30),
            Fraction(9, 10),
        }

    def test_members_share_the_class(self):
        for _ in range(50):
            n = int(RNG.integers(2, 40))
            m = int(RNG.integers(1, n))
            v = int(RNG.integers(1, 12))
            u = int(RNG.integers(0, v))
            seed, dtp = Fraction(m, n), Fraction(u, v)
            cls = companion_fractions(seed, dtp)
            for member in cls:
                assert companion_fractions(member, dtp) == cls

    def test_undefined_blocks_exact(self):
        assert undefined_blocks(3, Fraction(0)) == (0,)
        assert undefined_blocks(3, Fraction(1, 3)) == (1,)
        assert undefined_blocks(3, Fraction(2, 3)) == (2,)
        assert undefined_blocks(4, Fraction(0)) == (0, 2)
        assert undefined_blocks(4, Fraction(1, 2)) == (1, 3)
        assert undefined_blocks(4, Fraction(1, 4)) == ()
        assert undefined_blocks(8, Fraction(1, 4)) == (3, 7)

    def test_constant_fractions(self):
        assert constant_block_fractions(3, 0) == {Fraction(0), Fraction(1, 2)}
        assert constant_block_fractions(4, 1) == {Fraction(3, 4), Fraction(1, 4)}


class TestRhoEdge:
    def test_rho0_k5(self):
        cert = solve_rho_edge(5, Fraction(1, 3), 0)
        assert cert.N == 6 and cert.case_tag == "rho0"

    def test_rho1_k3(self):
        cert = solve_rho_edge(3, Fraction(1, 2), 1)
        assert cert.N == 6 and cert.case_tag == "rho1"

    def test_rho0_k2_direct_powering(self):
        cert = solve_rho_edge(2, Fraction(1, 2), 0)
        assert cert.N == 4
        assert power_deviation(2, cert.params, 4) < 1e-12

    def test_rejects_bad_edge(self):
        with pytest.raises(ValueError):
            solve_rho_edge(3, Fraction(1, 2), 2)
        with pytest.raises(ValueError):
            solve_rho_edge(3, Fraction(3, 2), 0)


class TestK2:
    def test_window(self):
        assert k2_seed_window(Fraction(2, 5)) == (Fraction(2, 5), Fraction(9, 10))
        assert k2_seed_window(Fraction(1, 6)) == (Fraction(1, 6), Fraction(2, 3))

    def test_worked_example(self):
        cert = solve_k2(Fraction(2, 5), Fraction(2, 3))
        assert cert.N == 30
        assert cert.rho == pytest.approx(
            2.0 / 3.0 * (1.0 - math.sin(7.0 * math.pi / 30.0)), abs=1e-14
        )
        assert set(cert.generators) == {
            Fraction(4, 15),
            Fraction(2, 5),
            Fraction(23, 30),
            Fraction(9, 10),
        }
        assert cert.max_deviation < 1e-9

    def test_generators_match_spectrum(self):
        cert = solve_k2(Fraction(2, 5), Fraction(2, 3))
        phases = sorted(principal_phase(full_spectrum(2, cert.params)) / (2.0 * math.pi))
        expected = sorted(float(f) for f in cert.generators)
        assert np.max(np.abs(np.array(phases) - expected)) < 1e-12

    def test_outside_window_rejected(self):
        with pytest.raises(ValueError):
            solve_k2(Fraction(2, 5), Fraction(1, 5))
        with pytest.raises(ValueError):
            solve_k2(Fraction(2, 5), Fraction(9, 10))

    def test_window_property_random(self):
        # inside the open window the weight is in (0, 1), except the single
        # interior zero at u/v = 2m/n (mod 1); boundaries give 0 or 1.
        # seed 1/2 is degenerate (weight identically 1) and excluded.
        count = 0
        while count < 100:
            n = int(RNG.integers(2, 30))
            m = int(RNG.integers(1, n))
            seed = Fraction(m, n)
            if seed == Fraction(1, 2):
                continue
            lo, hi = k2_seed_window(seed)
            v = int(RNG.integers(2, 40))
            candidates = [
                Fraction(u, v) for u in range(1, v) if lo < Fraction(u, v) < hi
            ]
            if not candidates:
                continue
            uv = candidates[int(RNG.integers(0, len(candidates)))]
            delta = 2.0 * math.pi * float(uv)
            rho = (1.0 - math.cos(4.0 * math.pi * float(seed) - delta)) / (
                1.0 - math.cos(delta)
            )
            if uv == (2 * seed) % 1:
                assert abs(rho) < 1e-9
            else:
                assert 0.0 < rho < 1.0
            count += 1

    def test_window_boundary_gives_edge_weight(self):
        for seed in (Fraction(2, 5), Fraction(1, 6), Fraction(3, 7)):
            for uv in k2_seed_window(seed):
                delta = 2.0 * math.pi * float(uv)
                rho = (1.0 - math.cos(4.0 * math.pi * float(seed) - delta)) / (
                    1.0 - math.cos(delta)
                )
                assert min(abs(rho), abs(rho - 1.0)) < 1e-9


class TestK3:
    def test_table_entry_n8(self):
        cert = solve_k3(Fraction(0), Fraction(1, 8))
        assert cert.N == 8 and cert.rho == pytest.approx(2.0 / 3.0, abs=1e-14)

    def test_table_entry_n10(self):
        cert = solve_k3(Fraction(0), Fraction(1, 10))
        assert cert.N == 10
        assert cert.rho == pytest.approx((5.0 - SQRT5) / 6.0, abs=1e-14)

    def test_nonzero_delta_family(self):
        cert = solve_k3(Fraction(1, 3), Fraction(7, 24))
        assert cert.N == 24 and cert.rho == pytest.approx(2.0 / 3.0, abs=1e-12)

    def test_verifies_for_k6_too(self):
        cert = solve_k3(Fraction(0), Fraction(1, 8))
        assert power_deviation(6, cert.params, cert.N) < 1e-9

    def test_rejects_weight_outside_unit_interval(self):
        with pytest.raises(ValueError):
            solve_k3(Fraction(0), Fraction(1, 4))  # rho = 4/3
        with pytest.raises(ValueError):
            solve_k3(Fraction(0), Fraction(1, 2))  # rho = 0

    def test_rejects_bad_delta(self):
        with pytest.raises(ValueError):
            solve_k3(Fraction(1, 5), Fraction(1, 8))


class TestK4:
    def test_table_entry_n6(self):
        cert = solve_k4(Fraction(0), Fraction(1, 6))
        assert cert.N == 6 and cert.rho == pytest.approx(0.75, abs=1e-14)

    def test_table_entry_n8(self):
        cert = solve_k4(Fraction(0), Fraction(1, 8))
        assert cert.N == 8 and cert.rho == pytest.approx(0.5, abs=1e-14)

    def test_quarter_turn_delta(self):
        cert = solve_k4(Fraction(1, 4), Fraction(1, 12))
        assert cert.N == 12
        assert cert.rho == pytest.approx((2.0 - math.sqrt(3.0)) / 2.0, abs=1e-14)

    def test_delta_pi_uses_shifted_numerator(self):
        cert = solve_k4(Fraction(1, 2), Fraction(1, 8))
        assert cert.N == 8 and cert.rho == pytest.approx(0.5, abs=1e-14)


class TestEnumerate:
    def test_table3_delta0_completeness(self):
        # scanning all companion classes with denominators <= 30 and keeping
        # N <= 30 reproduces the published k=3 delta=0 rows exactly
        family = enumerate_seeded(3, Fraction(0), max_den=30, max_n=30)
        scan = sorted((c.N, round(c.rho, 10)) for c in family.solutions)
        table = sorted(
            (row.n, round(row.rho, 10))
            for row in TABLE3_ROWS
            if Fraction(0) in row.delta_two_pi
        )
        assert scan == table

    def test_canonical_ordering(self):
        family = enumerate_seeded(3, Fraction(0), max_den=16, max_n=30)
        keys = [(c.N, c.rho) for c in family.solutions]
        assert keys == sorted(keys)

    def test_k4_small_scan(self):
        family = enumerate_seeded(4, Fraction(0), max_den=8, max_n=30)
        found = {(c.N, round(c.rho, 10)) for c in family.solutions}
        assert (6, round(0.75, 10)) in found
        assert (8, round(0.5, 10)) in found


class TestTwoForm:
    def test_k8_delta0(self):
        certs = solve_two_form(8, Fraction(0), max_den=24)
        assert len(certs) == 1
        cert = certs[0]
        assert cert.N == 24 and cert.rho == pytest.approx(0.5, abs=1e-10)
        gens = set(cert.generators)
        primary = {Fraction(1, 12), Fraction(5, 12), Fraction(7, 12), Fraction(11, 12)}
        secondary = {Fraction(1, 8), Fraction(3, 8), Fraction(5, 8), Fraction(7, 8)}
        assert primary <= gens and secondary <= gens

    def test_k8_delta0_exhaustive_at_den24(self):
        # the published generators are the only solution at denominators <= 24
        certs = solve_two_form(8, Fraction(0), max_den=24)
        assert {round(c.rho, 9) for c in certs} == {0.5}

    def test_k5_delta0_both_families(self):
        certs = solve_two_form(5, Fraction(0), max_den=20)
        assert [c.N for c in certs] == [60, 60]
        rhos = sorted(round(c.rho, 10) for c in certs)
        assert rhos == [
            round((5.0 - SQRT5) / 10.0, 10),
            round((5.0 + SQRT5) / 10.0, 10),
        ]
        minus = next(c for c in certs if abs(c.rho - (5.0 - SQRT5) / 10.0) < 1e-9)
        assert {
            Fraction(1, 20),
            Fraction(9, 20),
            Fraction(11, 20),
            Fraction(19, 20),
        } <= set(minus.generators)

    def test_k10_matches_k5(self):
        certs5 = solve_two_form(5, Fraction(0), max_den=20)
        certs10 = solve_two_form(10, Fraction(0), max_den=20)
        assert [(c.N, round(c.rho, 10)) for c in certs5] == [
            (c.N, round(c.rho, 10)) for c in certs10
        ]

    def test_all_published_generator_sets_found(self):
        for row in TABLE5_ROWS:
            k = row.k_values[0]
            dtp = row.delta_two_pi[0]
            certs = solve_two_form(k, dtp, max_den=60)
            match = [c for c in certs if abs(c.rho - row.rho) < 1e-9]
            assert match, (k, dtp, row.rho_display)
            gens = set(match[0].generators)
            primary, secondary = row.generator_sets
            assert primary <= gens and secondary <= gens
            assert match[0].N == row.n

    def test_rejects_bad_inputs(self):
        with pytest.raises(ValueError):
            solve_two_form(7, Fraction(0))
        with pytest.raises(ValueError):
            solve_two_form(8, Fraction(1, 5))


class TestApproximate:
    def test_recovers_exact_solution(self):
        cert = solve_approximate(3, 2.0 / 3.0, 0.0, 1e-12)
        assert cert is not None and cert.N == 8
        assert cert.exact and cert.max_deviation < 1e-9

    def test_k7_regression(self):
        cert = solve_approximate(7, 0.5, 0.0, 1e-2)
        assert cert is not None
        assert cert.N == 2700
        assert cert.max_deviation == pytest.approx(0.4567393294769493, abs=1e-9)
        assert not cert.exact

    def test_k7_monotone_in_epsilon(self):
        periods = []
        for eps in (1e-1, 1e-2):
            cert = solve_approximate(7, 0.5, 0.0, eps)
            periods.append(cert.N)
        assert periods == [440, 2700]
        assert periods[0] <= periods[1]

    def test_period_cap_returns_none(self):
        # the honest LCM at this epsilon is 1356410 > 10**6
        assert solve_approximate(7, 0.5, 0.0, 1e-3) is None

    def test_irrational_delta_path(self):
        # per-phase fallback: denominators multiply out beyond the cap here
        assert solve_approximate(5, 0.3, 1.0, 0.1) is None

    def test_validates_inputs(self):
        with pytest.raises(ValueError):
            solve_approximate(3, 0.0, 0.0, 1e-3)
        with pytest.raises(ValueError):
            solve_approximate(3, 0.5, 0.0, 0.0)
