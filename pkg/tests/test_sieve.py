import itertools

import pytest

from sporadic_designs.catalog import Catalog
from sporadic_designs.errors import DomainError, SizeLimitExceeded
from sporadic_designs.sieve import (
    CandidateCase,
    DesignParameters,
    Inadmissible,
    admissible_parameters,
    complete_parameters,
    maximal_divisibility_filter,
    naive_admissible_parameters,
    orbit_sum_representable,
    parameter_violations,
    sieve_catalog,
)


def only(catalog, *names):
    return Catalog({n: catalog[n] for n in names})


class TestParameters:
    def test_hs_case(self):
        assert complete_parameters(176, 8).astuple() == (176, 1100, 50, 8, 2)

    def test_biplane(self):
        assert complete_parameters(7, 4, 2).astuple() == (7, 7, 4, 4, 2)

    def test_inadmissible_names_condition(self):
        res = complete_parameters(5, 3, 2)
        assert isinstance(res, Inadmissible) and not res
        assert "b = 20/3" in res.reason

    def test_domain(self):
        with pytest.raises(DomainError):
            complete_parameters(5, 2, 2)
        with pytest.raises(DomainError):
            complete_parameters(5, 5, 2)

    def test_invariants_enforced(self):
        with pytest.raises(DomainError):
            DesignParameters(7, 7, 4, 3, 2)
        assert parameter_violations(DesignParameters(176, 1100, 50, 8), group_order=1000) == [
            "b does not divide |G|"
        ]

    def test_str(self):
        assert str(complete_parameters(176, 8)) == "(176,1100,50,8,2)"


class TestAdmissible:
    def test_m11_degree_12(self):
        assert [p.astuple() for p in admissible_parameters(12, 7920)] == [(12, 44, 11, 3, 2)]

    def test_hs_degree_176(self):
        got = [p.astuple() for p in admissible_parameters(176, 44352000)]
        assert got == [(176, 1100, 50, 8, 2), (176, 560, 35, 11, 2)]

    def test_empty(self):
        assert admissible_parameters(5, 120) == []

    def test_ascending_k_and_matches_naive(self):
        for v, order in [(55, 7920), (253, 10200960), (1771, 10200960), (100, 44352000)]:
            got = admissible_parameters(v, order)
            assert [p.k for p in got] == sorted(p.k for p in got)
            assert got == naive_admissible_parameters(v, order)

    def test_domain(self):
        with pytest.raises(DomainError):
            admissible_parameters(2, 100)
        with pytest.raises(DomainError):
            admissible_parameters(10, 5)

    def test_big_orders_exact(self):
        # Fi24' on 306936 points; order exceeds 64 bits
        order = 1255205709190661721292800
        got = [p.astuple() for p in admissible_parameters(306936, order)]
        assert (306936, 1904952, 1955, 315, 2) in got


class TestDivisibility:
    def test_fi24_prime(self, catalog):
        assert not maximal_divisibility_filter(658917237384806400, catalog["Fi24'"], catalog, 0)

    def test_trivial_order_passes(self, catalog):
        assert maximal_divisibility_filter(1, catalog["M11"], catalog, 0)

    def test_j1_order_44(self, catalog):
        assert maximal_divisibility_filter(44, catalog["J1"], catalog, 0)
        assert not maximal_divisibility_filter(44, catalog["J1"], catalog, 1)
        assert {m.order for m in catalog["L2(11)"].maximal_subgroups} == {60, 55, 12}

    def test_missing_nested_entry_passes_with_warning(self, catalog):
        warnings = []
        assert maximal_divisibility_filter(28, catalog["J1"], catalog, 1, warnings)
        assert any("F168" in w for w in warnings)

    def test_equal_order_accepts_maximal_itself(self, catalog):
        assert maximal_divisibility_filter(660, catalog["J1"], catalog, 3)

    def test_domain(self, catalog):
        with pytest.raises(DomainError):
            maximal_divisibility_filter(0, catalog["J1"], catalog)


class TestOrbitSums:
    def test_mcl_480(self):
        assert not orbit_sum_representable([144] + [288] * 5 + [576], 480)

    def test_j3_88(self):
        res = orbit_sum_representable([16, 48, 48, 72, 72], 88)
        assert res
        assert res.witness_values() == [(16, 72)]
        assert all(sum(res.lengths[i] for i in w) == 88 for w in res.witnesses)

    def test_empty(self):
        res = orbit_sum_representable([], 0)
        assert res and res.witnesses == ((),)

    def test_exhaustive_small(self):
        lengths = [1, 2, 3, 4, 5]
        for k in range(0, 17):
            res = orbit_sum_representable(lengths, k)
            expect = [c for n in range(6) for c in itertools.combinations(range(5), n)
                      if sum(lengths[i] for i in c) == k]
            assert sorted(res.witnesses) == sorted(expect)

    def test_witness_cap(self):
        res = orbit_sum_representable([1] * 20, 10, max_witnesses=5)
        assert res and res.truncated and len(res.witnesses) == 5

    def test_limits(self):
        with pytest.raises(SizeLimitExceeded):
            orbit_sum_representable([1] * 11, 3, max_lengths=10)
        with pytest.raises(SizeLimitExceeded):
            orbit_sum_representable([1], 10**8)
        with pytest.raises(DomainError):
            orbit_sum_representable([0, 1], 1)


class TestSieve:
    def test_m11(self, catalog):
        rows = [c.params.astuple() for c in sieve_catalog(only(catalog, "M11"))]
        assert rows == [
            (11, 11, 5, 5, 2), (12, 44, 11, 3, 2),
            (55, 990, 54, 3, 2), (55, 495, 36, 4, 2), (55, 66, 12, 10, 2),
        ]

    def test_j2_pair(self, catalog):
        rows = sieve_catalog(only(catalog, "J2", "J2:2"))
        assert [(c.group.name, c.params.astuple()) for c in rows] == [
            ("J2", (100, 150, 18, 12, 2)), ("J2:2", (100, 150, 18, 12, 2)),
        ]

    def test_monster(self, catalog):
        warnings = []
        assert sieve_catalog(only(catalog, "Monster"), warnings=warnings) == []
        assert any("incomplete" in w for w in warnings)

    def test_auxiliary_entries_skipped(self, catalog):
        assert sieve_catalog(only(catalog, "L2(11)")) == []

    def test_full_catalog_rows_satisfy_conditions(self, catalog):
        rows = sieve_catalog(catalog)
        assert len(rows) == 61
        for c in rows:
            assert parameter_violations(c.params, c.group.order) == []
            assert c.stabilizer_order * c.params.b == c.group.order

    def test_candidate_invariants(self, catalog):
        m11 = catalog["M11"]
        with pytest.raises(DomainError):
            CandidateCase(m11, m11.maximal_subgroups[1], complete_parameters(11, 5), 720)
