import pytest

from app.core.exceptions import InfeasibleParametersError
from app.src.optimizer import (
    count_feasible,
    dp_optimum,
    enumerate_sequences,
    local_search,
    naive_sequences,
    optimal_sequence,
    search_optimum,
    unbeaten_unique,
)
from app.src.sequences import Sequence, beats, check
from tests.helpers import kappa, lam


def seq(*entries):
    return Sequence(entries)


def grid(max_n, diameters, levels):
    for make in (kappa, lam):
        for level in levels:
            for d in diameters:
                for n in range(d + 1, max_n + 1):
                    yield make(level, n, d)


class TestEnumeration:
    def test_single_sequence(self):
        assert list(enumerate_sequences(kappa(2, 6, 3))) == [seq(1, 2, 2, 1)]

    def test_two_sequences_in_order(self):
        assert list(enumerate_sequences(kappa(2, 7, 3))) == [seq(1, 2, 3, 1), seq(1, 3, 2, 1)]

    def test_lambda_excludes_thin_start(self):
        c = lam(2, 6, 4)
        found = list(enumerate_sequences(c))
        assert seq(1, 1, 2, 1, 1) not in found
        assert found == list(naive_sequences(c))

    def test_relaxed_last_entry(self):
        c = kappa(2, 7, 3)
        relaxed = list(enumerate_sequences(c, relax_last=True))
        assert seq(1, 2, 2, 2) in relaxed
        assert set(enumerate_sequences(c)) <= set(relaxed)

    @pytest.mark.parametrize("c", list(grid(11, range(3, 7), (2, 3))), ids=lambda c: c.label())
    def test_matches_naive_filter(self, c):
        streamed = list(enumerate_sequences(c))
        assert streamed == list(naive_sequences(c))
        assert len(streamed) == count_feasible(c)
        assert all(check(x, c) == [] for x in streamed)

    @pytest.mark.slow
    @pytest.mark.parametrize("c", list(grid(16, range(3, 8), (2, 3, 4))), ids=lambda c: c.label())
    def test_matches_naive_filter_full_grid(self, c):
        assert list(enumerate_sequences(c)) == list(naive_sequences(c))


class TestOptimum:
    @pytest.mark.parametrize(
        "c, best, f, g",
        [
            (kappa(2, 11, 5), seq(1, 2, 2, 3, 2, 1), 20, 28),
            (kappa(2, 10, 4), seq(1, 2, 3, 3, 1), 20, 21),
            (kappa(2, 13, 6), seq(1, 2, 2, 2, 3, 2, 1), 24, 40),
        ],
    )
    def test_known_optima(self, c, best, f, g):
        for engine in ("dp", "search"):
            optimum = optimal_sequence(c, engine=engine)
            assert optimum.best == best
            assert (optimum.f, optimum.g) == (f, g)

    def test_json_shape(self):
        optimum = dp_optimum(kappa(2, 10, 4))
        document = optimum.model_dump(mode="json")
        assert document["best"] == [1, 2, 3, 3, 1]
        assert (document["f"], document["g"], document["unbeaten_count"], document["explored"]) == (20, 21, 1, 6)
        assert type(optimum).model_validate_json(optimum.model_dump_json()) == optimum

    def test_feasible_count(self):
        assert dp_optimum(kappa(2, 10, 4)).explored == 6

    def test_unique_optima(self):
        assert unbeaten_unique(kappa(2, 13, 6)) == (True, [seq(1, 2, 2, 2, 3, 2, 1)])
        assert unbeaten_unique(kappa(2, 6, 3)) == (True, [seq(1, 2, 2, 1)])
        assert unbeaten_unique(lam(3, 14, 6)) == (True, [seq(1, 3, 2, 2, 2, 3, 1)])

    def test_infeasible(self):
        with pytest.raises(InfeasibleParametersError):
            optimal_sequence(kappa(2, 7, 4))
        with pytest.raises(InfeasibleParametersError):
            search_optimum(kappa(2, 7, 4))

    @pytest.mark.parametrize("c", list(grid(13, range(3, 7), (2, 3))), ids=lambda c: c.label())
    def test_engines_agree_and_nothing_beats_the_optimum(self, c):
        feasible = list(enumerate_sequences(c))
        if not feasible:
            with pytest.raises(InfeasibleParametersError):
                dp_optimum(c)
            return

        dp, search = dp_optimum(c), search_optimum(c)
        assert (dp.f, dp.g, dp.unbeaten) == (search.f, search.g, search.unbeaten)
        assert dp.best == dp.unbeaten[0]
        for x in feasible:
            assert not any(beats(x, best) for best in dp.unbeaten)
        assert all(check(x, c) == [] for x in dp.unbeaten)

    def test_search_above_ceiling_falls_back_to_dp(self):
        optimum = optimal_sequence(kappa(2, 20, 4), engine="search")
        assert optimum.engine == "dp"
        assert optimum == dp_optimum(kappa(2, 20, 4))

    def test_parallel_search_is_deterministic(self):
        c = lam(2, 14, 6)
        assert search_optimum(c, jobs=2) == search_optimum(c, jobs=1)


class TestLocalSearch:
    def test_climbs_to_the_optimum(self):
        result = local_search(seq(1, 3, 3, 2, 1), kappa(2, 10, 4))
        assert result.end == seq(1, 2, 3, 3, 1)
        assert result.steps == 1

    def test_stays_put_at_optimum(self):
        result = local_search(seq(1, 2, 3, 3, 1), kappa(2, 10, 4))
        assert result.end == result.start
        assert result.steps == 0
