import pytest

from congruence_lab import triangles, verifier
from congruence_lab.bounds import TheoremId
from congruence_lab.errors import CapacityError, ParameterError
from congruence_lab.exactmath import IntPolynomial
from congruence_lab.verifier import GridSpec, Verdict, check_claim, grid_params, run_grid, run_grids


class TestCheckClaim:
    def test_fleck_tight(self):
        rec = check_claim(TheoremId.FLECK, {"n": 3, "p": 2, "r": 0})
        assert rec.total == 4
        assert rec.order == 2
        assert rec.bound == 2
        assert rec.verdict is Verdict.TIGHT
        assert rec.margin == 0
        assert rec.params == {"n": 3, "p": 2, "d": 2, "r": 0}

    def test_ec2_tight(self):
        rec = check_claim(TheoremId.EC2, {"n": 4, "p": 2, "alpha": 1, "a": 3, "r": 1})
        assert (rec.total, rec.bound, rec.verdict) == (60, 2, Verdict.TIGHT)

    def test_sc1_margin(self):
        rec = check_claim(TheoremId.SC1, {"n": 4, "p": 3, "m": 2, "a": 1, "r": 0})
        assert (rec.total, rec.order, rec.bound) == (18, 2, 1)
        assert rec.verdict is Verdict.HOLDS
        assert rec.margin == 1
        assert rec.params["d"] == 2

    def test_vacuous(self):
        rec = check_claim(TheoremId.FLECK, {"n": 1, "p": 3, "r": 2})
        assert rec.total == 0
        assert rec.order.is_infinite
        assert rec.verdict is Verdict.HOLDS_VACUOUS
        assert rec.margin is None

    def test_trivial_bound(self):
        rec = check_claim(TheoremId.SC3, {"n": 1, "p": 2, "alpha": 1, "m": 1, "a": -2, "r": 1})
        assert rec.bound == -1
        assert rec.total == -2
        assert rec.verdict is Verdict.HOLDS_TRIVIAL_BOUND
        assert rec.margin == rec.order.value - rec.bound > 0

    def test_not_applicable(self):
        rec = check_claim(TheoremId.EC2, {"n": 1, "p": 2, "alpha": 1, "a": 3, "r": 0})
        assert rec.verdict is Verdict.NOT_APPLICABLE
        assert rec.total is None and rec.order is None and rec.bound is None
        rec = check_claim(TheoremId.WAN, {"n": 4, "p": 2, "l": 2, "r": 0})
        assert rec.verdict is Verdict.NOT_APPLICABLE

    def test_probe_inapplicable_fills_data(self):
        rec = check_claim(
            TheoremId.EC2, {"n": 1, "p": 2, "alpha": 1, "a": 3, "r": 0}, probe_inapplicable=True
        )
        assert rec.verdict is Verdict.NOT_APPLICABLE
        assert rec.total == 1  # A(1,0) * 3**0
        assert rec.order == 0
        assert rec.bound == -1

    def test_sc2_record(self):
        f = IntPolynomial((0, 0, 1))
        rec = check_claim(TheoremId.SC2, {"n": 4, "p": 2, "a": 1, "f": f, "r": 0})
        assert rec.bound is None
        assert rec.sc2 is not None and rec.sc2.satisfied
        assert rec.verdict in (Verdict.HOLDS, Verdict.HOLDS_VACUOUS)
        assert rec.margin is None
        assert rec.params["f"] == "0,0,1"
        data = rec.to_json_dict()
        assert data["bound"] == "sc2"
        assert data["sc2"]["rhs"] == str(rec.sc2.rhs)

    def test_missing_parameter(self):
        with pytest.raises(ParameterError):
            check_claim(TheoremId.WEISMAN, {"n": 3, "p": 2, "r": 0})
        with pytest.raises(ParameterError):
            check_claim(TheoremId.SC2, {"n": 3, "p": 2, "a": 1, "f": "0,1", "r": 0})

    def test_unknown_theorem(self):
        with pytest.raises(ParameterError):
            check_claim("nonsense", {"n": 3, "p": 2, "r": 0})
        with pytest.raises(ParameterError):
            GridSpec("nonsense", ns=(1,), primes=(2,))

    def test_residue_canonicalized_into_params(self):
        rec = check_claim(TheoremId.FLECK, {"n": 3, "p": 2, "r": -1})
        assert rec.params["r"] == 1


class TestGridSpec:
    def test_axis_normalization(self):
        grid = GridSpec(TheoremId.WEISMAN, ns=(3, 1, 2, 2), primes=(3, 2), alphas=(1,))
        assert grid.ns == (1, 2, 3)
        assert grid.primes == (2, 3)

    def test_validation(self):
        with pytest.raises(ParameterError):
            GridSpec(TheoremId.WEISMAN, ns=(1,), primes=(2,))  # missing alpha axis
        with pytest.raises(ParameterError):
            GridSpec(TheoremId.FLECK, ns=(1,), primes=(2,), alphas=(1,))  # stray axis
        with pytest.raises(ParameterError):
            GridSpec(TheoremId.SC2, ns=(1,), primes=(2,), a_values=(1,))  # no polynomials
        with pytest.raises(ParameterError):
            GridSpec(TheoremId.FLECK, ns=(1,), primes=(2,), residues="evens")

    def test_grid_params_order_and_residues(self):
        grid = GridSpec(TheoremId.WEISMAN, ns=(1, 2), primes=(2,), alphas=(1, 2))
        tuples = list(grid_params(grid))
        assert tuples == sorted(
            tuples, key=lambda t: (t["n"], t["p"], t["alpha"], t["r"])
        )
        # residues expand to one full period of the class modulus
        assert [t["r"] for t in tuples if t["n"] == 1 and t["alpha"] == 2] == [0, 1, 2, 3]

    def test_explicit_residues_canonicalized(self):
        grid = GridSpec(TheoremId.FLECK, ns=(5,), primes=(3,), residues=(4, 1, -2))
        tuples = list(grid_params(grid))
        assert [t["r"] for t in tuples] == [1]  # all three are 1 mod 3

    def test_deterministic(self):
        grid = GridSpec(TheoremId.SUN, ns=(4, 9), primes=(2, 3), alphas=(1, 2), betas=(0, 1), ls=(0, 1))
        assert list(grid_params(grid)) == list(grid_params(grid))


class TestRunGrid:
    def test_summary_and_invariants(self):
        grid = GridSpec(TheoremId.FLECK, ns=range(1, 31), primes=(2, 3))
        result = run_grid(grid)
        assert result.summary.total == len(result.records)
        assert result.violations == 0
        assert result.summary.first_violation is None
        for rec in result.records:
            if rec.verdict in (Verdict.HOLDS, Verdict.TIGHT):
                assert rec.margin >= 0
                assert (rec.margin == 0) == (rec.verdict is Verdict.TIGHT)

    def test_min_margin_zero_means_some_tight(self):
        result = run_grid(GridSpec(TheoremId.FLECK, ns=range(1, 31), primes=(2, 3)))
        assert result.summary.min_margin == 0
        assert result.summary.verdicts[Verdict.TIGHT.value] > 0

    def test_empty_intersection_residues_vacuous(self):
        grid = GridSpec(TheoremId.FLECK, ns=(1,), primes=(5,), residues=(3, 4))
        result = run_grid(grid)
        assert result.summary.total == 2
        assert result.summary.verdicts[Verdict.HOLDS_VACUOUS.value] == 2

    def test_worker_counts_agree(self):
        grids = [
            GridSpec(TheoremId.EC1, ns=range(1, 21), primes=(2, 3), alphas=(1, 2), ls=(0, 1)),
            GridSpec(TheoremId.EC1, ns=range(21, 26), primes=(2,), alphas=(1,), ls=(0,)),
        ]
        serial = run_grids(grids, workers=1)
        threaded = run_grids(grids, workers=4)
        assert [r.to_json_dict() for r in serial.records] == [
            r.to_json_dict() for r in threaded.records
        ]
        assert serial.summary == threaded.summary

    def test_capacity_error(self):
        triangles.set_row_limit(20)
        grid = GridSpec(TheoremId.SC1, ns=(30,), primes=(2,), ms=(1,), a_values=(1,))
        with pytest.raises(CapacityError):
            run_grid(grid)

    def test_binomial_theorems_do_not_need_tables(self):
        triangles.set_row_limit(10)
        grid = GridSpec(TheoremId.WEISMAN, ns=(40,), primes=(2,), alphas=(1,))
        assert run_grid(grid).violations == 0

    def test_fail_fast_without_violation_keeps_everything(self):
        grid = GridSpec(TheoremId.FLECK, ns=range(1, 11), primes=(2,))
        assert run_grid(grid, fail_fast=True).summary.total == 20

    def test_probe_inapplicable_in_grids(self):
        grid = GridSpec(TheoremId.WAN, ns=(4,), primes=(2,), ls=(2,))
        plain = run_grid(grid)
        probed = run_grid(grid, probe_inapplicable=True)
        assert plain.summary.verdicts[Verdict.NOT_APPLICABLE.value] == 2
        assert all(r.total is None for r in plain.records)
        assert all(r.total is not None for r in probed.records)
        assert probed.summary.verdicts[Verdict.NOT_APPLICABLE.value] == 2
