import json

import pytest

import rspunct


def test_field_and_code_basics():
    f = rspunct.PrimeField(5)
    assert f.order == 5
    assert f.add(3, 4) == 2
    assert f.mul(3, 4) == 2
    assert f.inv(2) == 3
    assert rspunct.PrimeField.is_prime(97)
    assert not rspunct.PrimeField.is_prime(91)
    with pytest.raises(ValueError):
        rspunct.PrimeField(4)

    code = rspunct.RSCode.full_length(5, 2)
    assert (code.p, code.k, code.n) == (5, 2, 5)
    assert code.encode([1, 2]) == [1, 3, 0, 2, 4]
    assert code.interpolate([1, 3, 0, 2, 4]) == [1, 2]
    assert code.interpolate([1, 3, 0, 2, 3]) is None
    assert code.min_distance() == 4  # MDS: n - k + 1
    sub = code.punctured([3, 1, 5])
    assert sub.alpha == [2, 0, 4]
    assert sub.min_distance() == 2

    again = rspunct.RSCode.from_json(code.to_json())
    assert again.alpha == code.alpha


def test_curves_and_planner():
    assert rspunct.capacity_radius(0.3) == pytest.approx(0.7)
    assert rspunct.paper_radius(0.2, 2) == pytest.approx(0.5)
    assert rspunct.johnson_radius(0.2, 2) <= rspunct.paper_radius(0.2, 2)
    with pytest.raises(rspunct.InfeasibleError):
        rspunct.paper_radius(0.6, 2)

    plan = rspunct.plan(1, 0.25, eps=0.1, zeta=0.1)
    assert plan["L"] == 19
    assert plan["c"] == pytest.approx(1.8)
    assert plan["radius"] >= plan["target_radius"] - 1e-12
    sized = rspunct.plan(1, 0.25, n=100)
    assert sized["k"] == 25
    assert sized["q_min"] == rspunct.field_size_bound(100, sized["cprime"])

    csv = rspunct.curves_csv(2, eps=0.1, rmin=0.1, rmax=0.4, steps=4)
    lines = csv.strip().splitlines()
    assert lines[0] == "# l=2 eps=0.1"
    assert lines[1] == "R,johnson,capacity,paper,theorem"
    assert len(lines) == 6


def test_oracles_and_witnesses():
    rep = rspunct.RSCode(rspunct.PrimeField(3), 1, [0, 1])
    assert rspunct.error_budget(0.5, 2) == 1

    w = rspunct.list_decoding_witness(rep, 0.5, 1)
    assert w is not None
    assert len(w["offenders"]) == 2
    assert not rspunct.is_list_decodable(rep, 0.5, 1)
    assert rspunct.list_decoding_witness(rep, 0.5, 2) is None
    assert rspunct.is_list_decodable(rep, 0.5, 2)

    rw = rspunct.list_recovery_witness(rep, 0.0, 2, 1)
    assert rw is not None
    assert len(rw["lists"]) == 2
    assert rspunct.is_list_recoverable(rep, 0.0, 2, 2)

    with pytest.raises(rspunct.CapExceededError):
        rspunct.is_list_decodable(rspunct.RSCode.full_length(31, 5), 0.1, 1)


def test_certificates():
    parent = rspunct.RSCode.full_length(5, 3)
    cert = {
        "a": [2, 3],
        "S": [[0, 0]],
        "gammas_msgs": [[2, 2, 1], [0, 0, 0]],
        "c": 0.5,
        "h": 2,
    }
    valid, violated = rspunct.check_certificate(cert, parent)
    assert valid and violated == 0

    weak = dict(cert, c=1)
    valid, violated = rspunct.check_certificate(json.dumps(weak), parent)
    assert not valid and violated == 1

    counts = rspunct.count_bad_puncturings(rspunct.RSCode.full_length(5, 2), 2, 1, 1, "1/2")
    assert counts["tuples"] == 20
    assert counts["bad_count"] == 20
    assert rspunct.count_bad_puncturings(
        rspunct.RSCode.full_length(5, 2), 2, 1, 1, "2"
    )["bad_count"] == 0


def test_experiments_reproduce():
    safe = {"p": 13, "k": 2, "n": 6, "r": "1/3", "l": 1, "L": 1, "trials": 20, "seed": 7}
    summary = rspunct.run_experiment(safe)
    assert summary["failures"] == 0
    assert summary["config"]["rng_algorithm"] == rspunct.RNG_ALGORITHM
    assert rspunct.run_experiment(safe) == summary

    dense = {"p": 3, "k": 2, "n": 2, "r": 0.5, "l": 1, "L": 4, "trials": 10, "seed": 4}
    out = rspunct.run_experiment(dense)
    assert out["failures"] == 10
    assert out["fraction"] == 1.0

    csv = rspunct.sweep_csv(json.dumps(dict(safe, trials=2)), [0.25, 0.5], eps=0.1)
    lines = csv.strip().splitlines()
    assert lines[2] == "R,johnson,capacity,paper,theorem,empirical"
    assert len(lines) == 5


def test_rng_substreams_pinned():
    assert rspunct.RNG_ALGORITHM == "mt19937_64"
    assert rspunct.substream_seed(0, 0) == 16294208416658607535
    assert rspunct.substream_seed(42, 2) == 5139283748462763858
