import pytest

from neutrosophic.selfcheck import format_results, run_selfcheck


def test_all_properties_pass():
    results = run_selfcheck(2000, seed=7)
    failed = [r for r in results if not r.ok]
    assert not failed, format_results(failed, 2000, 7)
    assert len(results) > 100


def test_same_seed_gives_identical_summary():
    a = format_results(run_selfcheck(500, seed=3), 500, 3)
    b = format_results(run_selfcheck(500, seed=3), 500, 3)
    assert a == b


def test_property_set_does_not_depend_on_seed():
    a = run_selfcheck(50, seed=1)
    b = run_selfcheck(50, seed=2)
    assert [r.name for r in a] == [r.name for r in b]
    assert all(r.ok for r in a + b)


def test_single_sample():
    assert all(r.ok for r in run_selfcheck(1, seed=0))


def test_rejects_empty_sample():
    with pytest.raises(ValueError):
        run_selfcheck(0)


def test_impossible_tolerance_reports_counterexamples():
    """A zero partition tolerance trips on rounding, which exercises the failure path."""
    results = run_selfcheck(2000, seed=0, tol=0.0)
    failed = [r for r in results if not r.ok]
    assert failed
    assert all(r.counterexample for r in failed)
    assert "FAIL" in format_results(results, 2000, 0)
