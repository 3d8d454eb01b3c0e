import statistics

from netportrait import ensemble_distributions, rewiring_curve


def test_ensemble_distributions_shape_and_determinism():
    rows = ensemble_distributions(n_nodes=40, avg_degree=4.0, n_pairs=3, seed=5)
    assert len(rows) == 9
    assert [r.condition for r in rows] == ["er-er"] * 3 + ["ba-ba"] * 3 + ["er-ba"] * 3
    assert all(0.0 <= r.d_js <= 1.0 for r in rows)
    again = ensemble_distributions(n_nodes=40, avg_degree=4.0, n_pairs=3, seed=5)
    assert rows == again


def test_ensemble_separation_at_scale():
    # the cross-ensemble mean clears the within-ensemble ranges once the
    # graphs are large enough for the degree structure to dominate
    rows = ensemble_distributions(n_nodes=1000, avg_degree=6.0, n_pairs=5, seed=17)
    by = {}
    for r in rows:
        by.setdefault(r.condition, []).append(r.d_js)
    assert statistics.fmean(by["er-ba"]) > 0.6
    assert statistics.fmean(by["er-er"]) < 0.5
    assert statistics.fmean(by["ba-ba"]) < 0.5


def test_rewiring_curve_zero_rewirings_is_zero():
    rows = rewiring_curve(models=("er",), n_nodes=40, er_p=0.1, rewirings=(0,),
                          n_seeds=3, seed=2)
    assert all(r.mean_d_js == 0.0 and r.sd_d_js == 0.0 for r in rows)


def test_rewiring_curve_shape_and_determinism():
    rows = rewiring_curve(models=("er", "ba"), n_nodes=40, er_p=0.1, ba_m=2,
                          rewirings=(2, 10), n_seeds=3, seed=4)
    assert len(rows) == 8  # 2 models x 2 modes x 2 rewiring counts
    assert {(r.model, r.mode) for r in rows} == {
        ("er", "random"), ("er", "degree-preserving"),
        ("ba", "random"), ("ba", "degree-preserving")}
    assert all(r.n_seeds == 3 for r in rows)
    again = rewiring_curve(models=("er", "ba"), n_nodes=40, er_p=0.1, ba_m=2,
                           rewirings=(2, 10), n_seeds=3, seed=4)
    assert rows == again
