import pytest

import antlab


def test_run_and_digest_deterministic():
    c = antlab.Config()
    final1, trace, traj = antlab.run(c, "LR", 1000, record_trace=True, record_trajectory=True)
    final2, _, _ = antlab.run(c, "LR", 1000)
    assert len(trace) == 1000
    assert len(traj) == 1000
    assert final1.digest() == final2.digest()
    assert final1.position == traj[-1]


def test_langton_highway_certificate():
    cert = antlab.detect_highway(antlab.Config(), "LR", max_steps=13000)
    assert cert is not None
    assert cert["period"] == 104
    assert sorted(abs(d) for d in cert["drift"]) == [2, 2]
    assert cert["onset"] < 13000


def test_certify_rejects_zero_drift():
    res = antlab.certify_highway(antlab.Config(), "LR", t0=0, period=104, drift=(0, 0))
    assert res["certified"] is False
    assert res["reason"] == "ZeroDrift"


def test_classify_langton():
    report = antlab.classify(antlab.Config(), "LR")
    assert report["class"] == "Highway"
    assert report["period"] == 104


def test_cell_roundtrip():
    c = antlab.Config()
    c.set(3, -4, 1)
    assert c.get(3, -4) == 1
    assert (3, -4, 1) in c.nonzero_cells()


def test_state_validation():
    c = antlab.Config()
    c.set(0, 0, 1)
    with pytest.raises(Exception):
        antlab.run(c, "L", 1)  # state 1 is outside the alphabet of a 1-letter word


def test_visit_histogram_conserves_steps():
    total, max_count, dist = antlab.visit_histogram(antlab.Config(), "LR", 13000)
    assert total == 13000
    assert sum(v * c for v, c in dist.items()) == 13000


def test_render_pgm_header():
    final, _, _ = antlab.run(antlab.Config(), "LR", 500)
    img = antlab.render_pgm(final)
    assert img.startswith(b"P5\n")
