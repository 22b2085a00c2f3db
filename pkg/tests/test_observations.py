import math

import pytest

from diskstab.geom import Disk, Point
from diskstab.observations import (
    HypothesisError,
    ObservationConfig,
    ObservationId,
    check_observation,
    run_observation_suite,
    sample_observation,
)


@pytest.mark.parametrize("obs", list(ObservationId))
def test_suite_no_counterexamples_with_validation(obs):
    rep = run_observation_suite(obs, 3000, seed=2, validate_every=1)
    assert rep.ok, rep.violations[:5]
    assert rep.checked[obs.value] == 3000


@pytest.mark.parametrize("obs", list(ObservationId))
def test_sample_observation_validates_and_concludes(obs):
    for seed in range(50):
        cfg = sample_observation(obs, seed)
        assert cfg.obs_id is obs
        assert check_observation(cfg) is True


def test_obs8_worked_example():
    cfg = ObservationConfig(
        ObservationId.OBS8_RAYS,
        {
            "p": Point(0.0, 0.0),
            "delta": Disk(Point(-1.0, 1.0), 1.6),
            "reach": Point(0.1, -0.1),
        },
    )
    # the reach point is inside the disk and in the lower-right quadrant
    assert math.hypot(-1.0 - 0.1, 1.0 + 0.1) < 1.6
    assert check_observation(cfg) is True


def test_inconsistent_config_rejected():
    cfg = ObservationConfig(
        ObservationId.OBS8_RAYS,
        {
            "p": Point(0.0, 0.0),
            "delta": Disk(Point(1.0, 1.0), 1.6),  # not upper-left of p
            "reach": Point(0.1, -0.1),
        },
    )
    with pytest.raises(HypothesisError):
        check_observation(cfg)


def test_obs2_sampler_outside_strip():
    for seed in range(100):
        cfg = sample_observation(ObservationId.OBS2_OUTSIDE_STRIP, seed)
        objs = cfg.objects
        px, py = objs["line_point"]
        dx, dy = objs["line_dir"]

        def proj(p):
            return (p.x - px) * dx + (p.y - py) * dy

        t = proj(objs["eps"].center)
        assert t < proj(objs["a"]) or t > proj(objs["b"])


def test_obs3_boundary_radius_cases_present():
    tight = 0
    for seed in range(200):
        cfg = sample_observation(ObservationId.OBS3_RADIUS, seed)
        if cfg.objects["eps"].radius <= cfg.objects["delta"].radius * (1 + 1e-9):
            tight += 1
    assert tight > 0  # the sampler exercises the radius-equality boundary
