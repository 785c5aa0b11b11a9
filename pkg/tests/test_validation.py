from __future__ import annotations

import pytest

from shared.constants import PRESET_IDS
from shared.presets import hypothesis_violations, is_prime_power, preset_descriptors, preset_params
from shared.types import CampaignParams


def test_campaign_params_fill_in_m() -> None:
    params = CampaignParams(d=2, r=3, color_sizes=[5, 5, 5], caps=[2, 2, 3])
    assert params.m == 3
    assert params.hypotheses_hold
    assert params.guaranteed


def test_campaign_params_reject_m_mismatch() -> None:
    with pytest.raises(ValueError, match="m = 2"):
        CampaignParams(target="custom", d=1, r=2, m=2, color_sizes=[3, 3, 3], caps=[1, 1, 1])


def test_campaign_params_reject_caps_outside_range() -> None:
    with pytest.raises(ValueError, match="violates"):
        CampaignParams(target="custom", d=1, r=2, color_sizes=[3, 3], caps=[3, 1])
    with pytest.raises(ValueError, match="same length"):
        CampaignParams(target="custom", d=1, r=2, color_sizes=[3, 3], caps=[1])


def test_campaign_params_enforce_limits() -> None:
    with pytest.raises(ValueError, match="d exceeds"):
        CampaignParams(target="custom", d=7, r=2, color_sizes=[3], caps=[1])
    with pytest.raises(ValueError, match="trials exceeds"):
        CampaignParams(target="custom", d=1, r=2, color_sizes=[3], caps=[1], trials=10_001)
    with pytest.raises(ValueError, match="limited to 64 points"):
        CampaignParams(target="custom", d=1, r=2, color_sizes=[33, 32], caps=[1, 1])
    with pytest.raises(ValueError):
        CampaignParams(target="custom", d=1, r=2, color_sizes=[3], caps=[1], seed=2**64)


def test_campaign_params_require_hypotheses_unless_overridden() -> None:
    with pytest.raises(ValueError, match="hypotheses not met"):
        CampaignParams(d=1, r=2, color_sizes=[3, 3], caps=[1, 1])
    params = CampaignParams(d=1, r=2, color_sizes=[3, 3], caps=[1, 1], override=True)
    assert not params.hypotheses_hold
    assert not params.guaranteed


def test_custom_and_open_targets_promise_nothing() -> None:
    custom = CampaignParams(target="custom", d=1, r=2, color_sizes=[1, 1], caps=[1, 1])
    assert custom.hypotheses_hold and not custom.guaranteed
    hunt = CampaignParams(target="prob56", d=1, r=2, color_sizes=[3, 3], caps=[1, 1])
    assert hunt.hypotheses_hold and not hunt.guaranteed


def test_prime_powers() -> None:
    assert [n for n in range(1, 17) if is_prime_power(n)] == [2, 3, 4, 5, 7, 8, 9, 11, 13, 16]


@pytest.mark.parametrize("preset_id", PRESET_IDS)
def test_preset_params_meet_their_own_hypotheses(preset_id: str) -> None:
    for d, r in [(1, 3), (2, 3), (2, 4)]:
        values = preset_params(preset_id, d, r)
        assert hypothesis_violations(preset_id, d, r, values["color_sizes"], values["caps"]) == []


def test_preset_shapes() -> None:
    assert preset_params("thm51", 2, 3) == {"color_sizes": [5, 5, 5], "caps": [2, 2, 3]}
    assert preset_params("thm57", 1, 3) == {"color_sizes": [5, 5, 1], "caps": [2, 2, 2]}
    assert preset_params("thm58", 2, 3) == {"color_sizes": [2, 2, 5], "caps": [2, 2, 3]}
    assert preset_params("prob56", 1, 2) == {"color_sizes": [3, 3], "caps": [1, 1]}
    with pytest.raises(ValueError, match="Unknown preset"):
        preset_params("thm99", 1, 2)


def test_hypothesis_violations_name_what_is_missing() -> None:
    assert any("prime power" in v for v in hypothesis_violations("thm51", 1, 6, [11, 11], [5, 6]))
    assert hypothesis_violations("prob56", 1, 6, [11, 11], [5, 5]) == []
    assert any("needs r >= 3" in v for v in hypothesis_violations("thm58", 1, 2, [3, 3], [1, 2]))
    assert any("single vertex" in v for v in hypothesis_violations("thm57", 1, 2, [3, 3, 2], [1, 1, 1]))
    assert any("|C_2| = 2 < 3" in v for v in hypothesis_violations("cor55", 1, 2, [3, 2], [1, 2]))
    assert hypothesis_violations("custom", 1, 6, [1], [6]) == []


def test_preset_descriptors_cover_every_preset() -> None:
    descriptors = preset_descriptors()
    assert [item["preset_id"] for item in descriptors] == PRESET_IDS
    assert {item["mode"] for item in descriptors} == {"campaign", "hunt"}
