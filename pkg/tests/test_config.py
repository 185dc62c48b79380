# Copyright (C) 2024-2026 The twistkam authors
#
# Permission is hereby granted, free of charge, to any person obtaining a copy of this software and associated
# documentation files (the "Software"), to deal in the Software without restriction, including without limitation the
# rights to use, copy, modify, merge, publish, distribute, sublicense, and/or sell copies of the Software, and to
# permit persons to whom the Software is furnished to do so, subject to the following conditions:
#
# The above copyright notice and this permission notice shall be included in all copies or substantial portions of the
# Software.
#
# THE SOFTWARE IS PROVIDED "AS IS", WITHOUT WARRANTY OF ANY KIND, EXPRESS OR IMPLIED, INCLUDING BUT NOT LIMITED TO THE
# WARRANTIES OF MERCHANTABILITY, FITNESS FOR A PARTICULAR PURPOSE AND NONINFRINGEMENT. IN NO EVENT SHALL THE AUTHORS OR
# COPYRIGHT HOLDERS BE LIABLE FOR ANY CLAIM, DAMAGES OR OTHER LIABILITY, WHETHER IN AN ACTION OF CONTRACT, TORT OR
# OTHERWISE, ARISING FROM, OUT OF OR IN CONNECTION WITH THE SOFTWARE OR THE USE OR OTHER DEALINGS IN THE SOFTWARE.

"""Configuration validation, defaults and resolution into run settings."""

import pytest

from twistkam.config import build_pair, load_config, merge_configuration, resolve, resolve_alpha
from twistkam.diophantine import GOLDEN
from twistkam.errors import ConfigError, DegenerateError
from twistkam.funcspace import Interval
from twistkam.maps import Translation, Twist

KAM_SECTION = {"pair": {"kind": "identity"}, "semiconjugacy": {"kind": "projection"}}


def test_merge_configuration():
    base = {"a": 1, "b": {"c": 2, "d": 3}}
    merged = merge_configuration(base, {"b": {"d": 4}, "e": 5})
    assert merged == {"a": 1, "b": {"c": 2, "d": 4}, "e": 5}
    assert base == {"a": 1, "b": {"c": 2, "d": 3}}


def test_resolve_alpha():
    assert resolve_alpha("golden") == GOLDEN
    assert resolve_alpha("2/7") == 2.0 / 7.0
    assert resolve_alpha(" 1 / 3 ") == 1.0 / 3.0
    assert resolve_alpha(0.3) == 0.3


def test_defaults_are_filled():
    config = resolve({"alpha": "golden", "kam": KAM_SECTION}, "kam")
    assert config.alpha == GOLDEN
    assert config.interval == Interval(-0.25, 0.25)
    assert config.domain == Interval(-0.5, 0.5)
    assert (config.grid.nx, config.grid.ny) == (64, 32)
    assert config.tol == 1e-9
    assert config.max_iter == 12
    assert config.section["commute_tol"] == 1e-8
    assert config.section["semiconjugacy"]["lipschitz"] == 2.0
    assert 0.99 <= config.dio.tau <= 1.05


def test_kam_config_follows_settings():
    config = resolve({"alpha": "golden", "tol": 1e-7, "max_iter": 3, "kam": KAM_SECTION}, "kam")
    kam_config = config.kam_config()
    assert kam_config.tol_e0 == 1e-7
    assert kam_config.max_iter == 3
    assert kam_config.dio is config.dio
    assert not kam_config.progress


def test_resolved_document_resolves_again():
    config = resolve({"alpha": "1/3", "sigma": 0.1, "tau": 1.5, "kam": KAM_SECTION}, "kam")
    again = resolve(config.document, "kam")
    assert again.document == config.document
    assert again.dio == config.dio


def test_missing_keys_are_named():
    with pytest.raises(ConfigError) as e:
        resolve({}, "kam")
    assert "missing required key 'alpha'" in e.value.violations
    assert "missing required key 'kam.pair'" in e.value.violations
    assert "missing required key 'kam.semiconjugacy'" in e.value.violations


def test_alpha_not_needed_everywhere():
    config = resolve({}, "counterexample-2d")
    assert config.alpha is None and config.dio is None
    assert config.section["delta"] == 0.05


def test_unknown_key():
    with pytest.raises(ConfigError) as e:
        resolve({"alpha": "golden", "bogus": 1}, "constants")
    assert e.value.violations == ["unknown key 'bogus'"]


def test_bad_pair_kind():
    with pytest.raises(ConfigError) as e:
        resolve({"alpha": "golden", "kam": {"pair": {"kind": "weird"}, "semiconjugacy": {"kind": "projection"}}}, "kam")
    assert any(v.startswith("kam.pair.kind must be one of") for v in e.value.violations)


def test_type_violations_are_collected():
    with pytest.raises(ConfigError) as e:
        resolve({"alpha": 1.5, "grid": {"nx": "64"}, "tol": -1}, "constants")
    assert len(e.value.violations) == 3


def test_consistency_checks():
    with pytest.raises(ConfigError) as e:
        resolve({"grid": {"nx": 48}, "counterexample-2d": {"delta": 0.2}}, "counterexample-2d")
    assert len(e.value.violations) == 2


def test_wrap_must_fit_interval():
    with pytest.raises(ConfigError) as e:
        resolve({"alpha": "golden", "standard-map": {"wrap": 1.0}}, "standard-map")
    assert len(e.value.violations) == 1
    assert e.value.violations[0].startswith("standard-map.wrap must not exceed")

    document = {"alpha": "golden", "interval": {"lo": 0.0, "hi": 1.0}, "standard-map": {"wrap": 1.0}}
    assert resolve(document, "standard-map").section["wrap"] == 1.0


def test_unknown_subcommand():
    with pytest.raises(ConfigError):
        resolve({}, "plot")


def test_rational_alpha_keeps_output_dir():
    with pytest.raises(DegenerateError) as e:
        resolve({"alpha": "1/3", "output_dir": "runs/rational", "kam": KAM_SECTION}, "kam")
    assert (e.value.p, e.value.q) == (1, 3)
    assert e.value.output_dir == "runs/rational"


def test_bundled_configurations_load(config_path):
    for name, subcommand in (
        ("kam_manufactured.json", "kam"),
        ("kam_rational.json", "kam"),
        ("kam_no_intersection.json", "kam"),
        ("kam_frequency.json", "kam"),
        ("diagnose.json", "diagnose"),
        ("standard_map.json", "standard-map"),
        ("counterexample_2d.json", "counterexample-2d"),
        ("cohomology.json", "cohomology"),
        ("constants.json", "constants"),
    ):
        assert load_config(config_path(name), subcommand).subcommand == subcommand


def test_yaml_configuration(tmp_path):
    path = tmp_path / "kam.yaml"
    path.write_text(
        "alpha: 2/7\nsigma: 0.1\ntau: 1.5\nkam:\n  pair: {kind: identity}\n  semiconjugacy: {kind: projection}\n"
    )
    config = load_config(str(path), "kam")
    assert config.alpha == 2.0 / 7.0


def test_unparsable_configuration(tmp_path):
    path = tmp_path / "broken.json"
    path.write_text("{\"alpha\": ")
    with pytest.raises(ConfigError):
        load_config(str(path), "kam")


def test_build_identity_pair():
    config = resolve({"alpha": "golden", "kam": KAM_SECTION}, "kam")
    pair = build_pair(config)
    assert isinstance(pair.F.base, Twist)
    assert pair.K.base == Translation(GOLDEN)
    assert pair.F.domain == config.domain
    assert pair.W.slope() == 0.0


def test_build_frequency_pair(config_path):
    config = load_config(config_path("kam_frequency.json"), "kam")
    pair = build_pair(config)
    assert isinstance(pair.F.base, Twist)
    assert pair.frequency is not None
    assert pair.F.domain == config.domain


def test_rational_pair_must_match_alpha():
    document = {"alpha": "golden", "kam": {"pair": {"kind": "rational"}, "semiconjugacy": {"kind": "projection"}}}
    with pytest.raises(ConfigError):
        build_pair(resolve(document, "kam"))
