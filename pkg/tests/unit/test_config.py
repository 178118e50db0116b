"""
Unit tests for configuration loading.
"""

import pytest
from pydantic import ValidationError

from core.config import ENV_PREFIX, DualityConfig, load_config, with_overrides
from core.exceptions import ConfigurationError


@pytest.fixture(autouse=True)
def clean_environment(monkeypatch, tmp_path):
    """Run each test away from any .env file and without FINITE_DUALITY_* variables."""
    for name in DualityConfig.model_fields:
        monkeypatch.delenv(ENV_PREFIX + name.upper(), raising=False)
    monkeypatch.chdir(tmp_path)


class TestDefaults:
    """Test the built-in defaults."""

    def test_defaults(self):
        config = load_config()
        assert config.max_size == 3
        assert config.word_bound == 8
        assert config.log_level == "INFO"

    def test_frozen(self):
        config = load_config()
        with pytest.raises(ValidationError):
            config.max_size = 4


class TestSources:
    """Test the YAML file and the environment."""

    def test_yaml_file(self, tmp_path):
        path = tmp_path / "duality.yaml"
        path.write_text("max_size: 2\nlog_level: debug\n", encoding="utf-8")
        config = load_config(path)
        assert config.max_size == 2
        assert config.log_level == "DEBUG"

    def test_empty_yaml_file(self, tmp_path):
        path = tmp_path / "empty.yaml"
        path.write_text("", encoding="utf-8")
        assert load_config(path) == DualityConfig()

    def test_environment_wins_over_file(self, tmp_path, monkeypatch):
        path = tmp_path / "duality.yaml"
        path.write_text("max_size: 2\n", encoding="utf-8")
        monkeypatch.setenv("FINITE_DUALITY_MAX_SIZE", "4")
        assert load_config(path).max_size == 4

    def test_environment_ignored_on_request(self, monkeypatch):
        monkeypatch.setenv("FINITE_DUALITY_WORD_BOUND", "3")
        assert load_config(use_env=False).word_bound == 8

    def test_dotenv_file(self, tmp_path, monkeypatch):
        # registered so the value loaded from .env is removed afterwards
        monkeypatch.setenv("FINITE_DUALITY_SEED", "0")
        monkeypatch.delenv("FINITE_DUALITY_SEED")
        (tmp_path / ".env").write_text("FINITE_DUALITY_SEED=7\n", encoding="utf-8")
        assert load_config().seed == 7


class TestErrors:
    """Test configuration errors."""

    def test_missing_file(self, tmp_path):
        with pytest.raises(ConfigurationError) as exc:
            load_config(tmp_path / "missing.yaml")
        assert exc.value.error_code == "CONFIG_UNREADABLE"

    def test_bad_yaml(self, tmp_path):
        path = tmp_path / "bad.yaml"
        path.write_text("max_size: [1, 2\n", encoding="utf-8")
        with pytest.raises(ConfigurationError) as exc:
            load_config(path)
        assert exc.value.error_code == "CONFIG_BAD_YAML"

    def test_not_a_mapping(self, tmp_path):
        path = tmp_path / "list.yaml"
        path.write_text("- 1\n- 2\n", encoding="utf-8")
        with pytest.raises(ConfigurationError) as exc:
            load_config(path)
        assert exc.value.error_code == "CONFIG_BAD_YAML"

    def test_out_of_range(self, monkeypatch):
        monkeypatch.setenv("FINITE_DUALITY_MAX_SIZE", "9")
        with pytest.raises(ConfigurationError) as exc:
            load_config()
        assert exc.value.error_code == "CONFIG_INVALID"
        assert exc.value.details["errors"][0]["field"] == "max_size"

    def test_unknown_key(self, tmp_path):
        path = tmp_path / "extra.yaml"
        path.write_text("colour: blue\n", encoding="utf-8")
        with pytest.raises(ConfigurationError) as exc:
            load_config(path)
        assert exc.value.error_code == "CONFIG_INVALID"

    def test_unknown_log_level(self, monkeypatch):
        monkeypatch.setenv("FINITE_DUALITY_LOG_LEVEL", "chatty")
        with pytest.raises(ConfigurationError):
            load_config()

    def test_not_utf8(self, tmp_path):
        path = tmp_path / "latin1.yaml"
        path.write_bytes(b"max_size: 2 # \xff\n")
        with pytest.raises(ConfigurationError) as exc:
            load_config(path)
        assert exc.value.error_code == "CONFIG_BAD_YAML"


class TestOverrides:
    """Test command-line overrides of a loaded configuration."""

    def test_replaces_field(self):
        config = with_overrides(load_config(), max_size=1)
        assert config.max_size == 1
        assert config.word_bound == 8

    def test_none_keeps_value(self):
        assert with_overrides(load_config(), word_bound=None).word_bound == 8

    @pytest.mark.parametrize(
        "field, value", [("max_size", -1), ("max_size", 9), ("word_bound", -5)]
    )
    def test_bounds_are_validated(self, field, value):
        with pytest.raises(ConfigurationError) as exc:
            with_overrides(load_config(), **{field: value})
        assert exc.value.error_code == "CONFIG_INVALID"
        assert exc.value.details["errors"][0]["field"] == field
