"""
Unit tests for bell-hopf configuration.
"""

import tomllib
from pathlib import Path

import pytest
import yaml

from bell_hopf.config import ENV_FOCK_DIM
from bell_hopf.config import ENV_LOG_LEVEL
from bell_hopf.config import ENV_ORDER
from bell_hopf.config import ENV_PRECISION
from bell_hopf.config import BellHopfConfig
from bell_hopf.config import load_config


class TestBellHopfConfig:
    """BellHopfConfig defaults, validation and persistence."""

    def test_default_initialization(self):
        config = BellHopfConfig()

        assert config.truncation_order == 16
        assert config.fock_dimension == 32
        assert config.decimal_precision == 30
        assert config.max_enumeration_n == 12
        assert config.hopf_weight_bound == 6
        assert config.max_workers == 1
        assert config.log_level == "WARNING"

    def test_log_level_is_normalized(self):
        assert BellHopfConfig(log_level="debug").log_level == "DEBUG"
        with pytest.raises(ValueError):
            BellHopfConfig(log_level="chatty")

    def test_range_validation(self):
        with pytest.raises(ValueError):
            BellHopfConfig(fock_dimension=2)
        with pytest.raises(ValueError):
            BellHopfConfig(truncation_order=-1)

    def test_with_overrides_skips_invalid(self):
        config = BellHopfConfig().with_overrides(truncation_order=8, fock_dimension=1, decimal_precision=None)

        assert config.truncation_order == 8
        assert config.fock_dimension == 32
        assert config.decimal_precision == 30

    def test_load_from_environment(self):
        environ = {ENV_ORDER: "10", ENV_FOCK_DIM: "64", ENV_LOG_LEVEL: "info"}
        config = BellHopfConfig().load_from_environment(environ)

        assert config.truncation_order == 10
        assert config.fock_dimension == 64
        assert config.log_level == "INFO"

    def test_invalid_env_values_keep_defaults(self):
        config = BellHopfConfig().load_from_environment({ENV_ORDER: "many", ENV_FOCK_DIM: " "})

        assert config.truncation_order == 16
        assert config.fock_dimension == 32

    def test_save_and_load_config_file(self, tmp_path):
        path = tmp_path / "nested" / "bell-hopf.yaml"
        BellHopfConfig(truncation_order=5, max_workers=3).save_to_file(path)

        loaded = BellHopfConfig.load_from_file(path)
        assert loaded.truncation_order == 5
        assert loaded.max_workers == 3

    def test_missing_file(self, tmp_path):
        with pytest.raises(FileNotFoundError):
            BellHopfConfig.load_from_file(tmp_path / "absent.yaml")

    def test_invalid_yaml(self, tmp_path):
        path = tmp_path / "bad.yaml"
        path.write_text("truncation_order: [1, 2\n", encoding="utf-8")
        with pytest.raises(ValueError):
            BellHopfConfig.load_from_file(path)

    def test_non_mapping_yaml(self, tmp_path):
        path = tmp_path / "list.yaml"
        path.write_text(yaml.safe_dump([1, 2]), encoding="utf-8")
        with pytest.raises(ValueError):
            BellHopfConfig.load_from_file(path)

    def test_empty_file_gives_defaults(self, tmp_path):
        path = tmp_path / "empty.yaml"
        path.write_text("", encoding="utf-8")
        assert BellHopfConfig.load_from_file(path) == BellHopfConfig()


class TestLoadConfig:
    def test_file_then_environment(self, tmp_path, monkeypatch):
        path = tmp_path / "config.yaml"
        path.write_text("truncation_order: 4\nfock_dimension: 48\n", encoding="utf-8")
        monkeypatch.setenv(ENV_ORDER, "9")

        config = load_config(path)
        assert config.truncation_order == 9
        assert config.fock_dimension == 48

    def test_default_search_path(self, tmp_path, monkeypatch):
        monkeypatch.chdir(tmp_path)
        monkeypatch.setenv("HOME", str(tmp_path))
        for name in (ENV_ORDER, ENV_FOCK_DIM, ENV_PRECISION, ENV_LOG_LEVEL):
            monkeypatch.delenv(name, raising=False)
        (tmp_path / "bell-hopf.yaml").write_text("decimal_precision: 50\n", encoding="utf-8")

        assert load_config().decimal_precision == 50


class TestProjectManifest:
    def test_dev_tools_have_one_source(self):
        manifest = tomllib.loads((Path(__file__).parents[2] / "pyproject.toml").read_text(encoding="utf-8"))
        assert "dev" not in manifest["project"].get("optional-dependencies", {})
        dev = [req.split(">")[0].split("[")[0] for req in manifest["dependency-groups"]["dev"]]
        assert {"pytest", "pytest-asyncio", "ruff", "mypy"} <= set(dev)
