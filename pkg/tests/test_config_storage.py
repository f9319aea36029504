import json
import logging

import pytest

from services.config import DEFAULT_ORDER, ModeOverride, OutputFormat, RunConfig, resolve_run_config
from services.storage import CertificateStorage
from services.utils import get_identities_dir
from theta.exporters import certificate_to_data, certificate_to_json
from theta.prover import verify

from conftest import load_identity, load_shifts


class TestRunConfig:
    def test_defaults(self):
        cfg = resolve_run_config(env={})
        assert cfg.order == DEFAULT_ORDER == 100
        assert cfg.output is OutputFormat.TEXT
        assert cfg.mode_override is None
        assert not cfg.json

    def test_environment_fills_gaps(self):
        cfg = resolve_run_config(env={"THETA_ORDER": "40", "THETA_OUTPUT": "JSON"})
        assert cfg.order == 40
        assert cfg.json

    def test_flags_beat_environment(self):
        cfg = resolve_run_config(order=12, env={"THETA_ORDER": "40"})
        assert cfg.order == 12

    def test_command_default_order(self):
        assert resolve_run_config(env={}, default_order=60).order == 60

    @pytest.mark.parametrize("raw", ["zero", "0", "-5"])
    def test_bad_order_falls_back_with_warning(self, raw, caplog):
        with caplog.at_level(logging.WARNING, logger="services.config.run_config"):
            cfg = resolve_run_config(env={"THETA_ORDER": raw})
        assert cfg.order == DEFAULT_ORDER
        assert "THETA_ORDER" in caplog.text

    def test_bad_output_falls_back(self, caplog):
        with caplog.at_level(logging.WARNING, logger="services.config.run_config"):
            cfg = resolve_run_config(env={"THETA_OUTPUT": "yaml"})
        assert cfg.output is OutputFormat.TEXT
        assert "THETA_OUTPUT" in caplog.text

    def test_invalid_values_raise(self):
        with pytest.raises(ValueError):
            RunConfig(order=0)
        with pytest.raises(ValueError):
            resolve_run_config(mode="fast", env={})
        assert resolve_run_config(mode="series", env={}).mode_override is ModeOverride.SERIES


def test_identities_dir_override(tmp_path):
    assert get_identities_dir({"THETA_DATA_DIR": str(tmp_path)}) == tmp_path
    assert get_identities_dir({}).name == "identities"
    assert (get_identities_dir({}) / "bailey.theta").is_file()


class TestCertificateStorage:
    @pytest.fixture
    def certificate(self):
        return verify(load_identity("ideab"), load_shifts("ideab"))

    def test_save_and_load(self, tmp_path, certificate):
        storage = CertificateStorage(tmp_path / "nested" / "ideab.json")
        assert not storage.exists()
        text = certificate_to_json(certificate)
        path = storage.save(text)
        assert path.exists()
        assert not path.with_suffix(".json.tmp").exists()
        assert storage.load_text() == text
        assert storage.load() == certificate_to_data(certificate)

    def test_missing_file(self, tmp_path):
        storage = CertificateStorage(tmp_path / "missing.json")
        assert storage.load() is None
        assert storage.load_text() is None

    def test_corrupt_or_wrong_shape(self, tmp_path):
        path = tmp_path / "cert.json"
        path.write_text("{not json", encoding="utf-8")
        assert CertificateStorage(path).load() is None
        path.write_text("[1, 2]", encoding="utf-8")
        assert CertificateStorage(path).load() is None


def test_certificate_json_is_canonical():
    cert = verify(load_identity("chu"), load_shifts("chu"))
    text = certificate_to_json(cert)
    assert text.endswith("\n")
    data = certificate_to_data(cert)
    assert list(json.loads(text)) == sorted(data)
    assert data["status"] == "Proved"
    assert data["detail"] == ""
    assert all(isinstance(v, str) for p in data["pi"] for v in p)
    atoms = [atom for check in data["checks"] for form in check["terms"] for atom in form]
    assert atoms
    assert all(isinstance(atom["constant"], str) and isinstance(atom["q_exponent"], str) for atom in atoms)
