import pytest

import config.settings as settings_module
from config.settings import DEFAULT_MAX_N, Settings


class TestSettings:
    def test_defaults(self, monkeypatch):
        monkeypatch.delenv("EPIGEN_MAX_N", raising=False)
        loaded = Settings.load()
        assert loaded.max_n == DEFAULT_MAX_N
        assert loaded.random_seed == 0

    def test_environment_limit(self, monkeypatch):
        monkeypatch.setenv("EPIGEN_MAX_N", " 5 ")
        assert Settings.load().max_n == 5

    @pytest.mark.parametrize("value", ["abc", "0", "2.5"])
    def test_malformed_environment_limit(self, monkeypatch, value):
        monkeypatch.setenv("EPIGEN_MAX_N", value)
        with pytest.raises(ValueError, match="invalid max_n"):
            Settings.load()

    def test_overrides_skip_none_and_revalidate(self, monkeypatch):
        monkeypatch.delenv("EPIGEN_MAX_N", raising=False)
        base = Settings.load()
        assert base.with_overrides(max_n=None, random_seed=7) == Settings(max_n=DEFAULT_MAX_N, random_seed=7)
        with pytest.raises(ValueError, match="invalid max_n"):
            base.with_overrides(max_n=0)

    def test_module_instance_falls_back_on_bad_environment(self, monkeypatch, caplog):
        monkeypatch.setenv("EPIGEN_MAX_N", "abc")
        fallback = settings_module._default_settings()
        assert fallback.max_n == DEFAULT_MAX_N
        assert "invalid max_n" in caplog.text
