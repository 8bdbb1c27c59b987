"""Unit tests for settings, deadlines and the error hierarchy."""

import logging
import time

import pytest
from pydantic import ValidationError

from core.config import (
    Settings,
    SettingsBuilder,
    SettingsLoader,
    get_settings,
    override_settings,
    reload_settings,
)
from core.utils.logging import LoggerConfig
from core.utils.budget import check_deadline, deadline_scope, remaining_ms
from core.utils.exceptions import (
    ExceptionFactory,
    FactFileError,
    GivenThatError,
    LtlSyntaxError,
    ResourceError,
    StateCapExceededError,
    TimeoutExceededError,
    UnsupportedAcceptanceError,
    UserInputError,
    get_error_category,
    handle_errors,
    is_resource_error,
)


@pytest.mark.unit
class TestSettings:
    def test_defaults(self):
        s = get_settings()
        assert s.bdd_node_cap == 2**22
        assert s.translate_state_cap == 2**16
        assert s.max_marks == 32
        assert s.complement_state_cap == 10**5
        assert s.first_steps_depth == 2
        assert s.frontier_cap == 10**4
        assert s.bench_timeout_ms == 10_000
        assert s.bench_workers == 1
        assert s.log_level == "WARNING"
        assert s.log_json is False

    def test_environment(self, monkeypatch):
        """GIVENTHAT_* variables are read on the next load."""
        # Given: An environment override
        monkeypatch.setenv("GIVENTHAT_TRANSLATE_STATE_CAP", "8")
        monkeypatch.setenv("GIVENTHAT_LOG_LEVEL", "debug")

        # When: Reloading the settings
        s = reload_settings()

        # Then: The values are taken from the environment
        assert s.translate_state_cap == 8
        assert s.log_level == "DEBUG"

    def test_override_ignores_none(self):
        s = override_settings(translate_state_cap=128, bdd_node_cap=None)
        assert s.translate_state_cap == 128
        assert s.bdd_node_cap == 2**22
        assert get_settings() is s

    def test_override_validates(self):
        with pytest.raises(ValidationError):
            override_settings(bdd_node_cap=1)

    def test_bad_log_level(self):
        with pytest.raises(ValidationError):
            Settings(log_level="chatty")

    def test_builder(self):
        s = SettingsBuilder().with_translate_state_cap(8).with_complement_state_cap(50).build()
        assert (s.translate_state_cap, s.complement_state_cap) == (8, 50)

    def test_loader_is_lazy(self):
        assert not SettingsLoader.is_loaded()
        get_settings()
        assert SettingsLoader.is_loaded()


@pytest.mark.unit
class TestLoggerConfig:
    def test_numeric_level(self):
        assert LoggerConfig(level="debug").numeric_level == logging.DEBUG
        assert LoggerConfig().numeric_level == logging.WARNING

    def test_bad_level(self):
        with pytest.raises(ValueError, match="Invalid log level"):
            LoggerConfig(level="chatty")


@pytest.mark.unit
class TestDeadline:
    def test_no_deadline_by_default(self):
        assert remaining_ms() is None
        check_deadline()

    def test_expired_deadline(self):
        with deadline_scope(1):
            time.sleep(0.01)
            with pytest.raises(TimeoutExceededError) as excinfo:
                check_deadline("translate")
        assert excinfo.value.details == {"operation": "translate", "timeout_ms": 1}

    def test_scopes_nest_and_restore(self):
        with deadline_scope(60_000):
            assert remaining_ms() > 0
            with deadline_scope(0):
                assert remaining_ms() is None
            assert remaining_ms() is not None
        assert remaining_ms() is None


@pytest.mark.unit
class TestErrors:
    def test_categories(self):
        assert get_error_category(ExceptionFactory.state_cap_exceeded("translate", 8)) == "resource"
        assert get_error_category(LtlSyntaxError("bad")) == "user_input"
        assert get_error_category(KeyError("x")) == "unknown"
        assert is_resource_error(ExceptionFactory.timeout_exceeded("bench", 5))
        assert not is_resource_error(FactFileError("bad"))

    def test_hierarchy(self):
        assert issubclass(UnsupportedAcceptanceError, UserInputError)
        assert issubclass(StateCapExceededError, ResourceError)

    def test_syntax_error_position(self):
        err = ExceptionFactory.syntax_error("expected ')'", "F (a", 4)
        assert err.position == 4
        assert "position 4" in err.message

    def test_str_carries_details(self):
        err = ExceptionFactory.state_cap_exceeded("translate", 8)
        assert str(err) == "State cap exceeded in translate (operation=translate, cap=8)"

    def test_handle_errors_reraises(self):
        with pytest.raises(FactFileError) as excinfo, handle_errors(OSError, reraise_as=FactFileError, source="x"):
            raise OSError("disk")
        assert excinfo.value.details == {"original_error": "disk", "source": "x"}
        assert isinstance(excinfo.value, GivenThatError)
