import pytest

from blowup_calc.config import Config, load_config
from blowup_calc.errors import ValidationError


def test_defaults(tmp_path):
    assert load_config(tmp_path, environ={}) == Config(1, "json", False)


def test_file_values(tmp_path):
    (tmp_path / "blowup.toml").write_text('epsilon = -1\noutput = "pretty"\npaper_literal_mode = true\n')
    assert load_config(tmp_path, environ={}) == Config(-1, "pretty", True)


def test_env_overrides_file(tmp_path):
    (tmp_path / "blowup.toml").write_text("epsilon = -1\n")
    assert load_config(tmp_path, environ={"BLOWUP_EPSILON": "1"}).epsilon == 1


@pytest.mark.parametrize(
    "text, env",
    [("epsilon = 2\n", {}), ('output = "xml"\n', {}), ("colour = 1\n", {}), ("epsilon = \n", {}), ("", {"BLOWUP_EPSILON": "one"})],
)
def test_bad_config(tmp_path, text, env):
    (tmp_path / "blowup.toml").write_text(text)
    with pytest.raises(ValidationError):
        load_config(tmp_path, environ=env)
