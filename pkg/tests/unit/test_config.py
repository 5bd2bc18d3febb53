"""Test configuration and environment setup."""

import os
import sys
from pathlib import Path

import pytest

# Add src to path for imports
sys.path.insert(0, os.path.join(os.path.dirname(__file__), '..', '..', 'src'))

from graph_mates.config import Config

VARIABLES = ('GRAPH_MATES_WORKERS', 'GRAPH_MATES_CHUNK_SIZE', 'GRAPH_MATES_LOG_LEVEL',
             'GRAPH_MATES_REPORTS_DIR', 'GRAPH_MATES_HASHING')


@pytest.fixture
def clean_env(monkeypatch, tmp_path):
    """No GRAPH_MATES_* variables and no env files in the working directory."""
    for name in VARIABLES:
        # recorded as unset, so values loaded from env files are removed on teardown
        monkeypatch.setenv(name, "")
        monkeypatch.delenv(name)
    monkeypatch.chdir(tmp_path)
    return monkeypatch


def test_defaults(clean_env):
    config = Config()
    assert config.workers == (os.cpu_count() or 1)
    assert config.chunk_size == 256
    assert config.log_level == 'WARNING'
    assert config.reports_dir == Path('reports')
    assert config.hashing_mode == 'exact'


def test_environment_variables(clean_env):
    clean_env.setenv('GRAPH_MATES_WORKERS', '3')
    clean_env.setenv('GRAPH_MATES_LOG_LEVEL', 'debug')
    clean_env.setenv('GRAPH_MATES_HASHING', 'Hashed')
    config = Config()
    assert config.workers == 3
    assert config.log_level == 'DEBUG'
    assert config.hashing_mode == 'hashed'


@pytest.mark.parametrize("raw", ["", "zero", "0", "-2"])
def test_invalid_integers_fall_back(clean_env, raw):
    clean_env.setenv('GRAPH_MATES_CHUNK_SIZE', raw)
    assert Config().chunk_size == 256


def test_unknown_hashing_mode_falls_back(clean_env):
    clean_env.setenv('GRAPH_MATES_HASHING', 'fuzzy')
    assert Config().hashing_mode == 'exact'


def test_env_file(clean_env, tmp_path):
    env_file = tmp_path / 'custom.env'
    env_file.write_text("GRAPH_MATES_WORKERS=5\nGRAPH_MATES_REPORTS_DIR=out\n", encoding='ascii')
    config = Config(env_file)
    assert config.workers == 5
    assert config.reports_dir == Path('out')


def test_shell_wins_over_env_file(clean_env, tmp_path):
    (tmp_path / 'config').mkdir()
    (tmp_path / 'config' / 'config.env').write_text("GRAPH_MATES_WORKERS=5\n", encoding='ascii')
    clean_env.setenv('GRAPH_MATES_WORKERS', '2')
    assert Config().workers == 2


def test_as_dict(clean_env):
    assert set(Config().as_dict()) == {'workers', 'chunk_size', 'log_level', 'reports_dir', 'hashing_mode'}


def test_template_documents_every_variable():
    project_root = Path(__file__).parent.parent.parent
    template = (project_root / 'config' / 'config_template.env').read_text()
    assert all(name in template for name in VARIABLES)
