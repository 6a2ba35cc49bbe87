import subprocess
import sys

import pytest


def run_cli(*args, env=None, check_code=None):
    proc = subprocess.run([sys.executable, "-m", "doublecone", *args], capture_output=True, text=True, env=env)
    if check_code is not None:
        assert proc.returncode == check_code, proc.stderr
    return proc


@pytest.fixture
def cli():
    return run_cli
