import json
import subprocess
import sys


def run_cli(*args, timeout=600):
    """Run the CLI in a fresh interpreter; returns CompletedProcess."""
    return subprocess.run(
        [sys.executable, "-m", "orthocoords", *args],
        capture_output=True, text=True, timeout=timeout,
    )


def load_json(path):
    with open(path) as fh:
        return json.load(fh)
