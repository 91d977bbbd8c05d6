import io
import json
from contextlib import redirect_stdout

import pytest

from fdosc import cli


@pytest.fixture(scope="session")
def verify_json_runs():
    """Two full `verify --format json` runs with identical flags."""
    outs, codes = [], []
    for _ in range(2):
        buf = io.StringIO()
        with redirect_stdout(buf):
            codes.append(cli.main([
                "verify", "--omega0", "0.5", "--g0", "0.1", "--format", "json",
            ]))
        outs.append(buf.getvalue())
    return outs, codes


@pytest.fixture(scope="session")
def report_data(verify_json_runs):
    outs, _ = verify_json_runs
    return json.loads(outs[0])


@pytest.fixture(scope="session")
def check_by_id(report_data):
    return {r["check_id"]: r for r in report_data["results"]}
