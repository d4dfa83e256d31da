import io
import runpy
from contextlib import redirect_stdout
from pathlib import Path

import pytest

DEMOS = sorted((Path(__file__).parent.parent / "demos").glob("0*.py"))


@pytest.mark.parametrize("script", DEMOS, ids=lambda p: p.name)
def test_demo_runs_clean(script):
    buffer = io.StringIO()
    with redirect_stdout(buffer):
        runpy.run_path(str(script), run_name="__main__")
    assert buffer.getvalue().strip(), "demo produced no output"


def test_demo_input_file_parses():
    from formcone import parse_session

    text = (Path(__file__).parent.parent / "demos" / "semigroup_curve.fc").read_text()
    spec = parse_session(text)
    assert spec.variables == ("X", "Y", "Z")
