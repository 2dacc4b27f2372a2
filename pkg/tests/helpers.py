from importlib import resources
from pathlib import Path

from glinv.diagram import realize_diagram
from glinv.gauss import parse_gauss_code

DATA = Path(str(resources.files("glinv") / "data"))
MOVES = Path(__file__).parent / "data" / "moves"


def load(name, root=DATA):
    return realize_diagram(parse_gauss_code((root / name).read_text()))

# (criterion, passed, detail) lines collected by test_acceptance and printed in the summary
ACCEPTANCE = []


def verdict(criterion, ok, detail=""):
    line = f"{'PASS' if ok else 'FAIL'} criterion {criterion}" + (f": {detail}" if detail else "")
    ACCEPTANCE.append(line)
    print(line)
    return ok
