"""Smoke test for the linksgould_py extension.

Build and install first:  pip install --no-build-isolation ./crates/py
"""
import json
import sys

import linksgould_py as lg

TREFOIL = "1 - t1 + t1^2 - t0 + 2*t0*t1 - t0*t1^2 + t0^2 - t0^2*t1"


def main():
    assert lg.lg_invariant("[1,1,1]", 2) == TREFOIL
    assert lg.lg_invariant("[-1,-1,-1]", 2) != TREFOIL
    assert lg.components("[1,1]", 2) == 2

    rows = lg.dims(8)
    assert [r[1] for r in rows[:5]] == ["1", "3", "20", "175", "1764"]
    assert all(d == f for _, d, f in rows)

    code, out, _ = lg.run(["--json", "compute", "--strands", "2", "--braid", "[1,1,1]"])
    assert code == 0 and json.loads(out)["lg"] == TREFOIL

    code, _, err = lg.run(["compute", "--strands", "2", "--braid", "[5]"])
    assert code == 2 and err

    try:
        lg.lg_invariant("[1,x]", 2)
    except ValueError:
        pass
    else:
        raise AssertionError("bad braid accepted")

    print("smoke test ok")


if __name__ == "__main__":
    sys.exit(main())
