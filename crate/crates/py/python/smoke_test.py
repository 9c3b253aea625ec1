"""Smoke test for the quintic_py extension module.

Build and install first, e.g. `maturin develop --release` from crates/py.
"""

import json
from fractions import Fraction

import quintic_py as q


def main():
    rows = q.instanton_numbers(4)
    assert [n for _, _, n in rows] == [2875, 609250, 317206375, 242467530000], rows
    assert rows[1][1] == Fraction(4876875, 8)

    assert q.count_lines_on_quintic() == rows[0][2]
    assert q.lines_on_hypersurface(4) == 27

    m = q.mirror_map(3)
    assert m["g"][:2] == [0, 770]
    assert q.yukawa(2) == [5, 2875, 4876875]
    assert q.verify_ode(10)
    assert q.verify_sigma_model(2, 3)

    small = q.WeightSpec("1,2,3,-1,-5")
    assert small.lambdas() == [1, 2, 3, -1, -5]
    assert all(v == "" for v in q.verify_polynomiality(small, 2, 3).values())
    assert q.recursion_coefficients(small, 1)[(0, 1, 1)] == -1440
    try:
        small.validate(2)
    except q.QuinticError as e:
        assert "not generic" in str(e)
    else:
        raise AssertionError("degenerate weights were accepted")
    try:
        q.WeightSpec([1, 1, 2, -2, -2])
    except q.QuinticError:
        pass
    else:
        raise AssertionError("repeated weights were accepted")

    for deg in q.reconstruct(q.WeightSpec(), 2):
        assert deg["matches"] and deg["nullity_per_alpha"] == [2] * 5, deg

    code, out = q.run(["instantons", "--max-degree", "3", "--json"])
    assert code == 0
    assert json.loads(out)["results"][2]["n_d"] == "317206375"
    code, _ = q.run(["verify", "polynomiality", "--lambdas", "1,2,x,-1,-5"])
    assert code == 2

    print("quintic_py smoke test passed")


if __name__ == "__main__":
    main()
