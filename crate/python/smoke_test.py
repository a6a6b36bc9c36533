"""Smoke test for the cliffroots_py extension module.

Build and install first, for example with `maturin develop` inside crates/python.
"""

import json
import math

import cliffroots_py as cr


def main() -> None:
    t = cr.Scalar.tau()
    assert t * t == t + cr.Scalar("1")
    assert str(cr.Scalar("1/2") * t) == "1/2*t"
    assert cr.Scalar("3+2*t").tau_basis() == ("3", "2")
    assert cr.Scalar("1/2+t").reduced() == cr.Scalar("1/2")

    e1 = cr.Multivector.vector(["1", "0", "0"])
    e2 = cr.Multivector.vector(["0", "1", "0"])
    assert (e1 * e2).terms() == [("e12", "1")]
    assert (e1 * e2 * e2).terms() == [("e1", "1")]

    counts = {name: len(cr.RootSystem.catalog(name)) for name in ["A3", "B3", "H3", "H4", "E8"]}
    assert counts == {"A3": 12, "B3": 18, "H3": 30, "H4": 120, "E8": 240}, counts

    h3 = cr.RootSystem.catalog("H3")
    assert h3.verify_axioms()["passes"]
    pin = h3.pinor_group()
    spin = pin.spin()
    assert (len(pin), len(spin)) == (240, 120)
    assert len(spin.conjugacy_class_sizes()) == 9
    assert len(spin.induce_4d()) == 120

    e8 = cr.e8_from_h3()
    assert e8["roots"] == 240 and e8["closure_matches"] and e8["cartan_matches_reference"]

    cox = cr.RootSystem.catalog("E8-cl8").coxeter(factorize=True)
    assert cox["h"] == 30
    assert cox["exponents"] == [1, 7, 11, 13, 17, 19, 23, 29]

    points = cr.RootSystem.catalog("A4").project()
    radii = sorted({round(p[3], 9) for p in points})
    assert len(radii) == 2 and abs(radii[1] / radii[0] - (1 + math.sqrt(5)) / 2) < 1e-6

    assert cr.RootSystem.catalog("D6").fold([(1, 5), (2, 4), (3, 6)])[1][2] == 5

    cartan = json.loads(cr.run(["cartan", "--system", "F4"]))
    assert len(cartan["entries"]) == 4

    try:
        cr.RootSystem.catalog("Q7")
    except cr.CliffrootsError as e:
        assert "unknown_system" in str(e)
    else:
        raise AssertionError("expected CliffrootsError")

    print("cliffroots_py smoke test passed")


if __name__ == "__main__":
    main()
