"""Smoke test for the pylieconf extension.

Build with `cargo build -p lieconf-python --release`, then either install via
maturin or copy target/release/libpylieconf.so to pylieconf.so on PYTHONPATH.
"""

import json

import pylieconf


def main():
    families = pylieconf.list_families()
    assert "affine2" in families and "damekricci4" in families, families

    affine = pylieconf.instantiate("affine2")
    assert affine.dim == 2
    assert affine.signature() == (1, 1)
    assert not affine.is_unimodular()
    assert affine.conformal_space() == [["1", "0", "-1/2"]]
    assert affine.killing_space() == []
    assert affine.scalar_curvature() == "0"

    report = json.loads(affine.analyze_json(seed=1))
    assert report["solitons"][0]["lambda"] == "1/2"
    assert report["solitons"][0]["class"] == "shrinking"

    heis = pylieconf.instantiate("heisenberg3")
    assert heis.is_unimodular() and not heis.nonkilling_exists()

    again = pylieconf.Instance.from_json(affine.to_json())
    assert again.conformal_space() == affine.conformal_space()

    nonuni = pylieconf.instantiate("nonuni3", {"alpha": "1", "beta": "1"})
    ((x1, x2, x3, rho),) = nonuni.conformal_space()
    assert (x1, x2, x3, rho) == ("1", "-1/2", "-1", "-1"), (x1, x2, x3, rho)

    assert pylieconf.kernel([["1", "1"], ["1", "1"]]) == [["1", "-1"]]
    assert pylieconf.signature([["0", "1"], ["1", "0"]]) == (1, 1, 0)

    try:
        pylieconf.instantiate("nonuni3", {"alpha": "0"})
    except ValueError as e:
        assert "alpha" in str(e)
    else:
        raise AssertionError("constraint violation not raised")

    print("pylieconf smoke test passed")


if __name__ == "__main__":
    main()
