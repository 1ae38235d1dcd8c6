"""Smoke test for the Python bindings.

Build and install first:
    maturin build --release -m crates/python/Cargo.toml
    pip install target/wheels/confluent_py-*.whl
"""

import json

import confluent_py as cf


def main():
    fam = cf.Family("big-q-hermite")
    e1 = fam.nonsym_poly(1)
    assert e1 == cf.Laurent("z + q*z^-1 - q*a"), str(e1)
    assert fam.leading_data(-2)[3] == "-a"

    dqh = cf.Family("dual-q-hahn")
    assert str(dqh.nonsym_poly(-1)) == "z^-1 + a*b*c - a - b"

    v = cf.Algebra("v")
    assert str(v.apply("T1", cf.Laurent("1"))) == "-a*b"
    assert v.apply("T0*T0 + T0", cf.Laurent("z^3")).is_zero()

    d7 = cf.Algebra("iii-d7")
    assert str(d7.apply("T1", cf.Laurent("z"))) == "z^-1 - a"

    x = cf.Laurent("z - 1")
    assert (x * x - cf.Laurent("z^2 - 2*z + 1")).is_zero()
    assert json.loads(e1.to_json())["terms"][0] == {"z": -1, "coeff": "q"}

    report = json.loads(cf.run_verify("iii", "relations,eigen", 4))
    assert report["summary"]["fail"] == 0, report["summary"]
    report = json.loads(cf.run_verify("iii-d8", "actions", 4, seed=3, trials=2))
    assert report["summary"]["fail"] == 0, report["summary"]

    try:
        v.apply("T0*", x)
    except ValueError:
        pass
    else:
        raise AssertionError("malformed word accepted")

    print("python bindings OK")


if __name__ == "__main__":
    main()
