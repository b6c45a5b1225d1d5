"""Smoke test for the Python bindings. Run after `pip install ./crates/python`."""

import cmath

import similitude as s

ex = s.Matrix([["z", "1"], ["0", "0"]])
assert ex.shape == (2, 2) and ex.variables == ["z"]
assert ex.eval(["2"]) == [["2", "1"], ["0", "0"]]
assert s.Matrix([["z + z", "1"], ["0", "0"]]).rows()[0][0] == "2*z"

w = s.wasow_check(ex, ex, "0")
assert w["constant_near_point"] and w["dim_at_point"] == 2

assert s.local_smith(s.Matrix([["0", "z"], ["0", "0"]]), "0")["exponents"] == [1]
assert len(s.commutant_basis(ex, ["1/2+i"])["basis"]) == 2

nilp = s.Matrix([["0", "1"], ["0", "0"]])
zero = s.Matrix([["0", "0"], ["0", "0"]])
assert not s.pointwise_similar(nilp, zero)["similar"]
assert s.pointwise_similar(nilp, s.Matrix([["0", "0"], ["1", "0"]]), witness=True)["witness"]

ident = s.Matrix([["1", "0"], ["0", "1"]])
assert s.local_similarity(ex, ex, "-1", ident)["h"] == [["1", "0"], ["0", "1"]]

assert s.is_jordan_stable(ex, "0")["verdict"] == "unstable"
assert s.is_jordan_stable(ex, "3")["verdict"] == "stable"

assert s.jet_rigidity(0, "AHeqHB", "full")["forces_zero"]
assert s.verify_paper(0)["checks"][0]["passed"]

circle = [cmath.exp(2j * cmath.pi * k / 64) for k in range(64)]
assert s.winding_number(circle) == 1
assert s.clutching(0.125, 32)["bound_holds"]

for bad in (lambda: s.Matrix([["z+"]]), lambda: s.local_smith(ex, "1/0")):
    try:
        bad()
    except (ValueError, ZeroDivisionError):
        pass
    else:
        raise AssertionError("expected an error")

print("python smoke test: ok")
