"""Smoke test for the updown Python module.

Build and install first:

    pip install maturin
    maturin build --release -m crates/py/Cargo.toml -o dist
    pip install dist/updown-*.whl
"""

import itertools
import math
from fractions import Fraction

import updown


def brute_count(signs):
    n = len(signs) + 1
    total = 0
    for p in itertools.permutations(range(1, n + 1)):
        if all((p[i + 1] > p[i]) == (s > 0) for i, s in enumerate(signs)):
            total += 1
    return total


def main():
    assert updown.count("-1,1,1,-1,1") == 40
    assert updown.count("d,u,u,d,u", method="triangle") == 40
    assert updown.count("1,-1,1", mask="no-fixed") == 2
    assert updown.count("-1,1,1,-1,1", mask="endpoint:2,6", method="alternant") == 2
    for route in ["oracle", "triangle", "alternant", "niven1", "det14", "det40", "lambda66", "poly"]:
        assert updown.value(6, 13, route) == 40, route

    k = updown.encode_index("-1,1,1,-1,1")
    assert k == 13
    assert updown.decode_index(6, k) == [-1, 1, 1, -1, 1]

    p = updown.construct(21)
    assert str(p) == "16*C(n,5) - 2*C(n,3) + 1*C(n,1) - 1"
    assert p.terms == [(5, 16), (3, -2), (1, 1)]
    assert p.positive_roots() == [5, 3, 1]
    assert updown.BasisPolynomial.from_json(p.to_json()) == p
    assert updown.BasisPolynomial.parse(str(p)) == p
    for method in ["permanent", "symmetric", "system", "step47"]:
        assert updown.construct(26, method) == updown.construct(26)

    for n in range(1, 8):
        row = updown.counts_all(n)
        assert sum(row) == math.factorial(n)
        for k, v in enumerate(row):
            signs = updown.decode_index(n, k)
            assert v == brute_count(signs) == updown.construct(k)(n)

    assert updown.triangle_rows("-1,1,1,-1,1")[-1] == [0, 5, 8, 9, 9, 9]
    assert updown.row_polynomial(4) == [1, 3, 5, 3, 3, 5, 3, 1]
    assert updown.row_sequence(3, 8) == [1, 2, 2, 1, 0, 0, 0, 0]
    assert [updown.euler_number(m) for m in (1, 2, 3)] == [-1, 5, -61]
    assert Fraction(*updown.bernoulli(3)) == Fraction(1, 42)

    w = updown.witness(9, 200)
    assert sorted(w) == list(range(1, 10))

    big = updown.value(40, 0b101010101010101010101010101010101010101, "poly")
    assert big > 2**64

    prof = updown.root_profile(6)
    assert prof["rational_roots"] == [(-1, 2), (2, 1), (3, 1)]

    passed, failed, _ = updown.run_verify("core", 6)
    assert failed == 0 and passed > 0

    try:
        updown.counts_all(20)
    except updown.BudgetExceeded:
        pass
    else:
        raise AssertionError("budget not enforced")
    try:
        updown.count("1,x")
    except ValueError:
        pass
    else:
        raise AssertionError("bad signature accepted")

    print("python smoke test ok")


if __name__ == "__main__":
    main()
