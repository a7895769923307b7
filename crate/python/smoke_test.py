"""Smoke test for the apollon_py extension module.

Build and install first:
    maturin build --release -m crates/python/Cargo.toml -o target/wheels
    pip install target/wheels/apollon_py-*.whl
"""

from fractions import Fraction

import apollon_py as ap


def main():
    keys = ap.solve_master(6)
    assert len(keys) == 3, keys
    key = ap.GasketKey(6, 2, 5, 8)
    assert key in keys
    assert ap.quintet(key) == [-6, 11, 14, 15, 23]
    assert ap.key_from_quintet([-6, 11, 14, 15, 23]) == key
    assert ap.shift(key) == Fraction(4, 5)
    assert ap.classify(key) == "skew"
    assert ap.classify(ap.GasketKey(1, 0, 1, 1)) == "window"

    try:
        ap.GasketKey(1, 0, 1, 2)
    except ValueError as e:
        assert "≠" in str(e)
    else:
        raise AssertionError("invalid key accepted")

    assert ap.descartes_holds(-1, 2, 2, 3)
    assert ap.boyd_dual(-1, 2, 2, 3) == 3
    assert ap.fourth_bends(-1, 2, 2) == (3, 3)

    records = ap.enumerate(6)
    assert records[0].symmetry == "strip"
    assert records[-1].quintet == [-6, 11, 14, 15, 23]

    window = ap.generate(ap.GasketKey(1, 0, 1, 1), 100)
    assert len(window) > 50
    assert all(c.x_dot.denominator == 1 and c.y_dot.denominator == 1 for c in window)
    assert window[0].bend == -1 and window[0].radius() == Fraction(1)

    symbols = ap.principal_symbols(key)
    assert [c.bend for c in symbols] == [-6, 11, 14, 15, 23]

    assert ap.integral_frames_predicate(ap.GasketKey(2, 0, 1, 4))
    assert not ap.integral_frames_predicate(key)
    frame = ap.principal_frame(ap.GasketKey(2, 0, 1, 4))
    assert len(frame) == 6
    for _, d, g, h in frame:
        assert d.denominator == 1 and g.denominator == 1 and d * d + g * g == h * h

    delta, h = ap.transition_matrix(0)
    assert len(delta) == 6 and len(h[0]) == 6

    svg = ap.render_svg(ap.GasketKey(1, 0, 1, 1), 30, labels="bends")
    assert svg.startswith("<svg") and "<circle" in svg

    try:
        ap.generate(ap.GasketKey.strip(), 5)
    except NotImplementedError:
        pass
    else:
        raise AssertionError("strip generation accepted")

    print("apollon_py smoke test passed")


if __name__ == "__main__":
    main()
