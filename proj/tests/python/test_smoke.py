"""Smoke tests for the python module: parse, invariants, census, compile."""

import knotmosaic as km

CIRCLE = "2\n2 1\n3 4\n"
TREFOIL = "4\n0 2 1 0\n2 9 10 1\n3 10 8 4\n0 3 4 0\n"


def test_parse_and_counts():
    m = km.parse_mosaic(CIRCLE)
    assert m.n == 2
    assert km.is_suitably_connected(m)
    assert km.counts(m) == (1, 0, 0)
    assert km.serialize_mosaic(m) == CIRCLE
    assert m.tile(0, 0) == "2"


def test_invariants():
    m = km.parse_mosaic(TREFOIL)
    assert km.counts(m) == (1, 3, 0)
    assert km.jones(m) == "-t^-4 + t^-3 + t^-1"
    assert km.span_crossing_bound(m) == 3
    assert km.writhe(m) == -3
    assert km.gauss_code(m) == "O1-U2-O3-U1-O2-U3-"
    mirrored = km.mirror(m)
    assert km.jones(mirrored) == "t + t^3 - t^4"


def test_grow_shrink_canonical():
    m = km.parse_mosaic(CIRCLE)
    grown = km.grow(m)
    assert grown.n == 3
    assert km.shrink(grown) == m
    assert km.canonical_form(km.canonical_form(m)) == km.canonical_form(m)


def test_census():
    assert km.census_count(3) == "22"
    assert km.census_count(4) == "2594"
    classes = km.knot_census(4)
    polys = {cls["jones"] for cls in classes}
    assert "t + t^3 - t^4" in polys  # the trefoil class


def test_bounds():
    assert km.min_mosaic_number(3) == 4
    assert km.max_mosaic_number(3) == 14
    assert km.max_crossings(4, "knot") == 3
    assert km.max_crossings(5, "link") == 9


def test_compile_and_realizability():
    assert km.is_realizable("O1U2O3U1O2U3")
    assert not km.is_realizable("O1U2U1O2")
    m = km.compile_gauss("O1U2O3U1O2U3")
    assert km.counts(m) == (1, 3, 0)
    assert m.n <= 14
    assert km.invert_lists("O1U2O3U1O2U3") == "O1O3O2U1U2U3"

    virtual = km.compile_gauss("O1U2U1O2", allow_virtual=True)
    assert km.counts(virtual)[2] >= 1

    try:
        km.compile_gauss("O1U2U1O2")
    except km.MosaicError:
        pass
    else:
        raise AssertionError("expected MosaicError")


def test_simplify_and_render():
    kinked = km.parse_mosaic("3\n0 2 1\n2 9 4\n3 4 0\n")
    reduced = km.simplify(kinked, max_steps=64)
    assert km.counts(reduced)[1] == 0
    art = km.render_ascii(kinked)
    assert km.parse_ascii(art) == kinked
    assert km.render_svg(kinked).startswith("<svg")


def main():
    tests = [v for k, v in sorted(globals().items()) if k.startswith("test_")]
    for test in tests:
        test()
        print(f"{test.__name__}: ok")
    print(f"{len(tests)} smoke tests passed")


if __name__ == "__main__":
    main()
