import pytest

import mpdual as mp


def triangle_filtration():
    k = mp.Multifiltration(2)
    k.add([0], [0, 0])
    k.add([1], [1, 0])
    k.add([2], [0, 1])
    k.add([0, 1], [1, 0])
    k.add([0, 2], [0, 1])
    k.add([1, 2], [1, 1])
    k.add([0, 1, 2], [2, 2])
    k.validate()
    return k


def test_koszul_shape():
    c = mp.koszul(2, 3)
    assert (c.lo, c.hi) == (0, 2)
    assert [c.rank(d) for d in range(3)] == [1, 2, 1]
    assert c.gens(1) == [(1, 0), (0, 1)]
    c.validate()


def test_chain_complex_and_hilbert():
    c = mp.chain_complex(triangle_filtration(), 2)
    h = mp.hilbert(c, 1, [0, 0], [3, 3])
    # one homology class born at (1,1), killed at (2,2)
    assert h[(1, 1)] == 1
    assert h[(2, 1)] == 1
    assert h[(2, 2)] == 0
    assert h[(0, 0)] == 0


def test_cone_restrict_roundtrip():
    c = mp.chain_complex(triangle_filtration(), 3)
    zeta = mp.default_zeta(c)
    assert zeta == (2, 2)
    hat = mp.cone(c)
    assert mp.restrict(hat, list(zeta)) == c
    # homology of the cone vanishes beyond the threshold
    h = mp.hilbert(hat, 1, [0, 0], [4, 4])
    assert h[(1, 1)] == 1
    assert h[(3, 3)] == 0


def test_betti_pipelines_agree():
    c = mp.chain_complex(triangle_filtration(), 2)
    direct = mp.betti(c, 1, via="direct")
    dual = mp.betti(c, 1, via="cohomological")
    assert direct == dual == {0: [(1, 1)], 1: [(2, 2)]}
    g = mp.mfr_direct(mp.cone(c), 1)
    assert mp.resolution_length(g) == 2


def test_barcode():
    k = mp.Multifiltration(1)
    k.add([0], [0])
    k.add([1], [0])
    k.add([0, 1], [1])
    c = mp.chain_complex(k, 2)
    assert mp.barcode(c, 0) == [(0, 1)]
    assert mp.relative_barcode(k, 1, 2) == [(0, 1)]


def test_io_roundtrip():
    c = mp.koszul(2, 2)
    text = mp.serialize_complex(c)
    assert mp.parse_complex(text) == c
    k = triangle_filtration()
    back, p = mp.parse_filtration(mp.serialize_filtration(k, 5))
    assert p == 5
    assert back == k


def test_errors_surface_as_value_errors():
    with pytest.raises(ValueError):
        mp.parse_complex("not a document")
    with pytest.raises(ValueError):
        mp.mfr_direct(mp.koszul(3, 2), 0)  # three parameters unsupported


def test_random_generators_deterministic():
    a = mp.random_complex(11, 2, 3)
    b = mp.random_complex(11, 2, 3)
    assert a == b
    a.validate()
    k = mp.random_filtration(7, 2)
    k.validate()
    assert len(k) <= 300
