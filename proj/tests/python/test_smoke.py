import xsperner as xs


def fam(n, sets):
    return xs.Family(n, sets)


def test_family_basics():
    f = fam(3, [[1], [1, 2]])
    assert len(f) == 2
    assert [1] in f
    assert [2] not in f
    assert f.sets() == [[1], [1, 2]]
    assert xs.Family.from_hex(f.n, f.hex()) == f


def test_lattice_operators():
    f = fam(3, [[1, 2]])
    assert xs.incomparables(f) == fam(3, [[3], [1, 3], [2, 3]])
    assert xs.neighborhood(fam(2, [[1]])) == fam(2, [[], [1, 2]])
    assert xs.comparable([1], [1, 2], 3)
    assert not xs.comparable([1], [2], 3)
    assert xs.is_sperner(fam(3, [[1], [2]]))
    assert not xs.is_cross_sperner(fam(3, [[1]]), fam(3, [[1, 2]]))


def test_constructions():
    F, G = xs.theorem2_extremal(3)
    assert len(F) * len(G) == 4
    assert xs.is_cross_sperner(F, G)
    fams = xs.ktuple_construction(4, 3)
    assert len(fams) == 3
    assert xs.l_of_k(3) == 3


def test_bounds_are_python_ints():
    assert xs.f_n1(10) == 961
    assert xs.product_bound(30) == 2**56
    assert xs.ktuple_upper(20, 6) == 2**108
    assert abs(xs.lovasz_shadow_bound(3.0, 2) - 3.0) < 1e-9
    assert xs.stirling_ratio(2.0 / 9.0) > 2.0


def test_checks_and_suite():
    r = xs.check_marica_schonheim(fam(3, [[1, 2], [1, 3], [2, 3]]))
    assert r["passed"]
    s = xs.run_suite("four-functions", 4, 100, 7)
    assert s["failed"] == 0


def test_solvers():
    r = xs.max_product(3)
    assert r["exact"]
    assert int(r["value"]) == 4
    fnm = xs.f_nm(4, 1)
    assert int(fnm["fnm"]) == 9
    c = xs.connectivity_check(3)
    assert c["passed"]
