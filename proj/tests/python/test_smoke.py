import _minrpp as m


def test_quiver_basics():
    q = m.Quiver("A3", [(1, 2), (3, 2)])
    assert q.rank == 3
    assert q.coxeter_number() == 4
    assert q.minuscule_vertices() == [1, 2, 3]
    assert len(q.positive_roots()) == 6


def test_rho_running_example():
    q = m.Quiver("A3", [(1, 2), (3, 2)])
    h = m.Heap(q, 2)
    assert h.size == 4
    parts = h.rho_partitions({"010": 1, "011": 1, "110": 1})
    assert parts == [[1], [2, 1], [1]]
    filling = h.rho({"010": 1, "011": 1, "110": 1})
    assert h.rho_inverse(filling) == {"010": 1, "011": 1, "110": 1}


def test_promotion_periodicity():
    q = m.Quiver("A3", [(1, 2), (3, 2)])
    h = m.Heap(q, 2)
    assert h.promotion_order(1) == 4
    filling = h.rho({"010": 1})
    assert h.promotion(filling, N=2, count=4) == filling


def test_heap_verification_and_iso():
    q = m.Quiver("D4")
    h = m.Heap(q, 1)
    assert h.verify()["ok"]
    assert h.iso_type() == "J([2]x[2])"


def test_oracle_matches_rho():
    q = m.Quiver("A3", [(1, 2), (3, 2)])
    h = m.Heap(q, 2)
    mults = {"010": 2, "111": 1}
    res = h.gen_jf(mults)
    assert res["samples_agree"]
    assert res["jf"] == h.rho_partitions(mults)


def test_hillman_grassl_figure():
    hooks = {"11100": 4, "01100": 3, "00110": 1, "01110": 1, "00111": 1, "11111": 2}
    assert m.hillman_grassl(3, 3, hooks) == [[0, 2, 3], [2, 2, 3], [6, 8, 10]]


def test_rsk_figure():
    hooks = {"11100": 4, "01100": 3, "01110": 1, "11111": 1, "00110": 1, "00111": 2}
    assert m.rsk(3, 3, hooks) == [[1, 1, 3], [1, 3, 4], [5, 8, 8]]


def test_cokernel_formula():
    assert m.generic_coker_jf(3, 2, 1) == [2]
    assert m.generic_coker_jf(5, 3, 2) == [4]


def test_generating_function():
    q = m.Quiver("A3", [(1, 2), (3, 2)])
    h = m.Heap(q, 2)
    assert m.generating_function_check(h, degree=6)
