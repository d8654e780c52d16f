from hitcalc import reference
from hitcalc.monomials import weight_vector


def test_checksums_match():
    assert reference.verify_checksums() == []
    assert len(reference._manifest()) == 24


def test_counts_and_degrees():
    assert reference.zeta().degree() == 14
    assert reference.xi().degree() == 33
    assert reference.xi_tilde().degree() == 71
    for k in reference.SIGMA5_RANGE:
        assert reference.sigma5_generator(k).degree() == 33
    adm, small = reference.adm_5_33(), reference.adm_4_33()
    assert sorted(adm) == list(range(1, 187)) and len(set(adm.values())) == 186
    assert sorted(small) == list(range(1, 18))
    assert all(weight_vector(m) == (3, 1, 1, 1, 1) for m in adm.values())
    assert all(all(m) for m in small.values())


def test_zero_and_positive_blocks():
    adm = reference.adm_5_33()
    assert all(0 in adm[k] for k in range(1, 156))
    assert all(0 not in adm[k] for k in range(156, 187))
