import numpy as np
import pytest
from sklearn.base import clone
from sklearn.exceptions import NotFittedError

from hitcalc import CohitTransformer, Polynomial
from hitcalc.errors import DegreeMismatch


def test_fit_transform_round_trip():
    est = CohitTransformer(n=3, d=15).fit()
    assert est.n_features_out_ == 13
    X = ["u1^7*u2^7*u3", "u1^15", Polynomial([(15, 0, 0)], 3) + Polynomial([(7, 7, 1)], 3)]
    Y = est.transform(X)
    assert Y.shape == (3, 13) and Y.dtype == np.uint8
    assert (Y[0] ^ Y[1] == Y[2]).all()
    back = est.inverse_transform(Y)
    assert (est.transform(back) == Y).all()


def test_hit_polynomial_maps_to_zero():
    est = CohitTransformer(n=2, d=2).fit()
    assert not est.transform(["u1^2 + u2^2"]).any() or est.n_features_out_ == 0


def test_weight_and_part_parameters():
    est = CohitTransformer(n=4, d=33, omega="3,1,1,1,1", part="positive").fit()
    assert est.n_features_out_ == 17
    assert len(est.get_feature_names_out()) == 17


def test_params_and_clone():
    est = CohitTransformer(n=3, d=7, part="zero")
    assert est.get_params()["part"] == "zero"
    twin = clone(est)
    assert twin.get_params() == est.get_params()
    with pytest.raises(NotFittedError):
        twin.transform(["u1^7"])


def test_rejects_bad_input():
    est = CohitTransformer(n=3, d=7).fit()
    with pytest.raises(DegreeMismatch):
        est.transform(["u1^6"])
    with pytest.raises(ValueError):
        CohitTransformer(n=0, d=3).fit()
