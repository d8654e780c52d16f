"""scikit-learn style wrapper: polynomials in, admissible coordinates out."""

from __future__ import annotations

import numpy as np
from sklearn.base import BaseEstimator, TransformerMixin
from sklearn.utils.validation import check_is_fitted

from .monomials import format_monomial
from .spaces import quotient_space
from .validation import check_n_d, check_omega, check_part, check_polynomial


class CohitTransformer(TransformerMixin, BaseEstimator):
    """Map homogeneous polynomials to their classes in (QP_n)_d.

    ``fit`` ignores its input and builds the admissible basis; ``transform``
    returns one 0/1 row per polynomial, columns ordered like ``admissibles_``.
    """

    def __init__(self, n: int = 1, d: int = 0, omega=None, part: str = "full",
                 threads: int = 1, allow_large: bool = False):
        self.n = n
        self.d = d
        self.omega = omega
        self.part = part
        self.threads = threads
        self.allow_large = allow_large

    def fit(self, X=None, y=None):
        n, d = check_n_d(self.n, self.d)
        omega = check_omega(self.omega, d, n)
        part = check_part(self.part)
        self.space_ = quotient_space(n, d, omega, part, allow_large=self.allow_large,
                                     threads=self.threads)
        self.admissibles_ = list(self.space_.admissibles)
        self.n_features_out_ = len(self.admissibles_)
        return self

    def transform(self, X) -> np.ndarray:
        check_is_fitted(self, "space_")
        rows = []
        for f in X:
            coords = self.space_.reduce(check_polynomial(f, self.n, self.d))
            rows.append([coords >> i & 1 for i in range(self.n_features_out_)])
        return np.array(rows, dtype=np.uint8).reshape(len(rows), self.n_features_out_)

    def inverse_transform(self, X) -> list:
        check_is_fitted(self, "space_")
        X = np.asarray(X, dtype=np.uint8) & 1
        return [self.space_.polynomial(sum(int(b) << i for i, b in enumerate(row))) for row in X]

    def get_feature_names_out(self, input_features=None) -> np.ndarray:
        check_is_fitted(self, "space_")
        return np.array([format_monomial(m) for m in self.admissibles_], dtype=object)
