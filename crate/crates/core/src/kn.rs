//! Kulkarni–Nomizu product of symmetric 2-tensors.

use crate::error::{Error, Result};
use crate::tensor::Tensor;

/// `(a⊗b)(X,Y,Z,W) = a(X,W)b(Y,Z) + a(Y,Z)b(X,W) - a(X,Z)b(Y,W) - a(Y,W)b(X,Z)`.
///
/// With this normalization a metric of constant curvature `k` has
/// `R = (k/2) g⊗g`, and contracting `g⊗g` over its outer slots gives `4g`.
pub fn kulkarni_nomizu(a: &Tensor, b: &Tensor) -> Result<Tensor> {
    a.require_valence(2, 0)?;
    b.require_valence(2, 0)?;
    if !a.is_symmetric() || !b.is_symmetric() {
        return Err(Error::NotSymmetric);
    }
    Ok(kulkarni_nomizu_unchecked(a, b))
}

pub(crate) fn kulkarni_nomizu_unchecked(a: &Tensor, b: &Tensor) -> Tensor {
    Tensor::covariant(4, |i| {
        let (x, y, z, w) = (i[0], i[1], i[2], i[3]);
        &a[[x, w]] * &b[[y, z]] + &a[[y, z]] * &b[[x, w]]
            - &a[[x, z]] * &b[[y, w]]
            - &a[[y, w]] * &b[[x, z]]
    })
}
