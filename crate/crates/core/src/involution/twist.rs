use super::{compose_linear, InvolutionError};
use crate::algebra::{constant_ratio, squarefree_class, AlgebraError};
use crate::{PMatrix, QPoly, QRatFunc};

#[derive(Clone, Debug, PartialEq)]
pub struct TwistClass {
    /// `f_dst(M x) = mu f_src(x)`.
    pub mu: QRatFunc,
    /// `mu / e^2`.
    pub ratio: QRatFunc,
    /// Squarefree representative of `ratio` modulo squares.
    pub class: QPoly,
}

impl TwistClass {
    pub fn is_trivial(&self) -> bool {
        self.class.is_one()
    }
}

/// The map `(x, u) -> (M x, e u)` carries `u^2 = f_src` onto `u^2 = d f_dst`
/// up to squares, where `d` is the returned class.
pub fn classify_twist(
    f_src: &QPoly,
    f_dst: &QPoly,
    m: &PMatrix,
    e: &QPoly,
) -> Result<TwistClass, InvolutionError> {
    let composed = compose_linear(f_dst, m);
    let mu = constant_ratio(f_src, &composed)?;
    let e2 = QRatFunc::from_poly(e * e);
    let ratio = mu.checked_div(&e2).map_err(|_| AlgebraError::ZeroInput)?;
    let class = squarefree_class(&ratio)?;
    Ok(TwistClass { mu, ratio, class })
}
